#pragma once

// Seeded randomized suites checking the library against brute-force
// oracles and the structural theorems it implements.
//
// Every case draws from its own generator seeded by (suite seed, case
// index), so a case can be replayed in isolation. A failing case is
// shrunk by replaying it with smaller size bounds; the report keeps the
// smallest size that still fails.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mvtop/covers.hpp"
#include "mvtop/document.hpp"
#include "mvtop/product.hpp"
#include "mvtop/term.hpp"

namespace mvtop::verify {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct SpaceBounds {
  std::size_t min_points = 1;
  std::size_t max_points = 3;
  int min_chain = 1;
  int max_chain = 2;
  std::size_t max_subbase = 3;
  std::size_t max_opens = kDefaultMaxOpens;
};

FuzzySet random_set(Rng& rng, const MvAlgebra& algebra);
Family random_family(Rng& rng, const MvAlgebra& algebra, std::size_t max_size);
PointMap random_map(Rng& rng, std::size_t domain, std::size_t codomain);
Term random_term(Rng& rng, std::size_t max_depth, std::size_t arity);

/// Generated from a random subbase; resampled until the opens fit
/// bounds.max_opens (falls back to the indiscrete topology).
Topology random_topology(Rng& rng, const SpaceBounds& bounds);
Topology random_topology(Rng& rng, const Carrier& carrier, const Chain& chain,
                         const SpaceBounds& bounds);

enum class SpaceClass { any, hausdorff, zero_dimensional, stone };

/// A random topology in the given class. The subbase is biased towards
/// the class and the result is filtered by the class predicate.
Topology random_space_in(Rng& rng, SpaceClass cls, const Carrier& carrier,
                         const Chain& chain, const SpaceBounds& bounds);

/// Members pulled back from factor opens whose join is the top set.
std::vector<SubbasicMember> random_subbasic_cover(Rng& rng, const ProductSpace& product);

/// The ideal of all sets vanishing outside `zone`.
Family support_ideal(const MvAlgebra& algebra, const std::vector<bool>& zone);

/// Number of (axiom, triple) violations over all triples of L_n.
std::size_t algebra_violations(int n);

struct SuiteOptions {
  bool inject_noncover = false;  // lemma1: feed non-covers on purpose
};

struct Failure {
  std::uint64_t index = 0;
  std::uint64_t case_seed = 0;
  int size = 0;
  std::string message;
  Json instance;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t precondition_errors = 0;
  std::uint64_t checks = 0;
  std::optional<Failure> first_failure;  // after shrinking

  bool ok() const noexcept { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed, std::uint64_t cases,
                      SuiteOptions options = {});

Json to_json(const SuiteReport& report);

}  // namespace mvtop::verify
