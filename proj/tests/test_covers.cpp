#include "doctest.h"

#include "mvtop/covers.hpp"
#include "mvtop/oracle.hpp"
#include "mvtop/verify.hpp"

using namespace mvtop;

namespace {

FuzzySet fs(std::initializer_list<int> v) {
  std::vector<Value> out;
  for (int x : v) out.push_back(static_cast<Value>(x));
  return FuzzySet(std::move(out));
}

CoverCertificate cert(std::initializer_list<std::pair<FuzzySet, long long>> entries) {
  std::vector<CoverEntry> out;
  for (const auto& [s, m] : entries) out.push_back(CoverEntry{s, m});
  return CoverCertificate(std::move(out));
}

bool drawn_from(const CoverCertificate& c, const Family& gamma, int n) {
  for (const auto& e : c.entries()) {
    if (!gamma.contains(e.set) || e.multiplicity < 1 || e.multiplicity > n) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("certificates merge repeated sets") {
  const CoverCertificate c = cert({{fs({1, 1}), 1}, {fs({2, 0}), 0}, {fs({1, 1}), 1}});
  REQUIRE(c.size() == 1);
  CHECK(c.entries()[0] == CoverEntry{fs({1, 1}), 2});
  CHECK(c.total() == 2);
  CHECK(c.sum(MvAlgebra(Chain(2), 2)) == fs({2, 2}));
}

TEST_CASE("covers and additive covers") {
  const MvAlgebra alg(Chain(2), 2);
  CHECK(is_cover(alg, Family{alg.one()}));
  CHECK(is_cover(alg, Family{fs({1, 2}), fs({2, 0})}));
  CHECK_FALSE(is_cover(alg, Family{fs({1, 2}), fs({1, 0})}));
  CHECK_FALSE(is_cover(alg, Family{}));
  CHECK(is_additive_cover(alg, cert({{fs({1, 1}), 2}})));
  CHECK_FALSE(is_additive_cover(alg, cert({{fs({1, 1}), 1}, {fs({2, 0}), 1}})));
  CHECK_FALSE(is_additive_cover(alg, CoverCertificate{}));
}

TEST_CASE("find an additive subcover") {
  const MvAlgebra alg(Chain(2), 2);
  const auto a = find_additive_subcover(alg, Family{fs({1, 2}), fs({2, 0})});
  REQUIRE(a);
  CHECK(*a == cert({{fs({1, 2}), 1}, {fs({2, 0}), 1}}));
  const auto b = find_additive_subcover(alg, Family{fs({1, 1})});
  REQUIRE(b);
  CHECK(*b == cert({{fs({1, 1}), 2}}));
  CHECK_FALSE(find_additive_subcover(alg, Family{fs({0, 2})}));
  CHECK_FALSE(find_additive_subcover(alg, Family{}));
}

TEST_CASE("support criterion agrees with exhaustive enumeration") {
  for (int n = 1; n <= 2; ++n) {
    for (std::size_t points = 1; points <= 3; ++points) {
      const MvAlgebra alg(Chain(n), points);
      const auto all = enumerate_all(alg);
      verify::Rng rng(static_cast<std::uint64_t>(n * 10 + static_cast<int>(points)));
      for (int i = 0; i < 200; ++i) {
        std::vector<FuzzySet> pick;
        const auto k = rng.below(5) + 1;
        for (std::size_t j = 0; j < k; ++j) pick.push_back(all[rng.below(all.size())]);
        const Family gamma(pick);
        const bool want = oracle::additive_cover_by_enumeration(alg, gamma).has_value();
        REQUIRE(supports_cover(alg, gamma) == want);
        const auto found = find_additive_subcover(alg, gamma);
        REQUIRE(found.has_value() == want);
        if (found) {
          REQUIRE(is_additive_cover(alg, *found));
          REQUIRE(drawn_from(*found, gamma, n));
        }
        const auto loose = find_additive_subcover(alg, gamma, false);
        if (loose) REQUIRE(found->total() <= loose->total());
      }
    }
  }
}

TEST_CASE("minimal additive cover") {
  const MvAlgebra alg(Chain(2), 2);
  const auto r = minimal_additive_cover(alg, Family{fs({1, 1}), fs({2, 0})});
  REQUIRE(r.solution);
  CHECK(*r.solution == cert({{fs({1, 1}), 2}}));
  CHECK(r.solution->total() == 2);
  const auto top = minimal_additive_cover(alg, Family{fs({1, 0}), alg.one()});
  REQUIRE(top.solution);
  CHECK(*top.solution == cert({{alg.one(), 1}}));
  CHECK_FALSE(minimal_additive_cover(alg, Family{fs({0, 2})}).solution);
  const MvAlgebra crisp(Chain(1), 3);
  const auto parts = minimal_additive_cover(crisp, Family{fs({1, 0, 0}), fs({0, 1, 1})});
  REQUIRE(parts.solution);
  CHECK(*parts.solution == cert({{fs({1, 0, 0}), 1}, {fs({0, 1, 1}), 1}}));
}

TEST_CASE("minimal additive cover respects the node limit") {
  const MvAlgebra alg(Chain(3), 4);
  const Family gamma{fs({1, 0, 1, 0}), fs({0, 1, 0, 1}), fs({1, 1, 0, 0}), fs({0, 0, 1, 1}),
                     fs({1, 0, 0, 1}), fs({0, 1, 1, 0})};
  CHECK_THROWS_AS(minimal_additive_cover(alg, gamma, SolverLimits{2}), ResourceError);
  CHECK(minimal_additive_cover(alg, gamma).solution);
}

TEST_CASE("minimal subcover") {
  const MvAlgebra two(Chain(2), 2);
  const auto top = minimal_subcover(two, Family{fs({1, 0}), two.one(), fs({0, 2})});
  REQUIRE(top.solution);
  CHECK(*top.solution == Family{two.one()});
  const MvAlgebra crisp(Chain(1), 2);
  const auto one = minimal_subcover(crisp, Family{fs({1, 0}), fs({0, 1}), fs({1, 1})});
  REQUIRE(one.solution);
  CHECK(*one.solution == Family{fs({1, 1})});
  const auto both = minimal_subcover(two, Family{fs({2, 1}), fs({1, 2})});
  REQUIRE(both.solution);
  CHECK(both.solution->size() == 2);
  CHECK_FALSE(minimal_subcover(two, Family{fs({1, 1})}).solution);
}

TEST_CASE("solvers match exhaustive search") {
  verify::Rng rng(17);
  int feasible = 0;
  for (int i = 0; i < 300; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 3)));
    const MvAlgebra alg(chain, static_cast<std::size_t>(rng.between(1, 4)));
    const Family gamma = verify::random_family(rng, alg, 6);
    const auto got = minimal_additive_cover(alg, gamma);
    const auto want = oracle::exhaustive_min_additive_cover(alg, gamma);
    REQUIRE(got.solution == want);
    if (got.solution) {
      ++feasible;
      REQUIRE(is_additive_cover(alg, *got.solution));
      REQUIRE(drawn_from(*got.solution, gamma, chain.resolution()));
    }
    const auto sub = minimal_subcover(alg, gamma);
    REQUIRE(sub.solution == oracle::exhaustive_min_subcover(alg, gamma));
    if (sub.solution) REQUIRE(is_cover(alg, *sub.solution));
  }
  CHECK(feasible > 60);
}

TEST_CASE("compactness of small spaces") {
  const Topology ind = Topology::indiscrete(Carrier({"a", "b"}), Chain(2));
  CHECK(is_compact(ind));
  CHECK(is_compact(ind, true));
  const Topology one = generate_from_subbase(Carrier({"x"}), Chain(2), Family{fs({1})});
  const CompactnessReport r = check_compact(one, CompactnessMode::oracle);
  CHECK(r.holds);
  CHECK(r.mode == CompactnessMode::oracle);
  CHECK(r.covers_checked == 4);
  const MvAlgebra alg = one.algebra();
  for (const auto& [cover, c] : r.certificates) {
    CHECK(is_cover(alg, cover));
    CHECK(is_additive_cover(alg, c));
    CHECK(drawn_from(c, cover, 2));
  }
  CHECK(is_additive_cover(alg, cert({{fs({2}), 1}})));
  CHECK(is_additive_cover(alg, cert({{fs({1}), 2}})));
  CHECK(check_strongly_compact(one, CompactnessMode::oracle).holds);
  CHECK(check_compact(one, CompactnessMode::analytic).covers_checked == 0);
}

TEST_CASE("oracle compactness on random spaces") {
  verify::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    verify::SpaceBounds b;
    b.max_opens = 40;
    const Topology tau = verify::random_topology(rng, b);
    const CompactnessReport r = check_compact(tau, CompactnessMode::oracle);
    REQUIRE(r.holds);
    REQUIRE_FALSE(r.counterexample);
    for (const auto& [cover, c] : r.certificates) {
      REQUIRE(is_additive_cover(tau.algebra(), c));
      REQUIRE(drawn_from(c, cover, tau.chain().resolution()));
    }
    REQUIRE(check_strongly_compact(tau, CompactnessMode::oracle).holds);
  }
}

TEST_CASE("oracle compactness refuses oversized searches") {
  const MvAlgebra alg(Chain(3), 3);
  const Topology big = Topology::from_opens(Carrier::indexed(3), Chain(3),
                                            Family(enumerate_all(alg)));
  OracleLimits limits;
  limits.max_covers = 10;
  CHECK_THROWS_AS(check_compact(big, CompactnessMode::oracle, limits), ResourceError);
}

TEST_CASE("subbasic subcover of a product") {
  const Topology s = generate_from_subbase(Carrier({"x"}), Chain(2), Family{fs({1})});
  const ProductSpace p({s, s});
  const std::vector<SubbasicMember> top{{0, fs({2})}};
  const auto a = product_subbasic_subcover(p, top);
  CHECK(a.factor == 0);
  CHECK(a.certificate == cert({{fs({2}), 1}}));
  const std::vector<SubbasicMember> half{{0, fs({1})}};
  const auto b = product_subbasic_subcover(p, half);
  CHECK(b.factor == 0);
  CHECK(b.certificate == cert({{fs({1}), 2}}));

  const Topology crisp = generate_from_subbase(Carrier({"a", "b"}), Chain(1),
                                               Family{fs({1, 0}), fs({0, 1})});
  const ProductSpace q({crisp, crisp});
  const std::vector<SubbasicMember> holes{{0, fs({1, 0})}, {1, fs({0, 1})}};
  CHECK_THROWS_AS(product_subbasic_subcover(q, holes), PreconditionError);
  try {
    product_subbasic_subcover(q, holes);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("(b,a)") != std::string::npos);
  }
  const std::vector<SubbasicMember> second{{0, fs({1, 0})}, {1, fs({1, 0})}, {1, fs({0, 1})}};
  const auto c = product_subbasic_subcover(q, second);
  CHECK(c.factor == 1);
  CHECK(c.certificate == cert({{fs({0, 1, 0, 1}), 1}, {fs({1, 0, 1, 0}), 1}}));
  CHECK(is_additive_cover(q.algebra(), c.certificate));
}
