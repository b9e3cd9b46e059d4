#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mvtop/product.hpp"
#include "mvtop/topology.hpp"

namespace mvtop {

struct CoverEntry {
  FuzzySet set;
  long long multiplicity = 1;

  bool operator==(const CoverEntry&) const = default;
};

/// A multiset of fuzzy sets, stored as distinct sets in canonical order
/// with positive multiplicities. It witnesses an additive cover when the
/// truncated sum of all copies is 1.
class CoverCertificate {
 public:
  CoverCertificate() = default;
  /// Merges repeated sets and drops zero multiplicities.
  explicit CoverCertificate(std::vector<CoverEntry> entries);

  const std::vector<CoverEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  long long total() const;
  FuzzySet sum(const MvAlgebra& algebra) const;

  bool operator==(const CoverCertificate&) const = default;

 private:
  std::vector<CoverEntry> entries_;
};

bool is_cover(const MvAlgebra& algebra, const Family& gamma);
bool is_additive_cover(const MvAlgebra& algebra, const CoverCertificate& cert);

/// For a finite carrier over L_n a family contains an additive cover
/// exactly when the supports of its members cover every point: n copies
/// of any member that is positive at x already reach the top at x.
bool supports_cover(const MvAlgebra& algebra, const Family& gamma);

/// A certificate drawn from `gamma` (multiplicities <= n), or nullopt if
/// none exists. Points are visited in order; each still-deficient point
/// takes enough copies of the member largest there (first in canonical
/// order on ties). With `minimize`, multiplicities are then lowered one
/// entry at a time while the certificate stays valid.
std::optional<CoverCertificate> find_additive_subcover(const MvAlgebra& algebra,
                                                       const Family& gamma,
                                                       bool minimize = true);

inline constexpr std::size_t kDefaultMaxNodes = 1'000'000;

struct SolverLimits {
  std::size_t max_nodes = kDefaultMaxNodes;
};

template <typename T>
struct SolveResult {
  std::optional<T> solution;
  std::size_t nodes = 0;  // branch-and-bound nodes over both search phases
};

/// Minimum total multiplicity certificate: choose m_a in 0..n minimising
/// sum m_a subject to sum_a m_a * a(x) >= n at every point x.
///
/// Among optimal certificates the one whose multiplicity vector, read in
/// the canonical order of `gamma`, is lexicographically greatest is
/// returned. Throws ResourceError past `limits.max_nodes`.
SolveResult<CoverCertificate> minimal_additive_cover(const MvAlgebra& algebra,
                                                     const Family& gamma,
                                                     SolverLimits limits = {});

/// Smallest subfamily with join 1; among those, the lexicographically
/// smallest list of canonical indices.
SolveResult<Family> minimal_subcover(const MvAlgebra& algebra, const Family& gamma,
                                     SolverLimits limits = {});

enum class CompactnessMode {
  analytic,  // finite spaces over L_n are always compact
  oracle,    // exhaustive search over open covers with explicit certificates
};

struct OracleLimits {
  /// Up to this many opens every subfamily is enumerated; above it the
  /// oracle walks the selector tree described in check_compact.
  std::size_t max_exhaustive_opens = 16;
  std::size_t max_covers = 5'000'000;
  std::size_t max_states = 1u << 20;
};

struct CompactnessReport {
  bool holds = true;
  CompactnessMode mode = CompactnessMode::analytic;
  std::size_t covers_checked = 0;
  /// Oracle mode: (cover, certificate) pairs, capped at kMaxRecorded.
  std::vector<std::pair<Family, CoverCertificate>> certificates;
  /// A cover without the required subcover, when `holds` is false.
  std::optional<Family> counterexample;

  static constexpr std::size_t kMaxRecorded = 64;
};

/// Every open cover contains an additive cover.
///
/// In oracle mode small topologies are checked by enumerating every
/// subfamily of the opens. Larger ones use a selector tree: starting from
/// the empty family, branch on each open that reaches the top at the first
/// point not yet reaching it. A branch stops once its family contains an
/// additive cover (every superset then does too); reaching a full cover
/// without one is a counterexample. Every cover contains the family at the
/// end of one branch, so this decides compactness exactly. Certificates
/// come from a reachable-sum search that does not use supports_cover.
CompactnessReport check_compact(const Topology& tau, CompactnessMode mode,
                                OracleLimits limits = {});

/// Every open cover contains a finite subcover.
CompactnessReport check_strongly_compact(const Topology& tau, CompactnessMode mode,
                                         OracleLimits limits = {});

inline bool is_compact(const Topology& tau, bool oracle = false) {
  return check_compact(tau, oracle ? CompactnessMode::oracle : CompactnessMode::analytic)
      .holds;
}

/// A subbasic open alpha o pi_factor of a product space.
struct SubbasicMember {
  std::size_t factor;
  FuzzySet set;  // open set of the factor

  bool operator==(const SubbasicMember&) const = default;
};

struct SubbasicSubcover {
  std::size_t factor;           // the index j every entry is pulled back from
  CoverCertificate certificate; // entries are preimages along pi_j
};

/// Additive subcover of a cover made of subbasic opens.
///
/// Finds the first factor j on which the members pulled back from j are
/// positive at every point, gives each point x of factor j the first such
/// member alpha_x with the least multiplicity reaching the top at x, and
/// keeps one entry per distinct alpha_x. Throws PreconditionError when no
/// factor qualifies: then the family misses the tuple (a_0, a_1, ...) of
/// points missed in each factor, and the message names it.
SubbasicSubcover product_subbasic_subcover(const ProductSpace& product,
                                           std::span<const SubbasicMember> gamma);

}  // namespace mvtop
