#pragma once

// Brute-force reference implementations. Each one follows a definition
// directly and shares no search code with the production routines it is
// compared against; they are meant for tiny instances only.

#include <optional>
#include <span>
#include <vector>

#include "mvtop/covers.hpp"
#include "mvtop/fuzzy.hpp"

namespace mvtop::oracle {

/// Alternates a full pass of binary oplus/odot/meet products with the
/// join of every subfamily (plus 0 and 1) until nothing changes.
Family naive_generate(const MvAlgebra& algebra, const Family& subbase);

/// Scans every multiplicity vector in 0..n over `gamma` (canonical order,
/// odometer order) and returns the first whose truncated sum is 1.
std::optional<std::vector<int>> additive_cover_by_enumeration(const MvAlgebra& algebra,
                                                              const Family& gamma);

/// Explores every reachable truncated sum of copies of `members`
/// (0..n copies each) and rebuilds a certificate when 1 is reachable.
/// Throws ResourceError past `max_states` distinct sums.
std::optional<CoverCertificate> certificate_search(const MvAlgebra& algebra,
                                                   std::span<const FuzzySet> members,
                                                   std::size_t max_states = 1u << 20);

/// Minimum total multiplicity over all vectors in 0..n; ties go to the
/// lexicographically greatest vector in canonical order.
std::optional<CoverCertificate> exhaustive_min_additive_cover(const MvAlgebra& algebra,
                                                              const Family& gamma);

/// Smallest subfamily with join 1; ties go to the lexicographically
/// smallest index list.
std::optional<Family> exhaustive_min_subcover(const MvAlgebra& algebra,
                                              const Family& gamma);

/// Continuity straight from the definition, without the Family index.
bool continuous_by_definition(const PointMap& f, const Family& domain_opens,
                              const Family& codomain_opens);

}  // namespace mvtop::oracle
