#pragma once

#include <optional>

#include "mvtop/topology.hpp"

namespace mvtop {

/// Outcome of a morphism predicate, with the first counterexample open
/// (or closed) set in canonical order on failure.
struct MapCheck {
  bool holds = true;
  std::optional<FuzzySet> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// Every open of `codomain` pulls back to an open of `domain`.
MapCheck check_continuous(const PointMap& f, const Topology& domain,
                          const Topology& codomain);

/// Preimages of the members of `theta` are open in `domain`. Equivalent to
/// continuity whenever theta is a base of the codomain topology.
MapCheck check_continuous_via_base(const PointMap& f, const Topology& domain,
                                   const Family& theta);

/// Sup-images of opens are open.
MapCheck check_open_map(const PointMap& f, const Topology& domain,
                        const Topology& codomain);
/// Sup-images of closed sets are closed.
MapCheck check_closed_map(const PointMap& f, const Topology& domain,
                          const Topology& codomain);

inline bool is_continuous(const PointMap& f, const Topology& x, const Topology& y) {
  return check_continuous(f, x, y).holds;
}
inline bool is_open_map(const PointMap& f, const Topology& x, const Topology& y) {
  return check_open_map(f, x, y).holds;
}
inline bool is_closed_map(const PointMap& f, const Topology& x, const Topology& y) {
  return check_closed_map(f, x, y).holds;
}
/// Bijective with f and its inverse continuous.
bool is_homeomorphism(const PointMap& f, const Topology& domain,
                      const Topology& codomain);

}  // namespace mvtop
