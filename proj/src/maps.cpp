#include "mvtop/maps.hpp"

namespace mvtop {

namespace {

void check_shapes(const PointMap& f, const Topology& domain, const Topology& codomain) {
  if (f.domain_size() != domain.points() || f.codomain_size() != codomain.points()) {
    throw InputError("map shape " + std::to_string(f.domain_size()) + " -> " +
                     std::to_string(f.codomain_size()) + " does not match spaces " +
                     std::to_string(domain.points()) + " -> " +
                     std::to_string(codomain.points()));
  }
  if (!(domain.chain() == codomain.chain())) {
    throw InputError("spaces use different chains");
  }
}

}  // namespace

MapCheck check_continuous(const PointMap& f, const Topology& domain,
                          const Topology& codomain) {
  check_shapes(f, domain, codomain);
  return check_continuous_via_base(f, domain, codomain.opens());
}

MapCheck check_continuous_via_base(const PointMap& f, const Topology& domain,
                                   const Family& theta) {
  if (f.domain_size() != domain.points()) {
    throw InputError("map domain does not match the domain space");
  }
  for (const auto& t : theta) {
    if (!domain.opens().contains(mv_preimage(f, t))) return MapCheck{false, t};
  }
  return {};
}

MapCheck check_open_map(const PointMap& f, const Topology& domain,
                        const Topology& codomain) {
  check_shapes(f, domain, codomain);
  for (const auto& o : domain.opens()) {
    if (!codomain.opens().contains(forward_image(f, o))) return MapCheck{false, o};
  }
  return {};
}

MapCheck check_closed_map(const PointMap& f, const Topology& domain,
                          const Topology& codomain) {
  check_shapes(f, domain, codomain);
  const Family target = closed_sets(codomain);
  for (const auto& c : closed_sets(domain)) {
    if (!target.contains(forward_image(f, c))) return MapCheck{false, c};
  }
  return {};
}

bool is_homeomorphism(const PointMap& f, const Topology& domain,
                      const Topology& codomain) {
  check_shapes(f, domain, codomain);
  if (!f.is_bijective()) return false;
  return is_continuous(f, domain, codomain) &&
         is_continuous(f.inverse(), codomain, domain);
}

}  // namespace mvtop
