#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mvtop/maps.hpp"
#include "mvtop/topology.hpp"

namespace mvtop {

inline constexpr std::size_t kDefaultMaxProductPoints = 1'000'000;

/// Finite product of MV-topological spaces sharing one chain.
///
/// Points are tuples of factor indices in lexicographic order (the first
/// factor varies slowest) and are labelled "(l1,l2,...)". The subbase
/// {alpha o pi_i : alpha open in factor i} is built eagerly; the product
/// topology is materialized on first request. Copies share the
/// materialization, which is guarded by a mutex.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<Topology> factors,
                        std::size_t max_points = kDefaultMaxProductPoints);

  const std::vector<Topology>& factors() const noexcept { return factors_; }
  const Topology& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }
  const Chain& chain() const noexcept { return factors_.front().chain(); }
  std::size_t points() const noexcept { return carrier_.size(); }
  MvAlgebra algebra() const { return MvAlgebra(chain(), points()); }

  const Family& subbase() const noexcept { return subbase_; }
  const std::vector<PointMap>& projections() const noexcept { return projections_; }
  const PointMap& projection(std::size_t i) const { return projections_.at(i); }

  std::vector<std::size_t> coordinates(std::size_t point) const;
  std::size_t point_of(std::span<const std::size_t> coordinates) const;

  /// The generated product topology; throws ResourceError past `max_opens`.
  const Topology& topology(std::size_t max_opens = kDefaultMaxOpens) const;
  bool is_materialized() const;

 private:
  struct Lazy;

  std::vector<Topology> factors_;
  Carrier carrier_;
  std::vector<PointMap> projections_;
  Family subbase_;
  std::shared_ptr<Lazy> lazy_;
};

/// y -> (f_1(y), ..., f_k(y)); the unique map with pi_i o f = f_i.
PointMap tupling(std::span<const PointMap> maps, const ProductSpace& product);

struct UniversalPropertyReport {
  PointMap tupled;
  bool continuous = false;  // checked on the base generated by the subbase
  bool commutes = false;    // pi_i o f == f_i for all i
  bool unique = false;      // no other point satisfies all coordinate constraints

  bool ok() const noexcept { return continuous && commutes && unique; }
};

/// Throws PreconditionError naming the first f_i that is not continuous.
UniversalPropertyReport verify_universal_property(const ProductSpace& product,
                                                  const Topology& source,
                                                  std::span<const PointMap> maps);

/// Separating opens for two distinct product points built from a factor
/// witness: o_x o pi_j and o_y o pi_j where j is the first coordinate in
/// which the points differ. nullopt if that factor cannot separate them.
std::optional<HausdorffWitness> product_separation(const ProductSpace& product,
                                                   std::size_t x, std::size_t y);

}  // namespace mvtop
