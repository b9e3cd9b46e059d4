#include "mvtop/product.hpp"

#include <mutex>
#include <optional>

namespace mvtop {

struct ProductSpace::Lazy {
  std::mutex mutex;
  std::optional<Topology> topology;
};

namespace {

Carrier tuple_carrier(const std::vector<Topology>& factors, std::size_t max_points) {
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (total > max_points / f.points()) {
      throw ResourceError("product carrier exceeds " + std::to_string(max_points) +
                          " points");
    }
    total *= f.points();
  }
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t p = 0; p < total; ++p) {
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) label += ',';
      label += factors[i].carrier().label(idx[i]);
    }
    labels.push_back(label + ")");
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++idx[i] < factors[i].points()) break;
      idx[i] = 0;
    }
  }
  return Carrier(std::move(labels));
}

}  // namespace

ProductSpace::ProductSpace(std::vector<Topology> factors, std::size_t max_points)
    : factors_(std::move(factors)),
      carrier_(factors_.empty() ? throw InputError("product needs at least one factor")
                                : tuple_carrier(factors_, max_points)),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto& f : factors_) {
    if (!(f.chain() == chain())) throw InputError("product factors use different chains");
  }
  std::vector<FuzzySet> subbase;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<std::size_t> images(points());
    for (std::size_t p = 0; p < points(); ++p) images[p] = coordinates(p)[i];
    projections_.emplace_back(points(), factors_[i].points(), std::move(images));
    for (const auto& o : factors_[i].opens()) {
      subbase.push_back(mv_preimage(projections_.back(), o));
    }
  }
  subbase_ = Family(std::move(subbase));
}

std::vector<std::size_t> ProductSpace::coordinates(std::size_t point) const {
  if (point >= points()) throw InputError("product point index out of range");
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = point % factors_[i].points();
    point /= factors_[i].points();
  }
  return out;
}

std::size_t ProductSpace::point_of(std::span<const std::size_t> coordinates) const {
  if (coordinates.size() != factors_.size()) {
    throw InputError("tuple has wrong number of coordinates");
  }
  std::size_t p = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (coordinates[i] >= factors_[i].points()) {
      throw InputError("tuple coordinate out of range");
    }
    p = p * factors_[i].points() + coordinates[i];
  }
  return p;
}

const Topology& ProductSpace::topology(std::size_t max_opens) const {
  std::lock_guard lock(lazy_->mutex);
  if (!lazy_->topology) {
    lazy_->topology = generate_from_subbase(carrier_, chain(), subbase_, max_opens);
  }
  return *lazy_->topology;
}

bool ProductSpace::is_materialized() const {
  std::lock_guard lock(lazy_->mutex);
  return lazy_->topology.has_value();
}

PointMap tupling(std::span<const PointMap> maps, const ProductSpace& product) {
  if (maps.size() != product.factor_count()) {
    throw InputError("tupling needs one map per factor");
  }
  const std::size_t source = maps.front().domain_size();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].domain_size() != source ||
        maps[i].codomain_size() != product.factor(i).points()) {
      throw InputError("map " + std::to_string(i) + " does not match factor " +
                       std::to_string(i));
    }
  }
  std::vector<std::size_t> images(source);
  std::vector<std::size_t> coords(maps.size());
  for (std::size_t y = 0; y < source; ++y) {
    for (std::size_t i = 0; i < maps.size(); ++i) coords[i] = maps[i](y);
    images[y] = product.point_of(coords);
  }
  return PointMap(source, product.points(), std::move(images));
}

UniversalPropertyReport verify_universal_property(const ProductSpace& product,
                                                  const Topology& source,
                                                  std::span<const PointMap> maps) {
  if (maps.size() != product.factor_count()) {
    throw InputError("universal property needs one map per factor");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].domain_size() != source.points()) {
      throw InputError("map " + std::to_string(i) + " does not start at the source space");
    }
    if (!is_continuous(maps[i], source, product.factor(i))) {
      throw PreconditionError("map " + std::to_string(i) + " is not continuous");
    }
  }
  UniversalPropertyReport report{tupling(maps, product)};
  const Family base = base_from_subbase(product.algebra(), product.subbase());
  report.continuous = check_continuous_via_base(report.tupled, source, base).holds;

  report.commutes = true;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    report.commutes = report.commutes && report.tupled.then(product.projection(i)) == maps[i];
  }

  // Any g with pi_i o g = f_i must send y to a point whose coordinates are
  // (f_i(y)); scan all product points for each y.
  report.unique = true;
  for (std::size_t y = 0; y < source.points() && report.unique; ++y) {
    std::size_t matches = 0;
    for (std::size_t p = 0; p < product.points(); ++p) {
      bool agrees = true;
      for (std::size_t i = 0; i < maps.size() && agrees; ++i) {
        agrees = product.projection(i)(p) == maps[i](y);
      }
      if (agrees) {
        ++matches;
        report.unique = report.unique && p == report.tupled(y);
      }
    }
    report.unique = report.unique && matches == 1;
  }
  return report;
}

std::optional<HausdorffWitness> product_separation(const ProductSpace& product,
                                                   std::size_t x, std::size_t y) {
  const auto cx = product.coordinates(x);
  const auto cy = product.coordinates(y);
  for (std::size_t j = 0; j < cx.size(); ++j) {
    if (cx[j] == cy[j]) continue;
    auto w = separate(product.factor(j), cx[j], cy[j]);
    if (!w) return std::nullopt;
    const PointMap& pi = product.projection(j);
    return HausdorffWitness{x, y, mv_preimage(pi, w->open_x), mv_preimage(pi, w->open_y)};
  }
  throw InputError("product_separation needs distinct points");
}

}  // namespace mvtop
