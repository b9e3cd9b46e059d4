#include "mvtop/fuzzy.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace mvtop {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("carrier must have at least one point");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw InputError("duplicate point label '" + l + "'");
    }
  }
}

Carrier Carrier::indexed(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(labels));
}

bool FuzzySet::leq(const FuzzySet& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

bool FuzzySet::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](Value v) { return v == 0; });
}

std::vector<std::size_t> FuzzySet::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (values_[i] > 0) out.push_back(i);
  }
  return out;
}

std::size_t FuzzySetHash::operator()(const FuzzySet& s) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (Value v : s.values()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_string(const FuzzySet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(int{s[i]});
  }
  return out + "]";
}

MvAlgebra::MvAlgebra(Chain chain, std::size_t points)
    : chain_(chain), points_(points) {
  if (points == 0) throw InputError("carrier must have at least one point");
}

FuzzySet MvAlgebra::zero() const { return constant(0); }
FuzzySet MvAlgebra::one() const { return constant(top()); }

FuzzySet MvAlgebra::constant(Value v) const {
  return FuzzySet(std::vector<Value>(points_, chain_.element(v)));
}

FuzzySet MvAlgebra::make(std::span<const long long> values) const {
  if (values.size() != points_) {
    throw InputError("fuzzy set has " + std::to_string(values.size()) +
                     " entries, carrier has " + std::to_string(points_));
  }
  std::vector<Value> out;
  out.reserve(values.size());
  for (long long v : values) out.push_back(chain_.element(v));
  return FuzzySet(std::move(out));
}

FuzzySet MvAlgebra::make(std::initializer_list<long long> values) const {
  return make(std::span<const long long>(values.begin(), values.size()));
}

void MvAlgebra::check(const FuzzySet& s) const {
  if (s.size() != points_) {
    throw InputError("fuzzy set " + to_string(s) + " does not match carrier of size " +
                     std::to_string(points_));
  }
  for (Value v : s.values()) {
    if (v > top()) {
      throw InputError("fuzzy set " + to_string(s) + " has entries above " +
                       std::to_string(int{top()}));
    }
  }
}

bool MvAlgebra::is_one(const FuzzySet& s) const {
  return s.size() == points_ &&
         std::all_of(s.values().begin(), s.values().end(),
                     [&](Value v) { return v == top(); });
}

void MvAlgebra::check_pair(const FuzzySet& a, const FuzzySet& b) const {
  if (a.size() != points_ || b.size() != points_) {
    throw InputError("fuzzy sets " + to_string(a) + " and " + to_string(b) +
                     " do not share a carrier of size " + std::to_string(points_));
  }
}

namespace {

template <typename Op>
FuzzySet zip(const FuzzySet& a, const FuzzySet& b, Op op) {
  std::vector<Value> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Value>(op(int{a[i]}, int{b[i]}));
  }
  return FuzzySet(std::move(out));
}

}  // namespace

FuzzySet MvAlgebra::oplus(const FuzzySet& a, const FuzzySet& b) const {
  check_pair(a, b);
  const int n = chain_.resolution();
  return zip(a, b, [n](int x, int y) { return std::min(n, x + y); });
}

FuzzySet MvAlgebra::odot(const FuzzySet& a, const FuzzySet& b) const {
  check_pair(a, b);
  const int n = chain_.resolution();
  return zip(a, b, [n](int x, int y) { return std::max(0, x + y - n); });
}

FuzzySet MvAlgebra::meet(const FuzzySet& a, const FuzzySet& b) const {
  check_pair(a, b);
  return zip(a, b, [](int x, int y) { return std::min(x, y); });
}

FuzzySet MvAlgebra::join(const FuzzySet& a, const FuzzySet& b) const {
  check_pair(a, b);
  return zip(a, b, [](int x, int y) { return std::max(x, y); });
}

FuzzySet MvAlgebra::neg(const FuzzySet& a) const {
  check_pair(a, a);
  const int n = chain_.resolution();
  std::vector<Value> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Value>(n - a[i]);
  return FuzzySet(std::move(out));
}

FuzzySet MvAlgebra::scale(long long k, const FuzzySet& a) const {
  check_pair(a, a);
  std::vector<Value> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = chain_.scale(k, a[i]);
  return FuzzySet(std::move(out));
}

FuzzySet MvAlgebra::join_all(std::span<const FuzzySet> family) const {
  FuzzySet acc = zero();
  for (const auto& s : family) acc = join(acc, s);
  return acc;
}

FuzzySet MvAlgebra::meet_all(std::span<const FuzzySet> family) const {
  FuzzySet acc = one();
  for (const auto& s : family) acc = meet(acc, s);
  return acc;
}

Family::Family(std::vector<FuzzySet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family::Family(std::initializer_list<FuzzySet> members)
    : Family(std::vector<FuzzySet>(members)) {}

bool Family::contains(const FuzzySet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::size_t Family::index_of(const FuzzySet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool Family::is_subset_of(const Family& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

PointMap::PointMap(std::size_t domain_size, std::size_t codomain_size,
                   std::vector<std::size_t> images)
    : codomain_size_(codomain_size), images_(std::move(images)) {
  if (images_.size() != domain_size) {
    throw InputError("map lists " + std::to_string(images_.size()) +
                     " images for a domain of size " + std::to_string(domain_size));
  }
  for (std::size_t y : images_) {
    if (y >= codomain_size) {
      throw InputError("map image " + std::to_string(y) +
                       " outside codomain of size " + std::to_string(codomain_size));
    }
  }
}

PointMap PointMap::identity(std::size_t size) {
  std::vector<std::size_t> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = i;
  return PointMap(size, size, std::move(images));
}

PointMap PointMap::constant(std::size_t domain_size, std::size_t codomain_size,
                            std::size_t target) {
  return PointMap(domain_size, codomain_size,
                  std::vector<std::size_t>(domain_size, target));
}

bool PointMap::is_bijective() const {
  if (images_.size() != codomain_size_) return false;
  std::vector<bool> hit(codomain_size_, false);
  for (std::size_t y : images_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

PointMap PointMap::inverse() const {
  if (!is_bijective()) throw InputError("map is not bijective");
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return PointMap(codomain_size_, images_.size(), std::move(inv));
}

PointMap PointMap::then(const PointMap& next) const {
  if (next.domain_size() != codomain_size_) {
    throw InputError("maps are not composable");
  }
  std::vector<std::size_t> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = next(images_[x]);
  return PointMap(images_.size(), next.codomain_size(), std::move(out));
}

FuzzySet mv_preimage(const PointMap& f, const FuzzySet& alpha) {
  if (alpha.size() != f.codomain_size()) {
    throw InputError("preimage: fuzzy set " + to_string(alpha) +
                     " does not live on the codomain of size " +
                     std::to_string(f.codomain_size()));
  }
  std::vector<Value> out(f.domain_size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = alpha[f(x)];
  return FuzzySet(std::move(out));
}

Family mv_preimage(const PointMap& f, const Family& family) {
  std::vector<FuzzySet> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(mv_preimage(f, s));
  return Family(std::move(out));
}

FuzzySet forward_image(const PointMap& f, const FuzzySet& alpha) {
  if (alpha.size() != f.domain_size()) {
    throw InputError("image: fuzzy set " + to_string(alpha) +
                     " does not live on the domain of size " +
                     std::to_string(f.domain_size()));
  }
  std::vector<Value> out(f.codomain_size(), 0);
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    out[f(x)] = std::max(out[f(x)], alpha[x]);
  }
  return FuzzySet(std::move(out));
}

namespace {

// Closure under single-unit steps implies closure under the whole order,
// so downward (upward) closure only needs one neighbour per coordinate.
bool closed_under_unit_steps(const MvAlgebra& algebra, const Family& fam,
                             bool downward) {
  const Value top = algebra.top();
  for (const auto& s : fam) {
    std::vector<Value> v(s.values().begin(), s.values().end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Value saved = v[i];
      if (downward ? saved == 0 : saved == top) continue;
      v[i] = downward ? saved - 1 : saved + 1;
      if (!fam.contains(FuzzySet(v))) return false;
      v[i] = saved;
    }
  }
  return true;
}

}  // namespace

bool is_ideal(const MvAlgebra& algebra, const Family& m) {
  if (m.empty()) return false;
  for (const auto& s : m) algebra.check(s);
  if (!closed_under_unit_steps(algebra, m, true)) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (!m.contains(algebra.oplus(m[i], m[j]))) return false;
    }
  }
  return true;
}

bool is_filter(const MvAlgebra& algebra, const Family& f) {
  if (f.empty()) return false;
  for (const auto& s : f) algebra.check(s);
  if (!closed_under_unit_steps(algebra, f, false)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      if (!f.contains(algebra.odot(f[i], f[j]))) return false;
    }
  }
  return true;
}

std::vector<FuzzySet> enumerate_all(const MvAlgebra& algebra, std::size_t cap) {
  const std::size_t base = static_cast<std::size_t>(algebra.top()) + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < algebra.points(); ++i) {
    if (total > cap / base) {
      throw ResourceError("algebra has more than " + std::to_string(cap) +
                          " elements");
    }
    total *= base;
  }
  std::vector<FuzzySet> out;
  out.reserve(total);
  std::vector<Value> v(algebra.points(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.emplace_back(v);
    // odometer increment, last coordinate fastest: lexicographic order
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] < algebra.top()) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
  }
  return out;
}

}  // namespace mvtop
