#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mvtop/chain.hpp"

namespace mvtop {

/// Ordered list of distinct point labels. Index order is canonical.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);
  /// Carrier labelled "0", "1", ..., "size-1".
  static Carrier indexed(std::size_t size);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool operator==(const Carrier&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// A membership function X -> L_n stored as one chain element per point.
/// Ordering is lexicographic on the value vector.
class FuzzySet {
 public:
  FuzzySet() = default;
  explicit FuzzySet(std::vector<Value> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  std::span<const Value> values() const noexcept { return values_; }

  /// Pointwise order.
  bool leq(const FuzzySet& other) const;
  bool is_zero() const;
  /// Indices of points with nonzero membership.
  std::vector<std::size_t> support() const;

  auto operator<=>(const FuzzySet&) const = default;
  bool operator==(const FuzzySet&) const = default;

 private:
  std::vector<Value> values_;
};

struct FuzzySetHash {
  std::size_t operator()(const FuzzySet& s) const noexcept;
};

std::string to_string(const FuzzySet& s);

/// The pointwise MV-algebra [0..n]^X over a carrier of fixed size.
class MvAlgebra {
 public:
  MvAlgebra(Chain chain, std::size_t points);

  const Chain& chain() const noexcept { return chain_; }
  std::size_t points() const noexcept { return points_; }
  Value top() const noexcept { return chain_.top(); }

  FuzzySet zero() const;
  FuzzySet one() const;
  FuzzySet constant(Value v) const;
  /// Validated construction from raw integers.
  FuzzySet make(std::span<const long long> values) const;
  FuzzySet make(std::initializer_list<long long> values) const;
  /// Throws InputError if `s` does not live in this algebra.
  void check(const FuzzySet& s) const;

  bool is_one(const FuzzySet& s) const;

  FuzzySet oplus(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet odot(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet meet(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet join(const FuzzySet& a, const FuzzySet& b) const;
  FuzzySet neg(const FuzzySet& a) const;
  /// k * a = a + ... + a (k times), 0 * a = 0. Multiplicities saturate at n.
  FuzzySet scale(long long k, const FuzzySet& a) const;

  /// Pointwise max; the empty join is 0.
  FuzzySet join_all(std::span<const FuzzySet> family) const;
  /// Pointwise min; the empty meet is 1.
  FuzzySet meet_all(std::span<const FuzzySet> family) const;

  bool operator==(const MvAlgebra&) const = default;

 private:
  void check_pair(const FuzzySet& a, const FuzzySet& b) const;

  Chain chain_;
  std::size_t points_;
};

/// Canonical, duplicate-free, sorted set of fuzzy sets.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<FuzzySet> members);
  Family(std::initializer_list<FuzzySet> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const FuzzySet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<FuzzySet>& members() const noexcept { return members_; }

  bool contains(const FuzzySet& s) const;
  /// Index of `s` in canonical order, or size() if absent.
  std::size_t index_of(const FuzzySet& s) const;
  bool is_subset_of(const Family& other) const;

  bool operator==(const Family&) const = default;

 private:
  std::vector<FuzzySet> members_;
};

/// A function between finite carriers, given by codomain indices.
class PointMap {
 public:
  PointMap(std::size_t domain_size, std::size_t codomain_size,
           std::vector<std::size_t> images);
  static PointMap identity(std::size_t size);
  static PointMap constant(std::size_t domain_size, std::size_t codomain_size,
                           std::size_t target);

  std::size_t domain_size() const noexcept { return images_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_bijective() const;
  /// Throws InputError unless bijective.
  PointMap inverse() const;
  /// The composite `next` after `this`: x -> next(this(x)).
  PointMap then(const PointMap& next) const;

  bool operator==(const PointMap&) const = default;

 private:
  std::size_t codomain_size_;
  std::vector<std::size_t> images_;
};

/// alpha -> alpha o f. An MV-algebra homomorphism [0,1]^Y -> [0,1]^X.
FuzzySet mv_preimage(const PointMap& f, const FuzzySet& alpha);
Family mv_preimage(const PointMap& f, const Family& family);

/// Sup-image: y -> max{alpha(x) : f(x) = y}, 0 on empty fibres.
FuzzySet forward_image(const PointMap& f, const FuzzySet& alpha);

/// Nonempty, downward closed and closed under oplus.
bool is_ideal(const MvAlgebra& algebra, const Family& m);
/// Nonempty, upward closed and closed under odot.
bool is_filter(const MvAlgebra& algebra, const Family& f);

/// Every fuzzy set of the algebra, in canonical order. Only for tiny
/// algebras; throws ResourceError above `cap` elements.
std::vector<FuzzySet> enumerate_all(const MvAlgebra& algebra,
                                    std::size_t cap = 1'000'000);

}  // namespace mvtop
