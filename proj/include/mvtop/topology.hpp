#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mvtop/fuzzy.hpp"

namespace mvtop {

inline constexpr std::size_t kDefaultMaxOpens = 20'000;

/// A finite MV-topological space stored extensionally.
///
/// Invariants: opens contains 0 and 1 and is closed under binary joins,
/// oplus, odot and meet. Instances can only be obtained through
/// from_opens (validated) or the generation routines.
class Topology {
 public:
  /// Throws InputError if `opens` is not an MV-topology on the carrier.
  static Topology from_opens(Carrier carrier, Chain chain, Family opens);
  static Topology indiscrete(Carrier carrier, Chain chain);

  const Carrier& carrier() const noexcept { return carrier_; }
  const Chain& chain() const noexcept { return chain_; }
  const Family& opens() const noexcept { return opens_; }
  std::size_t points() const noexcept { return carrier_.size(); }
  MvAlgebra algebra() const { return MvAlgebra(chain_, carrier_.size()); }

  bool operator==(const Topology&) const = default;

 private:
  Topology(Carrier carrier, Chain chain, Family opens)
      : carrier_(std::move(carrier)), chain_(chain), opens_(std::move(opens)) {}
  friend Topology generate_from_subbase(const Carrier&, const Chain&,
                                        const Family&, std::size_t);

  Carrier carrier_;
  Chain chain_;
  Family opens_;
};

/// Least family containing `subbase` and closed under binary oplus, odot
/// and meet. Throws ResourceError once the family grows past `max_size`.
Family base_from_subbase(const MvAlgebra& algebra, const Family& subbase,
                         std::size_t max_size = kDefaultMaxOpens);

/// The MV-topology generated by `subbase`: all joins of subfamilies of
/// base_from_subbase(subbase) together with 0 and 1.
Topology generate_from_subbase(const Carrier& carrier, const Chain& chain,
                               const Family& subbase,
                               std::size_t max_opens = kDefaultMaxOpens);

bool is_topology(const MvAlgebra& algebra, const Family& family);
/// theta is contained in the opens and every open is the join of the
/// members of theta below it.
bool is_base(const Family& theta, const Topology& tau);
bool is_subbase(const Family& subbase, const Topology& tau,
                std::size_t max_opens = kDefaultMaxOpens);
/// Closed under every multiple k * alpha, k >= 1.
bool is_large_subbase(const MvAlgebra& algebra, const Family& subbase);

Family closed_sets(const Topology& tau);
Family clopens(const Topology& tau);
bool is_zero_dimensional(const Topology& tau);

struct HausdorffWitness {
  std::size_t x;
  std::size_t y;
  FuzzySet open_x;  // value n at x
  FuzzySet open_y;  // value n at y, open_x meet open_y = 0
};

struct HausdorffReport {
  bool hausdorff = true;
  /// One witness per pair x < y, in pair order (only when hausdorff).
  std::vector<HausdorffWitness> witnesses;
  /// First pair that cannot be separated.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

HausdorffReport check_hausdorff(const Topology& tau);
inline bool is_hausdorff(const Topology& tau) { return check_hausdorff(tau).hausdorff; }

/// First separating pair in canonical order, if any.
std::optional<HausdorffWitness> separate(const Topology& tau, std::size_t x,
                                         std::size_t y);

/// Compact, Hausdorff and zero-dimensional. Compactness is decided by the
/// covers module (analytic criterion unless `oracle` is set).
bool is_stone(const Topology& tau, bool oracle = false);

// ---------------------------------------------------------------------------
// Metric-induced topologies.

/// Nonnegative rational num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend Rational operator+(const Rational& a, const Rational& b);
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);

class Metric {
 public:
  /// Validates symmetry, zero diagonal, nonnegativity and the triangle
  /// inequality; throws InputError otherwise.
  Metric(Carrier carrier, std::vector<std::vector<Rational>> dist);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t points() const noexcept { return carrier_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const { return dist_[x][y]; }
  Rational diameter() const;

 private:
  Carrier carrier_;
  std::vector<std::vector<Rational>> dist_;
};

struct FuzzyPoint {
  std::size_t support;
  Value value;  // > 0
};

/// ball(y) = center.value if d(center.support, y) < radius, else 0.
FuzzySet open_ball(const Metric& metric, const Chain& chain, FuzzyPoint center,
                   Rational radius);

/// Every fuzzy point with every nonzero value.
std::vector<FuzzyPoint> default_centers(const Metric& metric, const Chain& chain);
/// The distinct positive distances plus one radius exceeding the diameter.
std::vector<Rational> default_radii(const Metric& metric);

Family ball_family(const Metric& metric, const Chain& chain,
                   const std::vector<FuzzyPoint>& centers,
                   const std::vector<Rational>& radii);

Topology metric_induced(const Metric& metric, const Chain& chain,
                        const std::vector<FuzzyPoint>& centers,
                        const std::vector<Rational>& radii,
                        std::size_t max_opens = kDefaultMaxOpens);

}  // namespace mvtop
