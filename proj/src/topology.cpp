#include "mvtop/topology.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mvtop/covers.hpp"

namespace mvtop {

namespace {

[[noreturn]] void cap_exceeded(const char* what, std::size_t cap, std::size_t size) {
  throw ResourceError(std::string(what) + " exceeded the cap of " +
                      std::to_string(cap) + " members (current size " +
                      std::to_string(size) + ")");
}

// Semi-naive closure: every element is combined once with itself and every
// element discovered before it, so each unordered pair is visited once.
template <typename Combine>
std::vector<FuzzySet> close_pairs(std::vector<FuzzySet> items, std::size_t cap,
                                  const char* what, Combine combine) {
  std::unordered_set<FuzzySet, FuzzySetHash> seen(items.begin(), items.end());
  items.assign(seen.begin(), seen.end());
  std::sort(items.begin(), items.end());
  if (items.size() > cap) cap_exceeded(what, cap, items.size());
  // a deque keeps references valid while combine appends
  std::deque<FuzzySet> queue(std::make_move_iterator(items.begin()),
                             std::make_move_iterator(items.end()));
  auto add = [&](FuzzySet s) {
    if (seen.insert(s).second) {
      queue.push_back(std::move(s));
      if (queue.size() > cap) cap_exceeded(what, cap, queue.size());
    }
  };
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      combine(queue[i], queue[j], add);
    }
  }
  return std::vector<FuzzySet>(std::make_move_iterator(queue.begin()),
                               std::make_move_iterator(queue.end()));
}

}  // namespace

Topology Topology::from_opens(Carrier carrier, Chain chain, Family opens) {
  MvAlgebra algebra(chain, carrier.size());
  if (!is_topology(algebra, opens)) {
    throw InputError("family of " + std::to_string(opens.size()) +
                     " fuzzy sets is not an MV-topology");
  }
  return Topology(std::move(carrier), chain, std::move(opens));
}

Topology Topology::indiscrete(Carrier carrier, Chain chain) {
  MvAlgebra algebra(chain, carrier.size());
  return Topology(std::move(carrier), chain, Family{algebra.zero(), algebra.one()});
}

Family base_from_subbase(const MvAlgebra& algebra, const Family& subbase,
                         std::size_t max_size) {
  for (const auto& s : subbase) algebra.check(s);
  auto items = close_pairs(subbase.members(), max_size, "base closure",
                           [&](const FuzzySet& a, const FuzzySet& b, auto&& add) {
                             add(algebra.oplus(a, b));
                             add(algebra.odot(a, b));
                             add(algebra.meet(a, b));
                           });
  return Family(std::move(items));
}

Topology generate_from_subbase(const Carrier& carrier, const Chain& chain,
                               const Family& subbase, std::size_t max_opens) {
  MvAlgebra algebra(chain, carrier.size());
  Family base = base_from_subbase(algebra, subbase, max_opens);
  std::vector<FuzzySet> seeds = base.members();
  seeds.push_back(algebra.zero());
  seeds.push_back(algebra.one());
  // oplus, odot and meet distribute over joins, so the join closure of a
  // base closed under them (and containing 0, 1) is already a topology.
  auto opens = close_pairs(std::move(seeds), max_opens, "topology generation",
                           [&](const FuzzySet& a, const FuzzySet& b, auto&& add) {
                             add(algebra.join(a, b));
                           });
  return Topology(carrier, chain, Family(std::move(opens)));
}

bool is_topology(const MvAlgebra& algebra, const Family& family) {
  for (const auto& s : family) algebra.check(s);
  if (!family.contains(algebra.zero()) || !family.contains(algebra.one())) {
    return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& a = family[i];
      const auto& b = family[j];
      if (!family.contains(algebra.join(a, b)) ||
          !family.contains(algebra.meet(a, b)) ||
          !family.contains(algebra.oplus(a, b)) ||
          !family.contains(algebra.odot(a, b))) {
        return false;
      }
    }
    // join and meet are idempotent; the diagonal only matters for oplus, odot
    const auto& a = family[i];
    if (!family.contains(algebra.oplus(a, a)) || !family.contains(algebra.odot(a, a))) {
      return false;
    }
  }
  return true;
}

bool is_base(const Family& theta, const Topology& tau) {
  if (!theta.is_subset_of(tau.opens())) return false;
  const MvAlgebra algebra = tau.algebra();
  for (const auto& o : tau.opens()) {
    FuzzySet acc = algebra.zero();
    for (const auto& t : theta) {
      if (t.leq(o)) acc = algebra.join(acc, t);
    }
    if (acc != o) return false;
  }
  return true;
}

bool is_subbase(const Family& subbase, const Topology& tau, std::size_t max_opens) {
  if (!subbase.is_subset_of(tau.opens())) return false;
  return generate_from_subbase(tau.carrier(), tau.chain(), subbase, max_opens)
             .opens() == tau.opens();
}

bool is_large_subbase(const MvAlgebra& algebra, const Family& subbase) {
  const int n = algebra.chain().resolution();
  for (const auto& s : subbase) {
    algebra.check(s);
    // k * s == n * s for every k >= n
    for (int k = 2; k <= n; ++k) {
      if (!subbase.contains(algebra.scale(k, s))) return false;
    }
  }
  return true;
}

Family closed_sets(const Topology& tau) {
  const MvAlgebra algebra = tau.algebra();
  std::vector<FuzzySet> out;
  out.reserve(tau.opens().size());
  for (const auto& o : tau.opens()) out.push_back(algebra.neg(o));
  return Family(std::move(out));
}

Family clopens(const Topology& tau) {
  const MvAlgebra algebra = tau.algebra();
  std::vector<FuzzySet> out;
  for (const auto& o : tau.opens()) {
    if (tau.opens().contains(algebra.neg(o))) out.push_back(o);
  }
  return Family(std::move(out));
}

bool is_zero_dimensional(const Topology& tau) { return is_base(clopens(tau), tau); }

std::optional<HausdorffWitness> separate(const Topology& tau, std::size_t x,
                                         std::size_t y) {
  const Value top = tau.chain().top();
  std::vector<const FuzzySet*> at_x, at_y;
  for (const auto& o : tau.opens()) {
    if (o[x] == top) at_x.push_back(&o);
    if (o[y] == top) at_y.push_back(&o);
  }
  for (const FuzzySet* a : at_x) {
    for (const FuzzySet* b : at_y) {
      bool disjoint = true;
      for (std::size_t i = 0; i < a->size() && disjoint; ++i) {
        disjoint = std::min((*a)[i], (*b)[i]) == 0;
      }
      if (disjoint) return HausdorffWitness{x, y, *a, *b};
    }
  }
  return std::nullopt;
}

HausdorffReport check_hausdorff(const Topology& tau) {
  HausdorffReport report;
  for (std::size_t x = 0; x < tau.points(); ++x) {
    for (std::size_t y = x + 1; y < tau.points(); ++y) {
      auto w = separate(tau, x, y);
      if (!w) {
        report.hausdorff = false;
        report.witnesses.clear();
        report.failing_pair = std::make_pair(x, y);
        return report;
      }
      report.witnesses.push_back(std::move(*w));
    }
  }
  return report;
}

bool is_stone(const Topology& tau, bool oracle) {
  const auto mode = oracle ? CompactnessMode::oracle : CompactnessMode::analytic;
  return check_compact(tau, mode).holds && is_hausdorff(tau) &&
         is_zero_dimensional(tau);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InputError("rational denominator must be positive");
  if (num < 0) throw InputError("distances and radii must be nonnegative");
  return Rational{num, den};
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational{a.num * b.den + b.num * a.den, a.den * b.den};
}

Metric::Metric(Carrier carrier, std::vector<std::vector<Rational>> dist)
    : carrier_(std::move(carrier)), dist_(std::move(dist)) {
  const std::size_t n = carrier_.size();
  if (dist_.size() != n) throw InputError("distance matrix has wrong row count");
  for (const auto& row : dist_) {
    if (row.size() != n) throw InputError("distance matrix is not square");
    for (const auto& d : row) {
      if (d.den <= 0 || d.num < 0) throw InputError("distances must be nonnegative rationals");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!(dist_[x][x] == Rational{0, 1})) {
      throw InputError("distance of point " + carrier_.label(x) + " to itself is not 0");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!(dist_[x][y] == dist_[y][x])) throw InputError("distance matrix is not symmetric");
      for (std::size_t z = 0; z < n; ++z) {
        if (dist_[x][y] + dist_[y][z] < dist_[x][z]) {
          throw InputError("triangle inequality fails for " + carrier_.label(x) + ", " +
                           carrier_.label(y) + ", " + carrier_.label(z));
        }
      }
    }
  }
}

Rational Metric::diameter() const {
  Rational best{0, 1};
  for (const auto& row : dist_) {
    for (const auto& d : row) best = std::max(best, d);
  }
  return best;
}

FuzzySet open_ball(const Metric& metric, const Chain& chain, FuzzyPoint center,
                   Rational radius) {
  if (center.support >= metric.points()) throw InputError("ball center outside carrier");
  if (center.value == 0) throw InputError("fuzzy point value must be positive");
  chain.element(center.value);
  if (!(Rational{0, 1} < radius)) throw InputError("ball radius must be positive");
  std::vector<Value> out(metric.points(), 0);
  for (std::size_t y = 0; y < metric.points(); ++y) {
    if (metric(center.support, y) < radius) out[y] = center.value;
  }
  return FuzzySet(std::move(out));
}

std::vector<FuzzyPoint> default_centers(const Metric& metric, const Chain& chain) {
  std::vector<FuzzyPoint> out;
  for (std::size_t x = 0; x < metric.points(); ++x) {
    for (int v = 1; v <= chain.resolution(); ++v) {
      out.push_back(FuzzyPoint{x, static_cast<Value>(v)});
    }
  }
  return out;
}

std::vector<Rational> default_radii(const Metric& metric) {
  std::vector<Rational> out;
  for (std::size_t x = 0; x < metric.points(); ++x) {
    for (std::size_t y = 0; y < metric.points(); ++y) {
      const Rational& d = metric(x, y);
      if (!(d == Rational{0, 1})) out.push_back(d);
    }
  }
  out.push_back(metric.diameter() + Rational{1, 1});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Family ball_family(const Metric& metric, const Chain& chain,
                   const std::vector<FuzzyPoint>& centers,
                   const std::vector<Rational>& radii) {
  std::vector<FuzzySet> balls;
  balls.reserve(centers.size() * radii.size());
  for (const auto& c : centers) {
    for (const auto& r : radii) balls.push_back(open_ball(metric, chain, c, r));
  }
  return Family(std::move(balls));
}

Topology metric_induced(const Metric& metric, const Chain& chain,
                        const std::vector<FuzzyPoint>& centers,
                        const std::vector<Rational>& radii, std::size_t max_opens) {
  return generate_from_subbase(metric.carrier(), chain,
                               ball_family(metric, chain, centers, radii), max_opens);
}

}  // namespace mvtop
