#include "mvtop/covers.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "mvtop/oracle.hpp"

namespace mvtop {

CoverCertificate::CoverCertificate(std::vector<CoverEntry> entries) {
  std::map<FuzzySet, long long> merged;
  for (auto& e : entries) {
    if (e.multiplicity < 0) throw InputError("negative multiplicity in certificate");
    if (e.multiplicity > 0) merged[std::move(e.set)] += e.multiplicity;
  }
  for (auto& [set, m] : merged) entries_.push_back(CoverEntry{set, m});
}

long long CoverCertificate::total() const {
  long long t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

FuzzySet CoverCertificate::sum(const MvAlgebra& algebra) const {
  FuzzySet acc = algebra.zero();
  for (const auto& e : entries_) acc = algebra.oplus(acc, algebra.scale(e.multiplicity, e.set));
  return acc;
}

bool is_cover(const MvAlgebra& algebra, const Family& gamma) {
  for (const auto& s : gamma) algebra.check(s);
  return algebra.is_one(algebra.join_all(gamma.members()));
}

bool is_additive_cover(const MvAlgebra& algebra, const CoverCertificate& cert) {
  for (const auto& e : cert.entries()) {
    algebra.check(e.set);
    if (e.multiplicity < 1) return false;
  }
  return algebra.is_one(cert.sum(algebra));
}

bool supports_cover(const MvAlgebra& algebra, const Family& gamma) {
  std::vector<bool> covered(algebra.points(), false);
  for (const auto& s : gamma) {
    algebra.check(s);
    for (std::size_t x = 0; x < s.size(); ++x) covered[x] = covered[x] || s[x] > 0;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Demand left at each point once `mult` copies are added: n - min(n, sum).
std::vector<int> residual(const MvAlgebra& algebra, const Family& gamma,
                          const std::vector<long long>& mult) {
  const int n = algebra.chain().resolution();
  std::vector<long long> raw(algebra.points(), 0);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (mult[i] == 0) continue;
    for (std::size_t x = 0; x < raw.size(); ++x) raw[x] += mult[i] * gamma[i][x];
  }
  std::vector<int> out(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x) {
    out[x] = static_cast<int>(n - std::min<long long>(n, raw[x]));
  }
  return out;
}

bool all_zero(const std::vector<int>& r) {
  return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

CoverCertificate to_certificate(const Family& gamma, const std::vector<long long>& mult) {
  std::vector<CoverEntry> entries;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (mult[i] > 0) entries.push_back(CoverEntry{gamma[i], mult[i]});
  }
  return CoverCertificate(std::move(entries));
}

class NodeBudget {
 public:
  explicit NodeBudget(std::size_t max) : max_(max) {}
  void tick() {
    if (++used_ > max_) {
      throw ResourceError("solver exceeded the cap of " + std::to_string(max_) + " nodes");
    }
  }
  std::size_t used() const { return used_; }

 private:
  std::size_t max_;
  std::size_t used_ = 0;
};

// Branch and bound for the covering integer program
//   min sum m_i  s.t.  sum_i m_i * a_i(x) >= n for all x,  m_i in 0..n.
class MultisetCoverSearch {
 public:
  MultisetCoverSearch(const MvAlgebra& algebra, const Family& gamma, NodeBudget& budget)
      : gamma_(gamma), n_(algebra.chain().resolution()), points_(algebra.points()),
        budget_(budget) {}

  // Phase 1: optimum total. Items are ordered by decreasing support size,
  // then canonical order.
  long long optimum(long long upper_bound) {
    order_.resize(gamma_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return gamma_[a].support().size() > gamma_[b].support().size();
    });
    build_suffix_max();
    best_ = upper_bound;
    std::vector<int> r(points_, n_);
    optimise(0, r, 0);
    return best_;
  }

  // Phase 2: lexicographically greatest multiplicity vector (canonical
  // order) with the optimum total.
  std::vector<long long> lex_greatest(long long total) {
    order_.resize(gamma_.size());
    std::iota(order_.begin(), order_.end(), 0);
    build_suffix_max();
    mult_.assign(gamma_.size(), 0);
    std::vector<int> r(points_, n_);
    found_ = false;
    lex_search(0, r, total);
    return mult_;
  }

 private:
  void build_suffix_max() {
    suffix_max_.assign(order_.size() + 1, std::vector<int>(points_, 0));
    for (std::size_t k = order_.size(); k-- > 0;) {
      const auto& s = gamma_[order_[k]];
      for (std::size_t x = 0; x < points_; ++x) {
        suffix_max_[k][x] = std::max<int>(suffix_max_[k + 1][x], s[x]);
      }
    }
  }

  // Additional copies still needed from items k.., or -1 if impossible.
  long long lower_bound(std::size_t k, const std::vector<int>& r) const {
    long long lb = 0;
    for (std::size_t x = 0; x < points_; ++x) {
      if (r[x] == 0) continue;
      if (suffix_max_[k][x] == 0) return -1;
      lb = std::max(lb, ceil_div(r[x], suffix_max_[k][x]));
    }
    return lb;
  }

  // Largest multiplicity of item that can still reduce the residual.
  long long useful(const FuzzySet& s, const std::vector<int>& r) const {
    long long m = 0;
    for (std::size_t x = 0; x < points_; ++x) {
      if (r[x] > 0 && s[x] > 0) m = std::max(m, ceil_div(r[x], s[x]));
    }
    return std::min<long long>(m, n_);
  }

  static std::vector<int> apply(const std::vector<int>& r, const FuzzySet& s, long long m) {
    std::vector<int> out(r);
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] = static_cast<int>(std::max<long long>(0, out[x] - m * s[x]));
    }
    return out;
  }

  void optimise(std::size_t k, const std::vector<int>& r, long long total) {
    budget_.tick();
    if (all_zero(r)) {
      best_ = std::min(best_, total);
      return;
    }
    if (k == order_.size()) return;
    const long long lb = lower_bound(k, r);
    if (lb < 0 || total + lb >= best_) return;
    const auto& s = gamma_[order_[k]];
    for (long long m = useful(s, r); m >= 0; --m) {
      optimise(k + 1, m ? apply(r, s, m) : r, total + m);
    }
  }

  void lex_search(std::size_t k, const std::vector<int>& r, long long budget) {
    budget_.tick();
    if (all_zero(r)) {
      found_ = true;  // remaining multiplicities stay 0
      return;
    }
    if (k == order_.size()) return;
    const long long lb = lower_bound(k, r);
    if (lb < 0 || lb > budget) return;
    const auto& s = gamma_[order_[k]];
    for (long long m = std::min(useful(s, r), budget); m >= 0 && !found_; --m) {
      mult_[order_[k]] = m;
      lex_search(k + 1, m ? apply(r, s, m) : r, budget - m);
    }
    if (!found_) mult_[order_[k]] = 0;
  }

  const Family& gamma_;
  int n_;
  std::size_t points_;
  NodeBudget& budget_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<int>> suffix_max_;
  long long best_ = 0;
  std::vector<long long> mult_;
  bool found_ = false;
};

// Branch and bound for the set cover over points, where member i covers
// {x : gamma_i(x) = n}.
class SubfamilyCoverSearch {
 public:
  SubfamilyCoverSearch(const MvAlgebra& algebra, const Family& gamma, NodeBudget& budget)
      : points_(algebra.points()), budget_(budget) {
    covers_.resize(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (std::size_t x = 0; x < points_; ++x) {
        if (gamma[i][x] == algebra.top()) covers_[i].push_back(x);
      }
    }
  }

  std::size_t optimum(std::size_t upper_bound) {
    best_ = upper_bound;
    std::vector<bool> covered(points_, false);
    optimise(covered, 0);
    return best_;
  }

  std::vector<std::size_t> lex_smallest(std::size_t size) {
    chosen_.clear();
    found_ = false;
    std::vector<bool> covered(points_, false);
    lex_search(0, covered, size);
    return chosen_;
  }

 private:
  std::size_t max_cover_size() const {
    std::size_t m = 0;
    for (const auto& c : covers_) m = std::max(m, c.size());
    return m;
  }

  // Branch on the members covering the first uncovered point, largest
  // cover first.
  void optimise(const std::vector<bool>& covered, std::size_t size) {
    budget_.tick();
    const auto first = std::find(covered.begin(), covered.end(), false);
    if (first == covered.end()) {
      best_ = std::min(best_, size);
      return;
    }
    const std::size_t uncovered =
        static_cast<std::size_t>(std::count(covered.begin(), covered.end(), false));
    const std::size_t widest = max_cover_size();
    if (widest == 0) return;
    if (size + (uncovered + widest - 1) / widest >= best_) return;
    const std::size_t x = static_cast<std::size_t>(first - covered.begin());
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < covers_.size(); ++i) {
      if (std::find(covers_[i].begin(), covers_[i].end(), x) != covers_[i].end()) {
        candidates.push_back(i);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return gain(a, covered) > gain(b, covered);
    });
    for (std::size_t i : candidates) {
      std::vector<bool> next(covered);
      for (std::size_t y : covers_[i]) next[y] = true;
      optimise(next, size + 1);
    }
  }

  std::size_t gain(std::size_t i, const std::vector<bool>& covered) const {
    std::size_t g = 0;
    for (std::size_t y : covers_[i]) g += covered[y] ? 0 : 1;
    return g;
  }

  // Include-first DFS over canonical indices: the first complete choice of
  // exactly `budget` members is the lexicographically smallest one.
  void lex_search(std::size_t k, const std::vector<bool>& covered, std::size_t budget) {
    budget_.tick();
    if (std::find(covered.begin(), covered.end(), false) == covered.end()) {
      found_ = true;
      return;
    }
    if (budget == 0 || k == covers_.size()) return;
    // every uncovered point must still be reachable from items k..
    for (std::size_t x = 0; x < points_; ++x) {
      if (covered[x]) continue;
      bool reachable = false;
      for (std::size_t i = k; i < covers_.size() && !reachable; ++i) {
        reachable = std::find(covers_[i].begin(), covers_[i].end(), x) != covers_[i].end();
      }
      if (!reachable) return;
    }
    if (gain(k, covered) > 0) {
      std::vector<bool> next(covered);
      for (std::size_t y : covers_[k]) next[y] = true;
      chosen_.push_back(k);
      lex_search(k + 1, next, budget - 1);
      if (found_) return;
      chosen_.pop_back();
    }
    lex_search(k + 1, covered, budget);
  }

  std::size_t points_;
  NodeBudget& budget_;
  std::vector<std::vector<std::size_t>> covers_;
  std::size_t best_ = 0;
  std::vector<std::size_t> chosen_;
  bool found_ = false;
};

}  // namespace

std::optional<CoverCertificate> find_additive_subcover(const MvAlgebra& algebra,
                                                       const Family& gamma,
                                                       bool minimize) {
  if (!supports_cover(algebra, gamma)) return std::nullopt;
  const int n = algebra.chain().resolution();
  std::vector<long long> mult(gamma.size(), 0);
  std::vector<int> r = residual(algebra, gamma, mult);
  for (std::size_t x = 0; x < algebra.points(); ++x) {
    if (r[x] == 0) continue;
    std::size_t pick = gamma.size();
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      if (gamma[i][x] > 0 && (pick == gamma.size() || gamma[i][x] > gamma[pick][x])) pick = i;
    }
    mult[pick] = std::min<long long>(n, mult[pick] + ceil_div(r[x], gamma[pick][x]));
    r = residual(algebra, gamma, mult);
  }
  if (minimize) {
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      while (mult[i] > 0) {
        --mult[i];
        if (!all_zero(residual(algebra, gamma, mult))) {
          ++mult[i];
          break;
        }
      }
    }
  }
  CoverCertificate cert = to_certificate(gamma, mult);
  if (!is_additive_cover(algebra, cert)) {
    throw std::logic_error("greedy additive subcover failed to validate");
  }
  return cert;
}

SolveResult<CoverCertificate> minimal_additive_cover(const MvAlgebra& algebra,
                                                     const Family& gamma,
                                                     SolverLimits limits) {
  SolveResult<CoverCertificate> result;
  auto greedy = find_additive_subcover(algebra, gamma, true);
  if (!greedy) return result;
  NodeBudget budget(limits.max_nodes);
  MultisetCoverSearch search(algebra, gamma, budget);
  // +1 so that a greedy solution that is already optimal is re-found.
  const long long best = search.optimum(greedy->total() + 1);
  const auto mult = search.lex_greatest(best);
  result.solution = to_certificate(gamma, mult);
  result.nodes = budget.used();
  if (!is_additive_cover(algebra, *result.solution) || result.solution->total() != best) {
    throw std::logic_error("minimal additive cover failed to validate");
  }
  return result;
}

SolveResult<Family> minimal_subcover(const MvAlgebra& algebra, const Family& gamma,
                                     SolverLimits limits) {
  SolveResult<Family> result;
  if (!is_cover(algebra, gamma)) return result;
  NodeBudget budget(limits.max_nodes);
  SubfamilyCoverSearch search(algebra, gamma, budget);
  const std::size_t best = search.optimum(algebra.points() + 1);
  std::vector<FuzzySet> members;
  for (std::size_t i : search.lex_smallest(best)) members.push_back(gamma[i]);
  result.solution = Family(std::move(members));
  result.nodes = budget.used();
  if (result.solution->size() != best || !is_cover(algebra, *result.solution)) {
    throw std::logic_error("minimal subcover failed to validate");
  }
  return result;
}

namespace {

struct CoverVisitor {
  const Topology& tau;
  const MvAlgebra algebra;
  const OracleLimits& limits;
  CompactnessReport& report;
  // returns whether `members` (a cover) satisfies the property
  std::function<std::optional<CoverCertificate>(const std::vector<FuzzySet>&)> witness;

  void count() {
    if (++report.covers_checked > limits.max_covers) {
      throw ResourceError("compactness oracle exceeded " +
                          std::to_string(limits.max_covers) + " covers");
    }
  }

  bool record(const std::vector<FuzzySet>& members) {
    count();
    auto cert = witness(members);
    if (!cert) {
      report.holds = false;
      report.counterexample = Family(members);
      return false;
    }
    if (report.certificates.size() < CompactnessReport::kMaxRecorded) {
      report.certificates.emplace_back(Family(members), std::move(*cert));
    }
    return true;
  }

  void exhaustive() {
    const auto& opens = tau.opens();
    const std::size_t k = opens.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<FuzzySet> members;
      FuzzySet acc = algebra.zero();
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          members.push_back(opens[i]);
          acc = algebra.join(acc, opens[i]);
        }
      }
      if (!algebra.is_one(acc)) continue;
      if (!record(members)) return;
    }
  }

  // Selector tree; `chosen` holds canonical indices in insertion order.
  bool selector(std::vector<std::size_t>& chosen, std::set<std::vector<std::size_t>>& seen) {
    std::vector<std::size_t> key(chosen);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return true;
    std::vector<FuzzySet> members;
    FuzzySet acc = algebra.zero();
    for (std::size_t i : key) {
      members.push_back(tau.opens()[i]);
      acc = algebra.join(acc, tau.opens()[i]);
    }
    if (!members.empty()) {
      auto cert = witness(members);
      if (cert) {
        count();
        if (report.certificates.size() < CompactnessReport::kMaxRecorded) {
          report.certificates.emplace_back(Family(members), std::move(*cert));
        }
        return true;
      }
    }
    std::size_t x = 0;
    while (x < acc.size() && acc[x] == algebra.top()) ++x;
    if (x == acc.size()) return record(members);
    for (std::size_t i = 0; i < tau.opens().size(); ++i) {
      if (tau.opens()[i][x] != algebra.top()) continue;
      chosen.push_back(i);
      const bool ok = selector(chosen, seen);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  void run() {
    if (tau.opens().size() <= std::min<std::size_t>(limits.max_exhaustive_opens, 30)) {
      exhaustive();
    } else {
      std::vector<std::size_t> chosen;
      std::set<std::vector<std::size_t>> seen;
      selector(chosen, seen);
    }
  }
};

}  // namespace

CompactnessReport check_compact(const Topology& tau, CompactnessMode mode,
                                OracleLimits limits) {
  CompactnessReport report;
  report.mode = mode;
  if (mode == CompactnessMode::analytic) return report;
  CoverVisitor visitor{tau, tau.algebra(), limits, report,
                       [&](const std::vector<FuzzySet>& members) {
                         return oracle::certificate_search(tau.algebra(), members,
                                                           limits.max_states);
                       }};
  visitor.run();
  return report;
}

CompactnessReport check_strongly_compact(const Topology& tau, CompactnessMode mode,
                                         OracleLimits limits) {
  CompactnessReport report;
  report.mode = mode;
  if (mode == CompactnessMode::analytic) return report;
  // A finite subcover is recorded as a certificate with multiplicity 1.
  const MvAlgebra algebra = tau.algebra();
  CoverVisitor visitor{tau, algebra, limits, report,
                       [&](const std::vector<FuzzySet>& members)
                           -> std::optional<CoverCertificate> {
                         Family fam(members);
                         if (!is_cover(algebra, fam)) return std::nullopt;
                         auto sub = oracle::exhaustive_min_subcover(algebra, fam);
                         if (!sub) return std::nullopt;
                         std::vector<CoverEntry> entries;
                         for (const auto& s : *sub) entries.push_back(CoverEntry{s, 1});
                         return CoverCertificate(std::move(entries));
                       }};
  visitor.run();
  return report;
}

SubbasicSubcover product_subbasic_subcover(const ProductSpace& product,
                                           std::span<const SubbasicMember> gamma) {
  const std::size_t k = product.factor_count();
  std::vector<std::vector<FuzzySet>> per_factor(k);
  for (const auto& m : gamma) {
    if (m.factor >= k) throw InputError("subbasic member names factor " + std::to_string(m.factor));
    if (!product.factor(m.factor).opens().contains(m.set)) {
      throw InputError("subbasic member " + to_string(m.set) + " is not open in factor " +
                       std::to_string(m.factor));
    }
    per_factor[m.factor].push_back(m.set);
  }
  for (auto& g : per_factor) g = Family(std::move(g)).members();

  // j: first factor whose members are positive at every one of its points.
  std::optional<std::size_t> chosen;
  std::vector<std::size_t> missed(k);
  for (std::size_t i = 0; i < k && !chosen; ++i) {
    const Topology& f = product.factor(i);
    bool all_positive = true;
    for (std::size_t x = 0; x < f.points() && all_positive; ++x) {
      const bool hit = std::any_of(per_factor[i].begin(), per_factor[i].end(),
                                   [x](const FuzzySet& s) { return s[x] > 0; });
      if (!hit) {
        all_positive = false;
        missed[i] = x;
      }
    }
    if (all_positive) chosen = i;
  }
  if (!chosen) {
    std::string a = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) a += ',';
      a += product.factor(i).carrier().label(missed[i]);
    }
    throw PreconditionError("not a cover: every factor misses a point, so the tuple a = " +
                            a + ") is uncovered");
  }
  const MvAlgebra algebra = product.algebra();
  const std::size_t j = *chosen;
  const Topology& fj = product.factor(j);
  const int n = product.chain().resolution();
  std::map<FuzzySet, long long> mult;
  for (std::size_t x = 0; x < fj.points(); ++x) {
    const FuzzySet* alpha = nullptr;
    for (const auto& s : per_factor[j]) {
      if (s[x] > 0) {
        alpha = &s;
        break;
      }
    }
    const long long needed = ceil_div(n, (*alpha)[x]);
    auto& m = mult[*alpha];
    m = std::max(m, needed);
  }
  std::vector<CoverEntry> entries;
  for (const auto& [alpha, m] : mult) {
    entries.push_back(CoverEntry{mv_preimage(product.projection(j), alpha), m});
  }
  SubbasicSubcover out{j, CoverCertificate(std::move(entries))};
  if (!is_additive_cover(algebra, out.certificate)) {
    throw std::logic_error("subbasic subcover failed to validate");
  }
  return out;
}

}  // namespace mvtop
