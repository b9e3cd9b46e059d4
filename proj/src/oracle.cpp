#include "mvtop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mvtop::oracle {

namespace {

constexpr double kMaxEnumeration = 5e7;

void guard_odometer(const MvAlgebra& algebra, std::size_t k) {
  const double count = std::pow(algebra.chain().resolution() + 1.0, static_cast<double>(k));
  if (count > kMaxEnumeration) {
    throw ResourceError("enumeration over " + std::to_string(k) +
                        " multiplicities is too large for the oracle");
  }
}

}  // namespace

Family naive_generate(const MvAlgebra& algebra, const Family& subbase) {
  std::set<FuzzySet> current(subbase.begin(), subbase.end());
  current.insert(algebra.zero());
  current.insert(algebra.one());
  while (true) {
    std::set<FuzzySet> products(current);
    for (const auto& a : current) {
      for (const auto& b : current) {
        products.insert(algebra.oplus(a, b));
        products.insert(algebra.odot(a, b));
        products.insert(algebra.meet(a, b));
      }
    }
    // joins of all subfamilies: fold each element into the set of joins
    // of subfamilies of the elements before it
    std::set<FuzzySet> joins{algebra.zero()};
    for (const auto& e : products) {
      std::vector<FuzzySet> extended;
      for (const auto& j : joins) extended.push_back(algebra.join(j, e));
      joins.insert(extended.begin(), extended.end());
    }
    joins.insert(algebra.one());
    if (joins == current) break;
    current = std::move(joins);
  }
  return Family(std::vector<FuzzySet>(current.begin(), current.end()));
}

std::optional<std::vector<int>> additive_cover_by_enumeration(const MvAlgebra& algebra,
                                                              const Family& gamma) {
  guard_odometer(algebra, gamma.size());
  const int n = algebra.chain().resolution();
  std::vector<int> mult(gamma.size(), 0);
  while (true) {
    std::vector<int> sum(algebra.points(), 0);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (std::size_t x = 0; x < sum.size(); ++x) {
        sum[x] = std::min(n, sum[x] + mult[i] * gamma[i][x]);
      }
    }
    if (std::all_of(sum.begin(), sum.end(), [n](int v) { return v == n; })) return mult;
    std::size_t i = mult.size();
    while (i-- > 0) {
      if (mult[i] < n) {
        ++mult[i];
        break;
      }
      mult[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

std::optional<CoverCertificate> certificate_search(const MvAlgebra& algebra,
                                                   std::span<const FuzzySet> members,
                                                   std::size_t max_states) {
  struct Step {
    FuzzySet from;
    std::size_t member;
    int copies;
  };
  const int n = algebra.chain().resolution();
  const FuzzySet one = algebra.one();
  std::map<FuzzySet, std::optional<Step>> parent;
  parent.emplace(algebra.zero(), std::nullopt);
  std::vector<FuzzySet> frontier{algebra.zero()};
  for (std::size_t i = 0; i < members.size() && !parent.count(one); ++i) {
    std::vector<FuzzySet> states = frontier;
    for (const auto& s : states) {
      for (int k = 1; k <= n; ++k) {
        FuzzySet next = algebra.oplus(s, algebra.scale(k, members[i]));
        if (parent.emplace(next, Step{s, i, k}).second) {
          frontier.push_back(next);
          if (parent.size() > max_states) {
            throw ResourceError("certificate search exceeded " +
                                std::to_string(max_states) + " states");
          }
        }
      }
    }
  }
  auto it = parent.find(one);
  if (it == parent.end()) return std::nullopt;
  std::vector<CoverEntry> entries;
  for (FuzzySet cur = one; parent.at(cur);) {
    const Step step = *parent.at(cur);
    entries.push_back(CoverEntry{members[step.member], step.copies});
    cur = step.from;
  }
  return CoverCertificate(std::move(entries));
}

std::optional<CoverCertificate> exhaustive_min_additive_cover(const MvAlgebra& algebra,
                                                              const Family& gamma) {
  guard_odometer(algebra, gamma.size());
  const int n = algebra.chain().resolution();
  std::optional<std::vector<int>> best;
  long long best_total = 0;
  std::vector<int> mult(gamma.size(), 0);
  while (true) {
    std::vector<int> sum(algebra.points(), 0);
    long long total = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      total += mult[i];
      for (std::size_t x = 0; x < sum.size(); ++x) {
        sum[x] = std::min(n, sum[x] + mult[i] * gamma[i][x]);
      }
    }
    const bool feasible =
        std::all_of(sum.begin(), sum.end(), [n](int v) { return v == n; });
    if (feasible && (!best || total < best_total ||
                     (total == best_total && mult > *best))) {
      best = mult;
      best_total = total;
    }
    std::size_t i = mult.size();
    while (i-- > 0) {
      if (mult[i] < n) {
        ++mult[i];
        break;
      }
      mult[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  if (!best) return std::nullopt;
  std::vector<CoverEntry> entries;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if ((*best)[i] > 0) entries.push_back(CoverEntry{gamma[i], (*best)[i]});
  }
  return CoverCertificate(std::move(entries));
}

std::optional<Family> exhaustive_min_subcover(const MvAlgebra& algebra,
                                              const Family& gamma) {
  std::optional<std::vector<std::size_t>> best;
  const std::size_t k = gamma.size();
  if (k > 24) throw ResourceError("subfamily enumeration over more than 24 sets");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    FuzzySet acc = algebra.zero();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        idx.push_back(i);
        acc = algebra.join(acc, gamma[i]);
      }
    }
    if (!algebra.is_one(acc)) continue;
    if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < *best)) {
      best = idx;
    }
  }
  if (!best) return std::nullopt;
  std::vector<FuzzySet> members;
  for (std::size_t i : *best) members.push_back(gamma[i]);
  return Family(std::move(members));
}

bool continuous_by_definition(const PointMap& f, const Family& domain_opens,
                              const Family& codomain_opens) {
  for (const auto& o : codomain_opens) {
    std::vector<Value> pulled(f.domain_size());
    for (std::size_t x = 0; x < pulled.size(); ++x) pulled[x] = o[f(x)];
    const FuzzySet p(std::move(pulled));
    if (std::find(domain_opens.begin(), domain_opens.end(), p) == domain_opens.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace mvtop::oracle
