#include "mvtop/verify.hpp"

#include <algorithm>

#include "mvtop/oracle.hpp"

namespace mvtop::verify {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r < threshold);
  return r % bound;
}

long long Rng::between(long long lo, long long hi) {
  if (hi < lo) std::swap(lo, hi);
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FuzzySet random_set(Rng& rng, const MvAlgebra& algebra) {
  const int n = algebra.chain().resolution();
  std::vector<Value> values(algebra.points());
  for (auto& v : values) {
    switch (rng.below(4)) {
      case 0: v = 0; break;
      case 1: v = static_cast<Value>(n); break;
      default: v = static_cast<Value>(rng.between(0, n));
    }
  }
  return FuzzySet(std::move(values));
}

Family random_family(Rng& rng, const MvAlgebra& algebra, std::size_t max_size) {
  const auto k = static_cast<std::size_t>(rng.between(0, static_cast<long long>(max_size)));
  std::vector<FuzzySet> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back(random_set(rng, algebra));
  return Family(std::move(members));
}

PointMap random_map(Rng& rng, std::size_t domain, std::size_t codomain) {
  std::vector<std::size_t> images(domain);
  for (auto& y : images) y = static_cast<std::size_t>(rng.below(codomain));
  return PointMap(domain, codomain, std::move(images));
}

Term random_term(Rng& rng, std::size_t max_depth, std::size_t arity) {
  if (max_depth == 0 || rng.chance(1, 3)) {
    return Term::var(static_cast<std::size_t>(rng.below(arity)));
  }
  static constexpr Term::Op kOps[] = {Term::Op::oplus, Term::Op::odot, Term::Op::meet};
  const Term::Op op = kOps[rng.below(3)];
  Term left = random_term(rng, max_depth - 1, arity);
  Term right = random_term(rng, max_depth - 1, arity);
  return Term::combine(op, left, right);
}

namespace {

std::optional<Topology> try_generate(const Carrier& carrier, const Chain& chain,
                                     const Family& subbase, std::size_t max_opens) {
  try {
    Topology tau = generate_from_subbase(carrier, chain, subbase, max_opens);
    if (tau.opens().size() <= max_opens) return tau;
  } catch (const ResourceError&) {
  }
  return std::nullopt;
}

bool is_constant(const FuzzySet& s) {
  const auto v = s.values();
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

FuzzySet crisp_point(const MvAlgebra& algebra, std::size_t x) {
  std::vector<Value> v(algebra.points(), 0);
  v[x] = algebra.top();
  return FuzzySet(std::move(v));
}

Family crisp_points(const MvAlgebra& algebra) {
  std::vector<FuzzySet> members;
  for (std::size_t x = 0; x < algebra.points(); ++x) members.push_back(crisp_point(algebra, x));
  return Family(std::move(members));
}

std::vector<FuzzySet> with_complements(Rng& rng, const MvAlgebra& algebra,
                                       std::size_t max_size) {
  std::vector<FuzzySet> members;
  const auto k = rng.between(0, static_cast<long long>(max_size));
  for (long long i = 0; i < k; ++i) {
    FuzzySet s = random_set(rng, algebra);
    members.push_back(algebra.neg(s));
    members.push_back(std::move(s));
  }
  return members;
}

bool in_class(const Topology& tau, SpaceClass cls) {
  switch (cls) {
    case SpaceClass::any: return true;
    case SpaceClass::hausdorff: return is_hausdorff(tau);
    case SpaceClass::zero_dimensional: return is_zero_dimensional(tau);
    case SpaceClass::stone: return is_stone(tau);
  }
  return false;
}

}  // namespace

Topology random_topology(Rng& rng, const Carrier& carrier, const Chain& chain,
                         const SpaceBounds& bounds) {
  return random_space_in(rng, SpaceClass::any, carrier, chain, bounds);
}

Topology random_topology(Rng& rng, const SpaceBounds& bounds) {
  const auto points = static_cast<std::size_t>(rng.between(
      static_cast<long long>(bounds.min_points), static_cast<long long>(bounds.max_points)));
  const Chain chain(static_cast<int>(rng.between(bounds.min_chain, bounds.max_chain)));
  return random_topology(rng, Carrier::indexed(points), chain, bounds);
}

Topology random_space_in(Rng& rng, SpaceClass cls, const Carrier& carrier,
                         const Chain& chain, const SpaceBounds& bounds) {
  const MvAlgebra algebra(chain, carrier.size());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<FuzzySet> subbase;
    switch (cls) {
      case SpaceClass::any: {
        // constant members rarely add anything; redraw them a few times
        const auto k = rng.between(0, static_cast<long long>(bounds.max_subbase));
        for (long long i = 0; i < k; ++i) {
          FuzzySet s = random_set(rng, algebra);
          for (int redraw = 0; redraw < 4 && is_constant(s); ++redraw) {
            s = random_set(rng, algebra);
          }
          subbase.push_back(std::move(s));
        }
        break;
      }
      case SpaceClass::hausdorff:
        subbase = random_family(rng, algebra, bounds.max_subbase).members();
        for (std::size_t x = 0; x < carrier.size(); ++x) {
          std::vector<Value> v(carrier.size());
          for (std::size_t y = 0; y < v.size(); ++y) {
            v[y] = y == x ? algebra.top()
                          : rng.chance(3, 4) ? Value{0}
                                             : static_cast<Value>(rng.between(0, algebra.top()));
          }
          subbase.emplace_back(std::move(v));
        }
        break;
      case SpaceClass::zero_dimensional:
        subbase = with_complements(rng, algebra, bounds.max_subbase);
        if (rng.chance(1, 4)) subbase.push_back(random_set(rng, algebra));
        break;
      case SpaceClass::stone:
        subbase = with_complements(rng, algebra, bounds.max_subbase);
        for (std::size_t x = 0; x < carrier.size(); ++x) {
          if (rng.chance(3, 4)) {
            subbase.push_back(crisp_point(algebra, x));
            subbase.push_back(algebra.neg(crisp_point(algebra, x)));
          }
        }
        break;
    }
    auto tau = try_generate(carrier, chain, Family(std::move(subbase)), bounds.max_opens);
    if (tau && in_class(*tau, cls)) return *tau;
  }
  if (cls == SpaceClass::hausdorff || cls == SpaceClass::stone) {
    if (auto tau = try_generate(carrier, chain, crisp_points(algebra), bounds.max_opens)) {
      return *tau;
    }
  }
  return Topology::indiscrete(carrier, chain);
}

std::vector<SubbasicMember> random_subbasic_cover(Rng& rng, const ProductSpace& product) {
  const std::size_t factors = product.factor_count();
  auto pick_open = [&](std::size_t j) -> const FuzzySet& {
    const Family& opens = product.factor(j).opens();
    return opens[static_cast<std::size_t>(rng.below(opens.size()))];
  };
  std::vector<SubbasicMember> gamma;
  const auto extra = rng.between(0, 4);
  for (long long i = 0; i < extra; ++i) {
    const auto j = static_cast<std::size_t>(rng.below(factors));
    gamma.push_back(SubbasicMember{j, pick_open(j)});
  }
  const Value top = product.chain().top();
  for (std::size_t p = 0; p < product.points(); ++p) {
    const auto coords = product.coordinates(p);
    Value best = 0;
    for (const auto& m : gamma) best = std::max(best, m.set[coords[m.factor]]);
    if (best == top) continue;
    const auto j = static_cast<std::size_t>(rng.below(factors));
    std::vector<const FuzzySet*> full;
    for (const auto& o : product.factor(j).opens()) {
      if (o[coords[j]] == top) full.push_back(&o);
    }
    gamma.push_back(SubbasicMember{j, *full[static_cast<std::size_t>(rng.below(full.size()))]});
  }
  return gamma;
}

Family support_ideal(const MvAlgebra& algebra, const std::vector<bool>& zone) {
  const int n = algebra.chain().resolution();
  std::vector<std::size_t> free;
  for (std::size_t x = 0; x < algebra.points(); ++x) {
    if (x < zone.size() && zone[x]) free.push_back(x);
  }
  std::vector<FuzzySet> members;
  std::vector<Value> v(algebra.points(), 0);
  while (true) {
    members.emplace_back(v);
    std::size_t i = free.size();
    while (i-- > 0) {
      if (v[free[i]] < n) {
        ++v[free[i]];
        break;
      }
      v[free[i]] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return Family(std::move(members));
}

std::size_t algebra_violations(int n) {
  const Chain c(n);
  const Value zero = 0;
  std::size_t bad = 0;
  auto expect = [&bad](bool ok) { bad += ok ? 0 : 1; };
  for (int ai = 0; ai <= n; ++ai) {
    for (int bi = 0; bi <= n; ++bi) {
      for (int ci = 0; ci <= n; ++ci) {
        const auto a = static_cast<Value>(ai);
        const auto b = static_cast<Value>(bi);
        const auto d = static_cast<Value>(ci);
        expect(c.oplus(a, c.oplus(b, d)) == c.oplus(c.oplus(a, b), d));
        expect(c.oplus(a, b) == c.oplus(b, a));
        expect(c.oplus(a, zero) == a);
        expect(c.neg(c.neg(a)) == a);
        expect(c.oplus(a, c.neg(zero)) == c.neg(zero));
        expect(c.oplus(c.neg(c.oplus(c.neg(a), b)), b) ==
               c.oplus(c.neg(c.oplus(c.neg(b), a)), a));
        expect(c.odot(a, c.oplus(b, d)) <= c.oplus(b, c.odot(a, d)));
        expect(c.odot(a, b) == c.neg(c.oplus(c.neg(a), c.neg(b))));
        expect(c.meet(a, b) == c.odot(a, c.oplus(c.neg(a), b)));
        expect(c.join(a, b) == c.oplus(c.odot(a, c.neg(b)), b));
      }
    }
    Value sum = 0;
    for (int k = 0; k <= n + 2; ++k) {
      expect(c.scale(k, static_cast<Value>(ai)) == sum);
      sum = c.oplus(sum, static_cast<Value>(ai));
    }
    expect(c.scale(n, static_cast<Value>(ai)) == (ai > 0 ? c.top() : zero));
  }
  return bad;
}

namespace {

constexpr int kFullSize = 16;

struct CaseFailed {
  std::string message;
};

struct Case {
  Rng rng;
  int size;
  const SuiteOptions& options;
  Json instance = Json::object();
  std::uint64_t checks = 0;

  int cap(int bound) const { return std::max(1, std::min(bound, size)); }
  long long upto(int bound) { return rng.between(1, cap(bound)); }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw CaseFailed{what};
  }
};

enum class Status { pass, fail, precondition };

struct Outcome {
  Status status = Status::pass;
  std::uint64_t checks = 0;
  std::string message;
  Json instance;
};

Json space_json(const Topology& tau) { return to_json(to_document(tau)); }

Json map_json(const PointMap& f) { return Json(f.images()); }

Carrier points(Case& c, int bound) {
  return Carrier::indexed(static_cast<std::size_t>(c.upto(bound)));
}

FuzzySet within(const MvAlgebra& algebra, FuzzySet s, const std::vector<bool>& zone) {
  std::vector<Value> v(s.values().begin(), s.values().end());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (!zone[x]) v[x] = 0;
  }
  return algebra.make(std::vector<long long>(v.begin(), v.end()));
}

void check_subbasic(Case& c, const ProductSpace& product,
                    const std::vector<SubbasicMember>& gamma, const SubbasicSubcover& s) {
  c.expect(s.factor < product.factor_count(), "subcover factor out of range");
  std::vector<FuzzySet> allowed;
  for (const auto& m : gamma) {
    if (m.factor == s.factor) allowed.push_back(mv_preimage(product.projection(s.factor), m.set));
  }
  for (const auto& e : s.certificate.entries()) {
    c.expect(std::find(allowed.begin(), allowed.end(), e.set) != allowed.end(),
             "certificate entry " + to_string(e.set) + " is not pulled back from factor " +
                 std::to_string(s.factor));
  }
  c.expect(is_additive_cover(product.algebra(), s.certificate),
           "subbasic certificate is not an additive cover");
}

Json subbasic_json(const std::vector<SubbasicMember>& gamma) {
  Json j = Json::array();
  for (const auto& m : gamma) {
    Json entry = Json::object();
    entry["factor"] = m.factor;
    entry["set"] = fuzzy_to_json(m.set);
    j.push_back(std::move(entry));
  }
  return j;
}

void check_report_certificates(Case& c, const MvAlgebra& algebra, const CompactnessReport& r) {
  for (const auto& [cover, cert] : r.certificates) {
    for (const auto& e : cert.entries()) {
      c.expect(cover.contains(e.set), "certificate uses a set outside its cover");
    }
    c.expect(is_additive_cover(algebra, cert), "compactness certificate does not validate");
  }
}

// ---- suites ----

void algebra_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(8)));
  const MvAlgebra alg(chain, static_cast<std::size_t>(c.upto(4)));
  const FuzzySet a = random_set(c.rng, alg);
  const FuzzySet b = random_set(c.rng, alg);
  const FuzzySet d = random_set(c.rng, alg);
  const auto k = c.rng.between(0, chain.resolution() + 2);
  c.instance = {{"chain", chain.resolution()},
                {"a", fuzzy_to_json(a)},
                {"b", fuzzy_to_json(b)},
                {"c", fuzzy_to_json(d)},
                {"k", k}};
  const FuzzySet zero = alg.zero();
  c.expect(alg.oplus(a, alg.oplus(b, d)) == alg.oplus(alg.oplus(a, b), d), "oplus associative");
  c.expect(alg.oplus(a, b) == alg.oplus(b, a), "oplus commutative");
  c.expect(alg.oplus(a, zero) == a, "zero is the oplus unit");
  c.expect(alg.neg(alg.neg(a)) == a, "double negation");
  c.expect(alg.oplus(a, alg.neg(zero)) == alg.neg(zero), "one absorbs");
  c.expect(alg.oplus(alg.neg(alg.oplus(alg.neg(a), b)), b) ==
               alg.oplus(alg.neg(alg.oplus(alg.neg(b), a)), a),
           "Lukasiewicz axiom");
  c.expect(alg.odot(a, alg.oplus(b, d)).leq(alg.oplus(b, alg.odot(a, d))),
           "a odot (b oplus c) <= b oplus (a odot c)");
  c.expect(alg.odot(a, b) == alg.neg(alg.oplus(alg.neg(a), alg.neg(b))), "odot by duality");
  c.expect(alg.meet(a, b) == alg.odot(a, alg.oplus(alg.neg(a), b)), "meet from oplus/odot");
  c.expect(alg.join(a, b) == alg.oplus(alg.odot(a, alg.neg(b)), b), "join from oplus/odot");
  FuzzySet sum = zero;
  for (long long i = 0; i < k; ++i) sum = alg.oplus(sum, a);
  c.expect(alg.scale(k, a) == sum, "scalar multiple equals repeated oplus");
  for (std::size_t x = 0; x < alg.points(); ++x) {
    c.expect(alg.oplus(a, b)[x] == chain.oplus(a[x], b[x]), "pointwise oplus");
    c.expect(alg.scale(chain.resolution(), a)[x] == (a[x] > 0 ? chain.top() : 0),
             "n-fold multiple is the crisp support");
  }
}

void preimage_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(6)));
  const std::size_t nx = static_cast<std::size_t>(c.upto(5));
  const std::size_t ny = static_cast<std::size_t>(c.upto(5));
  const MvAlgebra ax(chain, nx);
  const MvAlgebra ay(chain, ny);
  const PointMap f = random_map(c.rng, nx, ny);
  const FuzzySet a = random_set(c.rng, ay);
  const FuzzySet b = random_set(c.rng, ay);
  std::vector<FuzzySet> fam;
  for (auto k = c.rng.between(0, 4); k > 0; --k) fam.push_back(random_set(c.rng, ay));
  c.instance = {{"chain", chain.resolution()}, {"map", map_json(f)},
                {"alpha", fuzzy_to_json(a)},   {"beta", fuzzy_to_json(b)},
                {"family", Json::array()}};
  for (const auto& s : fam) c.instance["family"].push_back(fuzzy_to_json(s));
  auto pre = [&f](const FuzzySet& s) { return mv_preimage(f, s); };
  c.expect(pre(ay.oplus(a, b)) == ax.oplus(pre(a), pre(b)), "preimage preserves oplus");
  c.expect(pre(ay.odot(a, b)) == ax.odot(pre(a), pre(b)), "preimage preserves odot");
  c.expect(pre(ay.meet(a, b)) == ax.meet(pre(a), pre(b)), "preimage preserves meet");
  c.expect(pre(ay.join(a, b)) == ax.join(pre(a), pre(b)), "preimage preserves join");
  c.expect(pre(ay.neg(a)) == ax.neg(pre(a)), "preimage preserves negation");
  c.expect(pre(ay.zero()) == ax.zero() && pre(ay.one()) == ax.one(), "preimage preserves bounds");
  std::vector<FuzzySet> pulled;
  for (const auto& s : fam) pulled.push_back(pre(s));
  c.expect(pre(ay.join_all(fam)) == ax.join_all(pulled), "preimage preserves joins of families");
  c.expect(pre(ay.meet_all(fam)) == ax.meet_all(pulled), "preimage preserves meets of families");
}

void generation_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(2)));
  const Carrier carrier = points(c, 3);
  const MvAlgebra alg(chain, carrier.size());
  const Family subbase = random_family(c.rng, alg, static_cast<std::size_t>(c.cap(3)));
  c.instance = {{"chain", chain.resolution()},
                {"points", carrier.size()},
                {"subbase", family_to_json(subbase)}};
  const Topology tau = generate_from_subbase(carrier, chain, subbase);
  c.expect(tau.opens() == oracle::naive_generate(alg, subbase),
           "generated opens differ from the alternating-closure oracle");
  c.expect(is_topology(alg, tau.opens()), "generated family is not a topology");
  c.expect(generate_from_subbase(carrier, chain, tau.opens()) == tau,
           "regenerating from the opens changed them");
  c.expect(is_subbase(subbase, tau), "input is not recognized as a subbase");
}

void continuity_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(2)));
  SpaceBounds bounds;
  const Topology tx = random_topology(c.rng, points(c, 3), chain, bounds);
  const Carrier cy = points(c, 3);
  const MvAlgebra ay(chain, cy.size());
  const Family theta = random_family(c.rng, ay, static_cast<std::size_t>(c.cap(3)));
  const Topology ty = generate_from_subbase(cy, chain, theta);
  const PointMap f = random_map(c.rng, tx.points(), ty.points());
  c.instance = {{"domain", space_json(tx)}, {"codomain_subbase", family_to_json(theta)},
                {"codomain_points", cy.size()}, {"map", map_json(f)}};
  const bool expected = oracle::continuous_by_definition(f, tx.opens(), ty.opens());
  const MapCheck r = check_continuous(f, tx, ty);
  c.expect(r.holds == expected, "check_continuous disagrees with the definition");
  if (!expected) {
    std::optional<FuzzySet> first;
    for (const auto& o : ty.opens()) {
      if (!tx.opens().contains(mv_preimage(f, o))) {
        first = o;
        break;
      }
    }
    c.expect(r.counterexample == first, "counterexample is not the first failing open");
  }
  c.expect(check_continuous_via_base(f, tx, base_from_subbase(ay, theta)).holds == expected,
           "base criterion disagrees with the definition");
  c.expect(check_continuous_via_base(f, tx, theta).holds == expected,
           "subbase criterion disagrees with the definition");
}

void tychonoff_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(2)));
  SpaceBounds bounds;
  bounds.max_opens = 6;
  std::vector<Topology> factors;
  for (int i = 0; i < 2; ++i) factors.push_back(random_topology(c.rng, points(c, 2), chain, bounds));
  c.instance = {{"factors", {space_json(factors[0]), space_json(factors[1])}}};
  for (const auto& f : factors) {
    const auto r = check_compact(f, CompactnessMode::oracle);
    c.expect(r.holds, "factor fails the compactness oracle");
    check_report_certificates(c, f.algebra(), r);
  }
  const ProductSpace product(factors);
  const Topology& tau = product.topology();
  const auto r = check_compact(tau, CompactnessMode::oracle);
  c.expect(r.holds, "product fails the compactness oracle");
  check_report_certificates(c, tau.algebra(), r);
  for (int i = 0; i < 20; ++i) {
    const auto gamma = random_subbasic_cover(c.rng, product);
    c.instance["subbasic_cover"] = subbasic_json(gamma);
    check_subbasic(c, product, gamma, product_subbasic_subcover(product, gamma));
  }
  c.instance.erase("subbasic_cover");
}

void product_class_case(Case& c, SpaceClass cls) {
  const Chain chain(static_cast<int>(c.upto(2)));
  SpaceBounds bounds;
  bounds.max_opens = 200;
  std::vector<Topology> factors;
  for (int i = 0; i < 2; ++i) {
    factors.push_back(random_space_in(c.rng, cls, points(c, 2), chain, bounds));
  }
  c.instance = {{"factors", {space_json(factors[0]), space_json(factors[1])}}};
  for (const auto& f : factors) c.expect(in_class(f, cls), "generator left the hypothesis class");
  const ProductSpace product(factors);
  const Topology& tau = product.topology();
  switch (cls) {
    case SpaceClass::hausdorff: {
      c.expect(is_hausdorff(tau), "product of Hausdorff spaces is not Hausdorff");
      const Value top = chain.top();
      for (std::size_t x = 0; x < tau.points(); ++x) {
        for (std::size_t y = 0; y < tau.points(); ++y) {
          if (x == y) continue;
          const auto w = product_separation(product, x, y);
          const std::string pair = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
          c.expect(w.has_value(), "no projected separation for " + pair);
          c.expect(tau.opens().contains(w->open_x) && tau.opens().contains(w->open_y),
                   "projected separation of " + pair + " is not open");
          c.expect(w->open_x[x] == top && w->open_y[y] == top,
                   "projected separation of " + pair + " misses a point");
          c.expect(tau.algebra().meet(w->open_x, w->open_y).is_zero(),
                   "projected separation of " + pair + " overlaps");
        }
      }
      break;
    }
    case SpaceClass::zero_dimensional:
      c.expect(is_zero_dimensional(tau), "product of zero-dimensional spaces is not");
      break;
    case SpaceClass::stone:
      c.expect(is_stone(tau, true), "product of Stone spaces is not Stone");
      break;
    case SpaceClass::any:
      break;
  }
}

void hausdorff_case(Case& c) { product_class_case(c, SpaceClass::hausdorff); }
void zerodim_case(Case& c) { product_class_case(c, SpaceClass::zero_dimensional); }
void stone_case(Case& c) { product_class_case(c, SpaceClass::stone); }

bool claim_instance(const MvAlgebra& alg, const Term& t, const std::vector<FuzzySet>& args,
                    std::size_t a, const Family& m) {
  const auto value = eval_nodes(alg, t, args);
  if (!m.contains(value[t.root()]) || value[t.root()][a] == 0) return false;
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const auto& node = t.nodes()[i];
    if (node.op == Term::Op::odot || node.op == Term::Op::meet) {
      if (m.contains(value[i]) && !m.contains(value[node.left]) &&
          !m.contains(value[node.right])) {
        return false;
      }
    }
  }
  return true;
}

void alexander_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(3)));
  const MvAlgebra alg(chain, static_cast<std::size_t>(c.upto(4)));
  const auto a = static_cast<std::size_t>(c.rng.below(alg.points()));
  std::vector<bool> zone(alg.points());
  for (std::size_t x = 0; x < zone.size(); ++x) zone[x] = x == a || c.rng.chance(1, 2);
  const Family m = support_ideal(alg, zone);
  const auto arity = static_cast<std::size_t>(c.upto(4));

  std::optional<Term> term;
  std::vector<FuzzySet> args;
  for (int attempt = 0; attempt < 64 && !term; ++attempt) {
    Term t = random_term(c.rng, static_cast<std::size_t>(c.rng.between(0, c.cap(5))), arity);
    args.clear();
    for (std::size_t i = 0; i < arity; ++i) {
      FuzzySet s = random_set(c.rng, alg);
      args.push_back(c.rng.chance(3, 4) ? within(alg, s, zone) : s);
    }
    if (claim_instance(alg, t, args, a, m)) term = std::move(t);
  }
  if (!term) {
    term = Term::var(0);
    args.assign(1, crisp_point(alg, a));
  }
  Json zone_json = Json::array();
  for (bool z : zone) zone_json.push_back(z ? 1 : 0);
  c.instance = {{"chain", chain.resolution()}, {"zone", zone_json}, {"point", a},
                {"term", term->to_string()},   {"args", Json::array()}};
  for (const auto& s : args) c.instance["args"].push_back(fuzzy_to_json(s));

  c.expect(is_ideal(alg, m), "support ideal fails the ideal predicate");
  std::vector<std::size_t> witnesses;
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (m.contains(args[j]) && args[j][a] > 0) witnesses.push_back(j);
  }
  c.expect(!witnesses.empty(), "brute force finds no witness");
  const std::size_t j = term_witness(alg, *term, args, a, m);
  c.expect(std::find(witnesses.begin(), witnesses.end(), j) != witnesses.end(),
           "term witness " + std::to_string(j) + " violates its postcondition");

  const FuzzySet outside = random_set(c.rng, alg);
  if (!m.contains(outside)) {
    c.expect(!m.contains(alg.join(outside, random_set(c.rng, alg))),
             "complement of the ideal is not upward closed");
  }
  const FuzzySet inside = within(alg, random_set(c.rng, alg), zone);
  c.expect(m.contains(alg.meet(inside, random_set(c.rng, alg))), "ideal is not downward closed");

  const auto k = c.rng.between(1, 4);
  const FuzzySet beta = random_set(c.rng, alg);
  FuzzySet product = alg.one();
  for (long long i = 0; i < k; ++i) {
    const FuzzySet alpha = alg.join(alg.neg(beta), random_set(c.rng, alg));
    c.expect(alg.is_one(alg.oplus(alpha, beta)), "generated alpha does not complete beta");
    product = alg.odot(product, alpha);
  }
  c.expect(alg.is_one(alg.oplus(product, alg.scale(k, beta))),
           "product of completions plus k copies of beta is not the top set");
}

void lemma1_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(3)));
  SpaceBounds bounds;
  bounds.max_opens = 200;
  std::vector<Topology> factors;
  const auto count = c.upto(3);
  for (long long i = 0; i < count; ++i) {
    factors.push_back(random_topology(c.rng, points(c, 3), chain, bounds));
  }
  c.instance = {{"factors", Json::array()}};
  for (const auto& f : factors) c.instance["factors"].push_back(space_json(f));
  const ProductSpace product(factors);
  auto gamma = random_subbasic_cover(c.rng, product);
  if (c.options.inject_noncover) {
    const auto p = static_cast<std::size_t>(c.rng.below(product.points()));
    const auto coords = product.coordinates(p);
    std::erase_if(gamma, [&](const SubbasicMember& m) { return m.set[coords[m.factor]] > 0; });
  }
  c.instance["subbasic_cover"] = subbasic_json(gamma);
  const auto s = product_subbasic_subcover(product, gamma);
  c.expect(!c.options.inject_noncover, "a non-cover was accepted");
  check_subbasic(c, product, gamma, s);
}

void universal_case(Case& c) {
  const Chain chain(static_cast<int>(c.upto(2)));
  SpaceBounds bounds;
  bounds.max_opens = 200;
  std::vector<Topology> factors;
  for (int i = 0; i < 2; ++i) factors.push_back(random_topology(c.rng, points(c, 2), chain, bounds));
  // the source subbase contains every pulled-back open, so each map is
  // continuous by construction
  const Carrier source_points = points(c, 3);
  const MvAlgebra source_alg(chain, source_points.size());
  std::vector<PointMap> maps;
  std::vector<FuzzySet> subbase = random_family(c.rng, source_alg, 2).members();
  for (const auto& f : factors) {
    maps.push_back(random_map(c.rng, source_points.size(), f.points()));
    for (const auto& o : f.opens()) subbase.push_back(mv_preimage(maps.back(), o));
  }
  const Topology source =
      generate_from_subbase(source_points, chain, Family(std::move(subbase)));
  c.instance = {{"factors", {space_json(factors[0]), space_json(factors[1])}},
                {"source", space_json(source)},
                {"maps", {map_json(maps[0]), map_json(maps[1])}}};
  const ProductSpace product(factors);
  const auto r = verify_universal_property(product, source, maps);
  c.expect(r.continuous, "tupled map is not continuous");
  c.expect(r.commutes, "tupled map does not commute with the projections");
  c.expect(r.unique, "tupled map is not unique");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    c.expect(r.tupled.then(product.projection(i)) == maps[i], "projection of the tupling differs");
  }
  c.expect(oracle::continuous_by_definition(r.tupled, source.opens(), product.topology().opens()),
           "tupled map fails continuity against the materialized product");
}

struct Suite {
  const char* name;
  void (*run)(Case&);
};

constexpr Suite kSuites[] = {
    {"algebra", algebra_case},
    {"generation", generation_case},
    {"continuity", continuity_case},
    {"tychonoff", tychonoff_case},
    {"hausdorff-product", hausdorff_case},
    {"zerodim-product", zerodim_case},
    {"stone-product", stone_case},
    {"alexander-claims", alexander_case},
    {"lemma1", lemma1_case},
    {"universal-property", universal_case},
    {"preimage", preimage_case},
};

Outcome run_case(const Suite& suite, std::uint64_t seed, int size,
                 const SuiteOptions& options) {
  Case c{Rng(seed), size, options};
  Outcome out;
  try {
    suite.run(c);
  } catch (const CaseFailed& e) {
    out.status = Status::fail;
    out.message = e.message;
  } catch (const PreconditionError& e) {
    out.status = options.inject_noncover ? Status::precondition : Status::fail;
    out.message = std::string("precondition: ") + e.what();
  } catch (const ResourceError& e) {
    out.status = Status::fail;
    out.message = std::string("resource: ") + e.what();
  } catch (const std::exception& e) {
    out.status = Status::fail;
    out.message = std::string("error: ") + e.what();
  }
  out.checks = c.checks;
  out.instance = std::move(c.instance);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::uint64_t cases,
                      SuiteOptions options) {
  const Suite* suite = nullptr;
  for (const auto& s : kSuites) {
    if (name == s.name) suite = &s;
  }
  if (!suite) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw InputError("unknown suite \"" + std::string(name) + "\" (expected one of " + known + ")");
  }
  SuiteReport report;
  report.suite = suite->name;
  report.seed = seed;
  report.cases = cases;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const std::uint64_t cs = case_seed(seed, i);
    Outcome out = run_case(*suite, cs, kFullSize, options);
    report.checks += out.checks;
    switch (out.status) {
      case Status::pass: ++report.passed; break;
      case Status::precondition: ++report.precondition_errors; break;
      case Status::fail: ++report.failed; break;
    }
    if (out.status != Status::fail || report.first_failure) continue;
    int size = kFullSize;
    for (int s = 1; s < kFullSize; ++s) {
      Outcome smaller = run_case(*suite, cs, s, options);
      if (smaller.status == Status::fail) {
        out = std::move(smaller);
        size = s;
        break;
      }
    }
    report.first_failure = Failure{i, cs, size, out.message, std::move(out.instance)};
  }
  return report;
}

Json to_json(const SuiteReport& report) {
  Json j = Json::object();
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["cases"] = report.cases;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["precondition_errors"] = report.precondition_errors;
  j["checks"] = report.checks;
  if (report.first_failure) {
    const Failure& f = *report.first_failure;
    j["first_failure"] = {{"case", f.index},     {"case_seed", f.case_seed},
                          {"size", f.size},      {"message", f.message},
                          {"instance", f.instance}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

}  // namespace mvtop::verify
