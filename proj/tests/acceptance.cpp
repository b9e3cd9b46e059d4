// Acceptance run: one line per criterion, exit status 1 if any fails.
//
//   acceptance <corpus dir>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mvtop/document.hpp"
#include "mvtop/oracle.hpp"
#include "mvtop/verify.hpp"

using namespace mvtop;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string suite_detail(const verify::SuiteReport& r) {
  std::string d = r.suite + ": " + std::to_string(r.passed) + "/" + std::to_string(r.cases) +
                  " passed, " + std::to_string(r.checks) + " checks";
  if (r.first_failure) d += ", first failure: " + r.first_failure->message;
  return d;
}

bool suite_clean(const verify::SuiteReport& r) {
  return r.ok() && r.passed == r.cases && r.precondition_errors == 0;
}

// All families of at most `k` distinct sets drawn from `pool`.
void for_each_family(const std::vector<FuzzySet>& pool, std::size_t k,
                     const std::function<void(const std::vector<FuzzySet>&)>& visit) {
  std::vector<FuzzySet> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    visit(pick);
    if (pick.size() == k) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

Outcome algebra_axioms() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  for (int n = 1; n <= 8; ++n) violations += verify::algebra_violations(n);
  const double t = seconds_since(start);
  return {violations == 0 && t < 1.0,
          std::to_string(violations) + " violations over n = 1..8, " + fixed(t, 3) + " s (limit 1 s)"};
}

Outcome preimage_homomorphism() {
  verify::Rng rng(2024);
  std::size_t failures = 0;
  const int instances = 10000;
  for (int i = 0; i < instances; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 6)));
    const auto nx = static_cast<std::size_t>(rng.between(1, 5));
    const auto ny = static_cast<std::size_t>(rng.between(1, 5));
    const MvAlgebra ax(chain, nx), ay(chain, ny);
    const PointMap f = verify::random_map(rng, nx, ny);
    const FuzzySet a = verify::random_set(rng, ay);
    const FuzzySet b = verify::random_set(rng, ay);
    std::vector<FuzzySet> family;
    const auto k = rng.below(5);
    for (std::size_t j = 0; j < k; ++j) family.push_back(verify::random_set(rng, ay));
    const auto pre = [&](const FuzzySet& s) { return mv_preimage(f, s); };
    std::vector<FuzzySet> pulled;
    for (const auto& s : family) pulled.push_back(pre(s));
    const bool ok = pre(ay.oplus(a, b)) == ax.oplus(pre(a), pre(b)) &&
                    pre(ay.odot(a, b)) == ax.odot(pre(a), pre(b)) &&
                    pre(ay.meet(a, b)) == ax.meet(pre(a), pre(b)) &&
                    pre(ay.join(a, b)) == ax.join(pre(a), pre(b)) &&
                    pre(ay.neg(a)) == ax.neg(pre(a)) &&
                    pre(ay.join_all(family)) == ax.join_all(pulled);
    // direct pointwise reading of alpha o f
    bool pointwise = true;
    const FuzzySet pa = pre(a);
    for (std::size_t x = 0; x < nx; ++x) pointwise = pointwise && pa[x] == a[f(x)];
    if (!ok || !pointwise) ++failures;
  }
  return {failures == 0,
          std::to_string(failures) + " failures in " + std::to_string(instances) + " instances"};
}

Outcome generation_oracle() {
  const auto start = Clock::now();
  std::size_t subbases = 0, mismatches = 0;
  for (int n = 1; n <= 2; ++n) {
    for (std::size_t points = 1; points <= 3; ++points) {
      const MvAlgebra alg(Chain(n), points);
      const Carrier carrier = Carrier::indexed(points);
      for_each_family(enumerate_all(alg), 3, [&](const std::vector<FuzzySet>& s) {
        ++subbases;
        const Family sub(s);
        if (generate_from_subbase(carrier, Chain(n), sub).opens() !=
            oracle::naive_generate(alg, sub)) {
          ++mismatches;
        }
      });
    }
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && t < 60.0,
          std::to_string(mismatches) + " mismatches over all " + std::to_string(subbases) +
              " subbases, " + fixed(t) + " s (limit 60 s)"};
}

Outcome compactness_lemma() {
  std::size_t families = 0, mismatches = 0;
  for (int n = 1; n <= 2; ++n) {
    for (std::size_t points = 1; points <= 3; ++points) {
      const MvAlgebra alg(Chain(n), points);
      for_each_family(enumerate_all(alg), 5, [&](const std::vector<FuzzySet>& s) {
        ++families;
        const Family gamma(s);
        const bool brute = oracle::additive_cover_by_enumeration(alg, gamma).has_value();
        const auto found = find_additive_subcover(alg, gamma);
        const bool valid = !found || is_additive_cover(alg, *found);
        if (supports_cover(alg, gamma) != brute || found.has_value() != brute || !valid) {
          ++mismatches;
        }
      });
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over all " +
                               std::to_string(families) + " families"};
}

Outcome tychonoff() {
  const auto start = Clock::now();
  const auto r = verify::run_suite("tychonoff", 7, 50);
  const double t = seconds_since(start);
  return {suite_clean(r) && t < 300.0, suite_detail(r) + ", " + fixed(t) + " s (limit 300 s)"};
}

Outcome separation_products() {
  Outcome out;
  for (const char* name : {"hausdorff-product", "zerodim-product", "stone-product"}) {
    const auto r = verify::run_suite(name, 7, 100);
    out.pass = out.pass && suite_clean(r);
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += suite_detail(r);
  }
  return out;
}

Outcome universal_property() {
  const auto r = verify::run_suite("universal-property", 7, 100);
  return {suite_clean(r), suite_detail(r)};
}

Outcome claim_witness() {
  const auto r = verify::run_suite("alexander-claims", 7, 500);
  return {suite_clean(r), suite_detail(r)};
}

Outcome solver_optimality() {
  verify::Rng rng(7);
  std::size_t mismatches = 0, max_nodes = 0;
  const int instances = 200;
  SolverLimits limits;
  limits.max_nodes = 100000;
  for (int i = 0; i < instances; ++i) {
    const MvAlgebra alg(Chain(static_cast<int>(rng.between(1, 3))),
                        static_cast<std::size_t>(rng.between(1, 4)));
    const Family gamma = verify::random_family(rng, alg, 6);
    try {
      const auto add = minimal_additive_cover(alg, gamma, limits);
      const auto sub = minimal_subcover(alg, gamma, limits);
      max_nodes = std::max({max_nodes, add.nodes, sub.nodes});
      if (add.solution != oracle::exhaustive_min_additive_cover(alg, gamma)) ++mismatches;
      if (sub.solution != oracle::exhaustive_min_subcover(alg, gamma)) ++mismatches;
    } catch (const ResourceError&) {
      ++mismatches;
      max_nodes = limits.max_nodes + 1;
    }
  }
  return {mismatches == 0 && max_nodes <= limits.max_nodes,
          std::to_string(mismatches) + " mismatches over " + std::to_string(instances) +
              " instances, at most " + std::to_string(max_nodes) + " nodes (limit 100000)"};
}

Outcome determinism(const std::filesystem::path& corpus) {
  std::size_t differing = 0;
  for (const auto& name : verify::suite_names()) {
    const std::uint64_t cases = name == "algebra" ? 20 : 30;
    if (render(verify::to_json(verify::run_suite(name, 11, cases))) !=
        render(verify::to_json(verify::run_suite(name, 11, cases)))) {
      ++differing;
    }
  }
  std::size_t documents = 0, round_trip_failures = 0;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(corpus, ec)) {
    const auto file = e.path().filename().string();
    if (e.path().extension() != ".json" || file.rfind("metric_", 0) == 0 ||
        file.rfind("map_", 0) == 0) {
      continue;
    }
    std::ifstream in(e.path());
    std::ostringstream text;
    text << in.rdbuf();
    ++documents;
    try {
      if (write_space_document(parse_space_document(text.str())) != text.str()) {
        ++round_trip_failures;
      }
    } catch (const std::exception&) {
      ++round_trip_failures;
    }
  }
  return {differing == 0 && documents >= 20 && round_trip_failures == 0,
          std::to_string(differing) + " of " + std::to_string(verify::suite_names().size()) +
              " suites differ between runs; " + std::to_string(round_trip_failures) +
              " round-trip failures over " + std::to_string(documents) +
              " documents (need >= 20)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path corpus = argc > 1 ? argv[1] : "tests/data";
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 MV-algebra axioms, n <= 8", algebra_axioms},
      {"2 MV-preimage homomorphism", preimage_homomorphism},
      {"3 generation vs closure oracle", generation_oracle},
      {"4 finite compactness lemma", compactness_lemma},
      {"5 Tychonoff on small factors", tychonoff},
      {"6 Hausdorff/zero-dim/Stone products", separation_products},
      {"7 universal property", universal_property},
      {"8 term witness extraction", claim_witness},
      {"9 solver optimality", solver_optimality},
      {"10 determinism and round trip", [&] { return determinism(corpus); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
