#include "doctest.h"

#include "mvtop/term.hpp"
#include "mvtop/verify.hpp"

using namespace mvtop;

namespace {

FuzzySet fs(std::initializer_list<int> v) {
  std::vector<Value> out;
  for (int x : v) out.push_back(static_cast<Value>(x));
  return FuzzySet(std::move(out));
}

const Term v0 = Term::var(0);
const Term v1 = Term::var(1);
const Term v2 = Term::var(2);

}  // namespace

TEST_CASE("term structure") {
  const Term t = v0 + (v1 * v2);
  CHECK(t.length() == 5);
  CHECK(t.depth() == 2);
  CHECK(t.arity() == 3);
  CHECK(t.nodes()[t.root()].op == Term::Op::oplus);
  CHECK(v0.length() == 1);
  CHECK(v0.depth() == 0);
  CHECK((v1 & v1).arity() == 2);
  CHECK(t == v0 + (v1 * v2));
  CHECK_FALSE(t == (v0 + v1) * v2);
}

TEST_CASE("term evaluation") {
  const MvAlgebra alg(Chain(2), 2);
  const std::vector<FuzzySet> args{fs({1, 0}), fs({2, 1}), fs({1, 2})};
  CHECK(eval_term(alg, v0, args) == args[0]);
  CHECK(eval_term(alg, v1 * v2, args) == fs({1, 1}));
  CHECK(eval_term(alg, v0 + (v1 * v2), args) == fs({2, 1}));
  CHECK(eval_term(alg, v2 & v2, args) == args[2]);
  const auto values = eval_nodes(alg, v0 + (v1 * v2), args);
  REQUIRE(values.size() == 5);
  CHECK(values.back() == fs({2, 1}));
  CHECK_THROWS_AS(eval_term(alg, v0 + v2, std::vector<FuzzySet>{fs({1, 0})}), InputError);
}

TEST_CASE("term witness") {
  const MvAlgebra alg(Chain(2), 2);
  const Family m = verify::support_ideal(alg, {true, false});
  const std::vector<FuzzySet> same{fs({1, 0}), fs({1, 0})};
  CHECK(term_witness(alg, v0 + v1, same, 0, m) == 0);
  CHECK(term_witness(alg, v0, same, 0, m) == 0);
  const std::vector<FuzzySet> mixed{fs({1, 0}), fs({2, 2})};
  CHECK(term_witness(alg, v0 & v1, mixed, 0, m) == 0);
  CHECK(term_witness(alg, v1 * v0, mixed, 0, m) == 0);
  const std::vector<FuzzySet> split{fs({0, 0}), fs({2, 0})};
  CHECK(term_witness(alg, v0 + v1, split, 0, m) == 1);
}

TEST_CASE("term witness preconditions") {
  const MvAlgebra alg(Chain(2), 2);
  const Family m = verify::support_ideal(alg, {true, false});
  const std::vector<FuzzySet> args{fs({1, 0}), fs({2, 2})};
  CHECK_THROWS_AS(term_witness(alg, v1, args, 0, m), PreconditionError);
  CHECK_THROWS_AS(term_witness(alg, v0, args, 1, m), PreconditionError);
  CHECK_THROWS_AS(term_witness(alg, v0, args, 0, Family{fs({1, 0})}), PreconditionError);
  // odot of two sets outside m that lands inside it
  const std::vector<FuzzySet> outside{fs({1, 1}), fs({2, 1})};
  CHECK(eval_term(alg, v0 * v1, outside) == fs({1, 0}));
  CHECK_THROWS_AS(term_witness(alg, v0 * v1, outside, 0, m), PreconditionError);
}

TEST_CASE("term witness on random terms and support ideals") {
  verify::Rng rng(31);
  int found = 0;
  for (int i = 0; i < 3000; ++i) {
    const MvAlgebra alg(Chain(static_cast<int>(rng.between(1, 3))),
                        static_cast<std::size_t>(rng.between(1, 3)));
    const auto arity = static_cast<std::size_t>(rng.between(1, 4));
    const Term t = verify::random_term(rng, 4, arity);
    std::vector<FuzzySet> args;
    for (std::size_t j = 0; j < arity; ++j) args.push_back(verify::random_set(rng, alg));
    std::vector<bool> zone(alg.points());
    for (std::size_t x = 0; x < zone.size(); ++x) zone[x] = rng.chance(1, 2);
    const Family m = verify::support_ideal(alg, zone);
    const FuzzySet value = eval_term(alg, t, args);
    const std::size_t a = rng.below(alg.points());
    if (!m.contains(value) || value[a] == 0) continue;
    try {
      const std::size_t j = term_witness(alg, t, args, a, m);
      REQUIRE(j < args.size());
      REQUIRE(m.contains(args[j]));
      REQUIRE(args[j][a] > 0);
      ++found;
    } catch (const PreconditionError&) {
    }
  }
  CHECK(found > 100);
}
