#include "doctest.h"

#include "mvtop/fuzzy.hpp"
#include "mvtop/verify.hpp"

using namespace mvtop;

namespace {

FuzzySet fs(std::initializer_list<int> v) {
  std::vector<Value> out;
  for (int x : v) out.push_back(static_cast<Value>(x));
  return FuzzySet(std::move(out));
}

// Ideal by definition: nonempty, every set below a member is a member,
// closed under oplus.
bool ideal_by_definition(const MvAlgebra& alg, const Family& m) {
  if (m.empty()) return false;
  const auto all = enumerate_all(alg);
  for (const auto& a : m) {
    for (const auto& b : all) {
      if (b.leq(a) && !m.contains(b)) return false;
    }
    for (const auto& b : m) {
      if (!m.contains(alg.oplus(a, b))) return false;
    }
  }
  return true;
}

bool filter_by_definition(const MvAlgebra& alg, const Family& f) {
  if (f.empty()) return false;
  const auto all = enumerate_all(alg);
  for (const auto& a : f) {
    for (const auto& b : all) {
      if (a.leq(b) && !f.contains(b)) return false;
    }
    for (const auto& b : f) {
      if (!f.contains(alg.odot(a, b))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("chain operations") {
  const Chain c(4);
  CHECK(c.oplus(3, 2) == 4);
  CHECK(c.odot(3, 2) == 1);
  CHECK(c.neg(1) == 3);
  for (int a = 0; a <= 4; ++a) CHECK(c.neg(c.neg(static_cast<Value>(a))) == a);
  CHECK(c.meet(1, 3) == 1);
  CHECK(c.join(1, 3) == 3);
  CHECK(c.scale(0, 3) == 0);
  CHECK(c.scale(7, 1) == 4);
  CHECK_THROWS_AS(c.oplus(5, 0), InputError);
  CHECK_THROWS_AS(c.element(-1), InputError);
  CHECK_THROWS_AS(Chain(0), InputError);
  CHECK_THROWS_AS(Chain(256), InputError);
  CHECK_THROWS_AS(c.scale(-1, 2), InputError);
}

TEST_CASE("chain axioms hold exhaustively") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(verify::algebra_violations(n) == 0);
  }
}

TEST_CASE("pointwise operations") {
  const MvAlgebra two(Chain(2), 2);
  CHECK(two.scale(2, fs({1, 1})) == two.one());
  CHECK(two.odot(fs({1, 0}), fs({2, 1})) == fs({1, 0}));
  CHECK(two.scale(0, fs({1, 2})) == two.zero());
  const MvAlgebra four(Chain(4), 3);
  const FuzzySet a = four.make({1, 4, 2});
  CHECK(four.oplus(a, four.zero()) == a);
  CHECK(four.neg(a) == fs({3, 0, 2}));
  CHECK_THROWS_AS(four.oplus(a, fs({1, 1})), InputError);
  CHECK_THROWS_AS(four.make({1, 5, 0}), InputError);
  CHECK_THROWS_AS(four.make({1, 2}), InputError);
}

TEST_CASE("joins and meets of families") {
  const MvAlgebra alg(Chain(2), 2);
  CHECK(alg.join_all({}) == alg.zero());
  CHECK(alg.meet_all({}) == alg.one());
  const std::vector<FuzzySet> f{fs({1, 2}), fs({2, 0})};
  CHECK(alg.join_all(f) == fs({2, 2}));
  CHECK(alg.meet_all(f) == fs({1, 0}));
}

TEST_CASE("families are canonical") {
  const Family f{fs({2, 0}), fs({0, 1}), fs({2, 0}), fs({0, 0})};
  REQUIRE(f.size() == 3);
  CHECK(f[0] == fs({0, 0}));
  CHECK(f[1] == fs({0, 1}));
  CHECK(f[2] == fs({2, 0}));
  CHECK(f.contains(fs({0, 1})));
  CHECK_FALSE(f.contains(fs({1, 1})));
  CHECK(f.index_of(fs({2, 0})) == 2);
  CHECK(f.index_of(fs({1, 1})) == 3);
  CHECK(Family{fs({0, 1})}.is_subset_of(f));
  CHECK(to_string(fs({1, 2})) == "[1,2]");
}

TEST_CASE("carriers") {
  CHECK_THROWS_AS(Carrier(std::vector<std::string>{}), InputError);
  CHECK_THROWS_AS(Carrier({"a", "a"}), InputError);
  CHECK(Carrier::indexed(2).label(1) == "1");
}

TEST_CASE("preimage") {
  const FuzzySet a = fs({2, 4});
  CHECK(mv_preimage(PointMap::identity(2), a) == a);
  CHECK(mv_preimage(PointMap(3, 2, {0, 0, 1}), a) == fs({2, 2, 4}));
  CHECK_THROWS_AS(mv_preimage(PointMap(3, 3, {0, 0, 1}), a), InputError);
  CHECK_THROWS_AS(PointMap(2, 2, {0, 2}), InputError);
}

TEST_CASE("preimage is a homomorphism on random instances") {
  verify::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 6)));
    const auto nx = static_cast<std::size_t>(rng.between(1, 5));
    const auto ny = static_cast<std::size_t>(rng.between(1, 5));
    const MvAlgebra ax(chain, nx), ay(chain, ny);
    const PointMap f = verify::random_map(rng, nx, ny);
    const FuzzySet a = verify::random_set(rng, ay);
    const FuzzySet b = verify::random_set(rng, ay);
    // componentwise evaluation as the reference
    std::vector<Value> want(nx);
    for (std::size_t x = 0; x < nx; ++x) want[x] = chain.oplus(a[f(x)], b[f(x)]);
    REQUIRE(mv_preimage(f, ay.oplus(a, b)) == FuzzySet(want));
    REQUIRE(mv_preimage(f, ay.odot(a, b)) == ax.odot(mv_preimage(f, a), mv_preimage(f, b)));
    REQUIRE(mv_preimage(f, ay.neg(a)) == ax.neg(mv_preimage(f, a)));
  }
}

TEST_CASE("forward image") {
  const FuzzySet a = fs({1, 2});
  CHECK(forward_image(PointMap::identity(2), a) == a);
  CHECK(forward_image(PointMap(2, 2, {0, 0}), a) == fs({2, 0}));
  CHECK(forward_image(PointMap(2, 3, {2, 2}), a) == fs({0, 0, 2}));
}

TEST_CASE("point maps") {
  const PointMap f(3, 3, {2, 0, 1});
  CHECK(f.is_bijective());
  CHECK(f.then(f.inverse()) == PointMap::identity(3));
  CHECK_FALSE(PointMap(2, 2, {0, 0}).is_bijective());
  CHECK_THROWS_AS(PointMap(2, 2, {0, 0}).inverse(), InputError);
  CHECK_THROWS_AS(f.then(PointMap::identity(2)), InputError);
}

TEST_CASE("ideals and filters") {
  const MvAlgebra one_point(Chain(2), 1);
  CHECK(is_ideal(one_point, Family{fs({0})}));
  CHECK_FALSE(is_ideal(one_point, Family{fs({0}), fs({1})}));
  CHECK_FALSE(is_ideal(one_point, Family{}));
  const MvAlgebra two(Chain(2), 2);
  const Family m{fs({0, 0}), fs({1, 0}), fs({2, 0})};
  CHECK(is_ideal(two, m));
  CHECK(verify::support_ideal(two, {true, false}) == m);
  CHECK(is_filter(two, Family{two.one()}));
  CHECK_FALSE(is_filter(two, Family{fs({1, 2}), two.one()}));
}

TEST_CASE("ideal and filter predicates agree with their definitions") {
  verify::Rng rng(5);
  int ideals = 0;
  for (int i = 0; i < 400; ++i) {
    const MvAlgebra alg(Chain(static_cast<int>(rng.between(1, 2))),
                        static_cast<std::size_t>(rng.between(1, 2)));
    Family f = verify::random_family(rng, alg, 5);
    if (rng.chance(1, 3)) {
      std::vector<bool> zone(alg.points());
      for (std::size_t x = 0; x < zone.size(); ++x) zone[x] = rng.chance(1, 2);
      f = verify::support_ideal(alg, zone);
    }
    const bool ideal = is_ideal(alg, f);
    ideals += ideal ? 1 : 0;
    REQUIRE(ideal == ideal_by_definition(alg, f));
    REQUIRE(is_filter(alg, f) == filter_by_definition(alg, f));
    if (ideal) {
      for (const auto& a : f) {
        for (const auto& b : enumerate_all(alg)) {
          if (b.leq(a)) REQUIRE(f.contains(b));
        }
      }
    }
  }
  CHECK(ideals > 50);
}

TEST_CASE("enumerate all sets") {
  const MvAlgebra alg(Chain(2), 2);
  const auto all = enumerate_all(alg);
  REQUIRE(all.size() == 9);
  CHECK(all.front() == alg.zero());
  CHECK(all.back() == alg.one());
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(enumerate_all(MvAlgebra(Chain(9), 8), 1000), ResourceError);
}
