#include "doctest.h"

#include "mvtop/maps.hpp"
#include "mvtop/oracle.hpp"
#include "mvtop/verify.hpp"

using namespace mvtop;

namespace {

FuzzySet fs(std::initializer_list<int> v) {
  std::vector<Value> out;
  for (int x : v) out.push_back(static_cast<Value>(x));
  return FuzzySet(std::move(out));
}

Topology crisp2(int n) {
  return generate_from_subbase(Carrier({"a", "b"}), Chain(n),
                               Family{fs({n, 0}), fs({0, n})});
}

}  // namespace

TEST_CASE("continuity") {
  const Topology d = crisp2(1);
  const Topology ind = Topology::indiscrete(Carrier({"a", "b"}), Chain(1));
  const PointMap id = PointMap::identity(2);
  CHECK(is_continuous(id, d, d));
  CHECK(is_continuous(PointMap(2, 2, {1, 1}), d, ind));
  const MapCheck r = check_continuous(id, ind, d);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == fs({0, 1}));
  CHECK_THROWS_AS(check_continuous(id, d, crisp2(2)), InputError);
  CHECK_THROWS_AS(check_continuous(PointMap::identity(3), d, d), InputError);
}

TEST_CASE("continuity through a base") {
  const Topology d = crisp2(1);
  const Topology ind = Topology::indiscrete(Carrier({"a", "b"}), Chain(1));
  const PointMap id = PointMap::identity(2);
  CHECK(check_continuous_via_base(id, ind, Family{fs({1, 1})}).holds);
  CHECK_FALSE(check_continuous_via_base(id, ind, d.opens()).holds);
  CHECK(check_continuous_via_base(id, d, d.opens()).holds);
}

TEST_CASE("continuity criteria agree with the definition on random maps") {
  verify::Rng rng(21);
  int continuous = 0;
  for (int i = 0; i < 400; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 2)));
    verify::SpaceBounds b;
    const Topology tx =
        verify::random_topology(rng, Carrier::indexed(rng.between(1, 3)), chain, b);
    const auto ny = static_cast<std::size_t>(rng.between(1, 3));
    const MvAlgebra ay(chain, ny);
    const Family theta = verify::random_family(rng, ay, 3);
    const Topology ty = generate_from_subbase(Carrier::indexed(ny), chain, theta);
    const PointMap f = verify::random_map(rng, tx.points(), ny);
    const bool want = oracle::continuous_by_definition(f, tx.opens(), ty.opens());
    continuous += want ? 1 : 0;
    REQUIRE(is_continuous(f, tx, ty) == want);
    REQUIRE(check_continuous_via_base(f, tx, base_from_subbase(ay, theta)).holds == want);
  }
  CHECK(continuous > 40);
  CHECK(continuous < 360);
}

TEST_CASE("composition of continuous maps is continuous") {
  verify::Rng rng(4);
  int composed = 0;
  for (int i = 0; i < 300; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 2)));
    verify::SpaceBounds b;
    std::vector<Topology> t;
    for (int k = 0; k < 3; ++k) {
      t.push_back(verify::random_topology(rng, Carrier::indexed(rng.between(1, 3)), chain, b));
    }
    const PointMap f = verify::random_map(rng, t[0].points(), t[1].points());
    const PointMap g = verify::random_map(rng, t[1].points(), t[2].points());
    if (is_continuous(f, t[0], t[1]) && is_continuous(g, t[1], t[2])) {
      ++composed;
      REQUIRE(is_continuous(f.then(g), t[0], t[2]));
    }
  }
  CHECK(composed > 20);
}

TEST_CASE("open, closed and homeomorphic maps") {
  const Topology d = crisp2(1);
  const Topology ind = Topology::indiscrete(Carrier({"a", "b"}), Chain(1));
  const PointMap id = PointMap::identity(2);
  CHECK(is_open_map(id, d, d));
  CHECK(is_closed_map(id, d, d));
  CHECK(is_homeomorphism(id, d, d));
  const Topology point = Topology::indiscrete(Carrier({"p"}), Chain(1));
  CHECK(is_open_map(PointMap::constant(2, 1, 0), d, point));
  CHECK(is_continuous(id, d, ind));
  CHECK_FALSE(is_homeomorphism(id, d, ind));
  CHECK_FALSE(is_homeomorphism(PointMap(2, 2, {0, 0}), d, d));
  const MapCheck open = check_open_map(id, d, ind);
  CHECK_FALSE(open.holds);
  REQUIRE(open.counterexample);
  CHECK(*open.counterexample == fs({0, 1}));
}

TEST_CASE("a bijection is open exactly when its inverse is continuous") {
  verify::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const Chain chain(static_cast<int>(rng.between(1, 2)));
    const auto k = static_cast<std::size_t>(rng.between(1, 3));
    verify::SpaceBounds b;
    const Topology tx = verify::random_topology(rng, Carrier::indexed(k), chain, b);
    const Topology ty = verify::random_topology(rng, Carrier::indexed(k), chain, b);
    std::vector<std::size_t> perm(k);
    for (std::size_t x = 0; x < k; ++x) perm[x] = x;
    for (std::size_t x = k; x > 1; --x) std::swap(perm[x - 1], perm[rng.below(x)]);
    const PointMap f(k, k, perm);
    REQUIRE(is_open_map(f, tx, ty) == is_continuous(f.inverse(), ty, tx));
    REQUIRE(is_homeomorphism(f, tx, ty) ==
            (is_continuous(f, tx, ty) && is_continuous(f.inverse(), ty, tx)));
  }
}
