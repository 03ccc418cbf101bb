#include <doctest.h>

#include <random>

#include "jetexc/group_variety.hpp"

using namespace jetexc;

namespace {

RationalFunction rf(const std::string& s, std::uint32_t p) { return parse_rational_function(s, p); }

struct CurveFixture {
  EllipticCurve curve;
  std::vector<KPoint> points;
};

std::vector<CurveFixture> fixtures() {
  auto pt = [](const std::string& x, const std::string& y, std::uint32_t p) { return KPoint::at(rf(x, p), rf(y, p)); };
  return {
      {EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2), {pt("t", "t", 2)}},
      {EllipticCurve::parse({"0", "1", "0", "0", "t^2"}, 3), {pt("0", "t", 3), pt("2", "t", 3)}},
      {EllipticCurve::parse({"0", "0", "0", "1", "t^2"}, 5), {pt("0", "t", 5), pt("2", "t", 5), pt("3", "t", 5)}},
  };
}

KPoint random_point(std::mt19937_64& rng, const CurveFixture& f) {
  KPoint acc;
  for (const auto& g : f.points) {
    const long long c = static_cast<long long>(rng() % 7) - 3;
    acc = add(f.curve, acc, scalar_mul(f.curve, c, g));
  }
  return acc;
}

bool same(const KPoint& a, const KPoint& b) {
  return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
}

GroupVariety e2xe2() {
  auto e = EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2);
  return GroupVariety({e, e});
}

GroupPoint fixture_g() {
  const auto g = KPoint::at(rf("t", 2), rf("t", 2));
  return {{g, g}};
}

}  // namespace

TEST_CASE("j-invariant and isotriviality") {
  auto e = EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2);
  CHECK(e.j_invariant() == rf("1/t^3", 2));
  CHECK(is_nonisotrivial(e));
  CHECK_FALSE(is_nonisotrivial(EllipticCurve::parse({"0", "0", "0", "0", "1"}, 5)));
  CHECK_FALSE(is_nonisotrivial(EllipticCurve::parse({"1", "0", "0", "0", "1"}, 2)));
  CHECK_THROWS_AS(EllipticCurve::parse({"0", "0", "0", "0", "0"}, 5), DomainError);
}

TEST_CASE("fixture point lies on the curve and has no small torsion") {
  auto e = EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2);
  const auto g = KPoint::at(rf("t", 2), rf("t", 2));
  CHECK(e.contains(g.x, g.y));
  for (int m = 1; m <= 16; ++m) CHECK_FALSE(scalar_mul(e, m, g).infinity);
  CHECK(scalar_mul(e, 2, g).x == rf("t^2+t", 2));
}

TEST_CASE("add and scalar_mul examples") {
  for (const auto& f : fixtures()) {
    const auto& e = f.curve;
    const auto P = f.points.front();
    CHECK(same(add(e, P, KPoint::identity()), P));
    CHECK(add(e, P, negate(e, P)).infinity);
    CHECK(scalar_mul(e, 0, P).infinity);
    CHECK(same(scalar_mul(e, 3, P), add(e, add(e, P, P), P)));
    CHECK(same(scalar_mul(e, -1, P), negate(e, P)));

    // Duplication via the b-invariant formula for x(2P).
    const std::uint32_t p = e.prime();
    auto k = [p](long long c) { return RationalFunction(p, c); };
    const auto b2 = e.a1() * e.a1() + k(4) * e.a2();
    const auto b4 = k(2) * e.a4() + e.a1() * e.a3();
    const auto b6 = e.a3() * e.a3() + k(4) * e.a6();
    const auto b8 = e.a1() * e.a1() * e.a6() + k(4) * e.a2() * e.a6() - e.a1() * e.a3() * e.a4() +
                    e.a2() * e.a3() * e.a3() - e.a4() * e.a4();
    for (int m = 1; m <= 4; ++m) {
      const auto Q = scalar_mul(e, m, P);
      const auto x = Q.x;
      const auto x2 = (x.pow(4) - b4 * x * x - k(2) * b6 * x - b8) / (k(4) * x.pow(3) + b2 * x * x + k(2) * b4 * x + b6);
      const auto D = add(e, Q, Q);
      CHECK(D.x == x2);
      CHECK(e.contains(D.x, D.y));
    }
  }
}

TEST_CASE("scalar_mul is additive") {
  for (const auto& f : fixtures()) {
    const auto P = f.points.back();
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        CHECK(same(scalar_mul(f.curve, m + n, P), add(f.curve, scalar_mul(f.curve, m, P), scalar_mul(f.curve, n, P))));
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(2024);
  for (const auto& f : fixtures()) {
    const auto& e = f.curve;
    for (int i = 0; i < 100; ++i) {
      const auto P = random_point(rng, f), Q = random_point(rng, f), R = random_point(rng, f);
      CHECK(same(add(e, add(e, P, Q), R), add(e, P, add(e, Q, R))));
      CHECK(same(add(e, P, Q), add(e, Q, P)));
      CHECK(add(e, P, negate(e, P)).infinity);
    }
  }
}

TEST_CASE("jets of the group law commute with lifts") {
  std::mt19937_64 rng(77);
  for (const auto& f : fixtures()) {
    for (int i = 0; i < 20; ++i) {
      const auto P = random_point(rng, f), Q = random_point(rng, f);
      if (P.infinity || Q.infinity) continue;
      const auto S = add(f.curve, P, Q);
      if (S.infinity) continue;
      for (std::size_t n = 1; n <= 2; ++n) {
        const auto J = jet_add(f.curve, lift(P, n), lift(Q, n), n);
        const auto L = lift(S, n);
        CHECK(J.x == L.x);
        CHECK(J.y == L.y);
      }
    }
  }
}

TEST_CASE("fault injection breaks associativity") {
  const auto f = fixtures()[1];
  const auto P = f.points[0], Q = f.points[1], R = scalar_mul(f.curve, 2, f.points[0]);
  FaultInjectionScope scope(true);
  CHECK_FALSE(same(add(f.curve, add(f.curve, P, Q), R), add(f.curve, P, add(f.curve, Q, R))));
}

TEST_CASE("symbolic multiplication maps") {
  for (const auto& f : fixtures()) {
    auto ring = PolyRing::make(f.curve.prime(), {"x", "y"});
    for (long long m : {2LL, 3LL, static_cast<long long>(f.curve.prime())}) {
      const auto map = multiplication_map(f.curve, ring, 0, 1, m);
      const auto P = f.points.front();
      const auto Q = scalar_mul(f.curve, m, P);
      CHECK(map.x.evaluate({P.x, P.y}) == Q.x);
      CHECK(map.y.evaluate({P.x, P.y}) == Q.y);
    }
  }
}

TEST_CASE("product group points") {
  const auto A = e2xe2();
  const auto G = fixture_g();
  CHECK(contains(A, G));
  CHECK(add(A, G, negate(A, G)).is_identity());
  CHECK(G.str() == "[(t,t),(t,t)]");
  GroupPoint off{{KPoint::at(rf("t", 2), rf("1", 2)), KPoint::identity()}};
  CHECK_THROWS_WITH_AS(require_on(A, off, "generator"), doctest::Contains("(t,1)"), DomainError);
}

TEST_CASE("coset_reps and gamma_ball") {
  const auto A = e2xe2();
  const auto G = fixture_g();
  auto reps = coset_reps(A, {{G}}, 2);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].point.is_identity());
  CHECK(reps[1].point == G);
  CHECK(coset_reps(A, {{G, scalar_mul(A, 3, G)}}, 2).size() == 4);
  auto reps4 = coset_reps(A, {{G}}, 4);
  REQUIRE(reps4.size() == 4);
  CHECK(reps4[3].point == scalar_mul(A, 3, G));
  auto ball = gamma_ball(A, {{G}}, 2);
  REQUIRE(ball.size() == 5);
  CHECK(ball[0].point == scalar_mul(A, -2, G));
  CHECK(ball[2].point.is_identity());
  Budget small;
  small.max_cosets = 3;
  CHECK_THROWS_AS(gamma_ball(A, {{G}}, 2, small), ResourceLimitError);
}

TEST_CASE("translation of subvarieties") {
  const auto A = e2xe2();
  const auto G = fixture_g();
  const auto X = subvariety(A, std::vector<std::string>{"x2 + x1", "y2 + y1"});
  CHECK(translate(A, X, identity(A)).translate.patch.ideal.canonical() == X.patch.ideal.canonical());

  const Subvariety point{{A.ring(), point_ideal(A, G)}, true};
  const auto moved = translate(A, point, G);
  CHECK(moved.translate.patch.ideal.canonical() == point_ideal(A, scalar_mul(A, 2, G)).canonical());

  const auto there = translate(A, X, G).translate;
  const auto back = translate(A, there, negate(A, G)).translate;
  CHECK(subscheme_relation(back.patch.ideal, X.patch.ideal) == SubschemeRelation::Equal);
  // The diagonal is a subgroup, so translating by a diagonal point preserves it.
  CHECK(subscheme_relation(there.patch.ideal, X.patch.ideal) == SubschemeRelation::Equal);

  const GroupPoint first{{G.parts[0], KPoint::identity()}};
  const auto shifted = translate(A, X, first).translate;
  CHECK(contains(shifted, add(A, scalar_mul(A, 2, G), first)));
  CHECK_FALSE(contains(shifted, scalar_mul(A, 2, G)));
}
