#include <doctest.h>

#include "jetexc/exceptional.hpp"
#include "jetexc/jets.hpp"

using namespace jetexc;

namespace {

RationalFunction rf(const std::string& s, std::uint32_t p) { return parse_rational_function(s, p); }

EllipticCurve curve2() { return EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2); }
EllipticCurve curve3() { return EllipticCurve::parse({"0", "1", "0", "0", "t^2"}, 3); }

KPoint g2() { return KPoint::at(rf("t", 2), rf("t", 2)); }

GroupVariety e2xe2() { return GroupVariety({curve2(), curve2()}); }

GroupPoint fixture_g() { return {{g2(), g2()}}; }

Subvariety nonlinear(const GroupVariety& a) {
  return subvariety(a, std::vector<std::string>{"x2 + x1 + (x1 + t^2 + t)^2"});
}

Subvariety diagonal(const GroupVariety& a) { return subvariety(a, std::vector<std::string>{"x1 - x2", "y1 - y2"}); }

Ideal on_patch(const GroupVariety& a, const Ideal& low) {
  std::vector<int> map(low.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::string& n = low.ring()->names()[i];
    map[i] = a.ring()->index_of(n.substr(0, n.find('@')));
  }
  std::vector<Poly> gens;
  for (const auto& g : low.generators()) gens.push_back(g.rename(a.ring(), map));
  return Ideal(a.ring(), std::move(gens));
}

// Exc^k by eliminating the higher jets from the critical scheme in one go.
Ideal direct_exc(const GroupVariety& a, const Subvariety& x, std::size_t k) {
  const auto crit = critical_scheme(a, x, k);
  return on_patch(a, eliminate(crit.ideal, jet_names(a.ring(), 1, k)));
}

bool same_zero_set(const Ideal& i, const Ideal& j) { return subscheme_relation(i, j) == SubschemeRelation::Equal; }

}  // namespace

TEST_CASE("image of J^0 is E") {
  const auto a = e2xe2();
  const auto img = factor_multiplication_image(a, 0, 0);
  const auto fp = a.factor_presentation(0);
  CHECK(same_zero_set(on_patch(GroupVariety({curve2()}), img.ideal),
                      Ideal(GroupVariety({curve2()}).ring(), fp.ideal.generators())));
}

TEST_CASE("lifted multiples of p^k lie in the image") {
  const auto e = curve2();
  const GroupVariety a({e});
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto img = factor_multiplication_image(a, 0, k);
    for (long long n : {1, 3, -1}) {
      const KPoint q = scalar_mul(e, n * (1LL << k), g2());
      const auto jet = lift_point(a.factor_presentation(0), {q.x, q.y}, k);
      CHECK(vanishes_at(img.ideal, jet.coords));
    }
  }
  const auto e3 = curve3();
  const GroupVariety b({e3});
  const auto img3 = factor_multiplication_image(b, 0, 1);
  const KPoint q3 = scalar_mul(e3, 3, KPoint::at(rf("0", 3), rf("t", 3)));
  CHECK(vanishes_at(img3.ideal, lift_point(b.factor_presentation(0), {q3.x, q3.y}, 1).coords));
}

TEST_CASE("order-0 slice of the image is E") {
  const GroupVariety a({curve2()});
  const auto img = factor_multiplication_image(a, 0, 1);
  const auto low = on_patch(a, eliminate(img.ideal, jet_names(a.factor_presentation(0).ring, 1, 1)));
  CHECK(same_zero_set(low, a.ideal()));
}

TEST_CASE("order zero schemes are X") {
  const auto a = e2xe2();
  const auto x = nonlinear(a);
  const auto crit = critical_scheme(a, x, 0);
  CHECK(same_zero_set(on_patch(a, crit.ideal), x.patch.ideal));
  CHECK(same_zero_set(exceptional_scheme(a, x, 0).ideal, x.patch.ideal));
}

TEST_CASE("lift of a double lies in Crit^1 of the point") {
  const auto a = e2xe2();
  const GroupPoint q = scalar_mul(a, 2, fixture_g());
  const Subvariety x{{a.ring(), point_ideal(a, q)}, true};
  const auto crit = critical_scheme(a, x, 1);
  const auto jet = lift_point(a.presentation(), q.coordinates(), 1);
  CHECK(vanishes_at(crit.ideal, jet.coords));
}

TEST_CASE("abelian subvarieties are their own exceptional schemes") {
  const auto a = e2xe2();
  const KPoint g4 = scalar_mul(curve2(), 4, g2());
  const auto fibre = subvariety(a, std::vector<Poly>{Poly::variable(a.ring(), a.x_index(1)) - Poly::constant(a.ring(), g4.x),
                                                     Poly::variable(a.ring(), a.y_index(1)) - Poly::constant(a.ring(), g4.y)});
  for (const auto& x : {diagonal(a), fibre})
    for (std::size_t m = 1; m <= 2; ++m) CHECK(same_zero_set(exceptional_scheme(a, x, m).ideal, x.patch.ideal));
}

TEST_CASE("exceptional chain descends and stabilizes at 1") {
  const auto a = e2xe2();
  const auto x = nonlinear(a);
  const auto chain = stable_exceptional(a, x, 3);
  CHECK(chain.descending);
  REQUIRE(chain.stabilized_at.has_value());
  CHECK(*chain.stabilized_at == 1);
  const auto exc1 = chain.chain.at(1).ideal;
  CHECK(radical_contains(exc1, x.patch.ideal));
  CHECK_FALSE(radical_contains(x.patch.ideal, exc1));
  CHECK(is_zero_dimensional(exc1));
  CHECK(vanishes_at(exc1, scalar_mul(a, 2, fixture_g()).coordinates()));
}

TEST_CASE("a point outside 2A(K) has empty Exc^1") {
  const auto a = e2xe2();
  const Subvariety x{{a.ring(), point_ideal(a, fixture_g())}, true};
  CHECK(exceptional_scheme(a, x, 1).ideal.is_unit());
  CHECK_FALSE(exceptional_scheme(a, x, 0).ideal.is_unit());
}

TEST_CASE("split computation agrees with direct elimination") {
  const auto a = e2xe2();
  const auto x = nonlinear(a);
  CHECK(same_zero_set(exceptional_scheme(a, x, 1).ideal, direct_exc(a, x, 1)));
  const GroupVariety b({curve3(), curve3()});
  const auto d = diagonal(b);
  CHECK(same_zero_set(exceptional_scheme(b, d, 1).ideal, direct_exc(b, d, 1)));
}

TEST_CASE("shifted exceptional scheme matches translation") {
  const auto a = e2xe2();
  const auto x = diagonal(a);
  const GroupPoint q = fixture_g();
  const auto pulled = shifted_exceptional(a, x, q, 1);
  const auto moved = translate(a, x, q).translate;
  const auto exc = exceptional_scheme(a, moved, 1);
  const auto back = translate(a, {{a.ring(), exc.ideal}, true}, negate(a, q)).translate;
  CHECK(same_zero_set(pulled.ideal, back.patch.ideal));
  CHECK(same_zero_set(pulled.ideal, x.patch.ideal));
}

TEST_CASE("linear locus on the three fixtures") {
  const auto a = e2xe2();
  const Subgroup gamma{{fixture_g()}};
  SUBCASE("nonlinear curve shrinks") {
    const auto x = nonlinear(a);
    const auto r = build_linear_locus(a, x, gamma, LocusOptions{});
    CHECK(r.stabilized);
    CHECK(r.linearity_certified);
    CHECK(radical_contains(r.y.patch.ideal, x.patch.ideal));
    CHECK_FALSE(radical_contains(x.patch.ideal, r.y.patch.ideal));
  }
  SUBCASE("diagonal is kept after one step") {
    const auto x = diagonal(a);
    const auto r = build_linear_locus(a, x, gamma, LocusOptions{});
    CHECK(r.stabilized);
    CHECK(r.certificate.size() == 1);
    CHECK(same_zero_set(r.y.patch.ideal, x.patch.ideal));
  }
  SUBCASE("single point is kept") {
    const Subvariety x{{a.ring(), point_ideal(a, fixture_g())}, true};
    const auto r = build_linear_locus(a, x, gamma, LocusOptions{});
    CHECK(r.stabilized);
    CHECK(same_zero_set(r.y.patch.ideal, x.patch.ideal));
  }
}
