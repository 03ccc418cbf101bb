#include <doctest.h>

#include <random>

#include "jetexc/function_field.hpp"

using namespace jetexc;

namespace {

RationalFunction rf(const std::string& s, std::uint32_t p) { return parse_rational_function(s, p); }

RationalFunction random_rf(std::mt19937_64& rng, std::uint32_t p) {
  auto poly = [&](int maxdeg) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
    return UPoly(p, c);
  };
  UPoly den = poly(3);
  while (den.is_zero()) den = poly(3);
  return RationalFunction(poly(4), den);
}

}  // namespace

TEST_CASE("valuation examples") {
  const auto v0 = Place::parse("t", 5);
  CHECK(valuation(v0, rf("t^2/(t+1)", 5)) == Valuation::of(2));
  CHECK(valuation(Place::infinite(5), rf("(t^2+1)/t^5", 5)) == Valuation::of(3));
  CHECK(valuation(v0, RationalFunction(5)).infinite);
  CHECK(valuation(Place::parse("t+1", 2), rf("(t+1)^3/t", 2)) == Valuation::of(3));
}

TEST_CASE("valuation is multiplicative") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Place places[] = {Place::parse("t", p), Place::parse("t+1", p), Place::infinite(p)};
    for (int i = 0; i < 80; ++i) {
      const auto f = random_rf(rng, p), g = random_rf(rng, p);
      for (const auto& v : places) CHECK(valuation(v, f * g) == valuation(v, f) + valuation(v, g));
    }
  }
}

TEST_CASE("place parsing and serialization") {
  CHECK(Place::parse("inf", 3).is_infinite());
  CHECK(Place::parse("t^2+t+1", 2).residue_degree() == 2);
  CHECK(Place::parse("t+1", 2).str() == "t+1");
  CHECK(Place::parse("inf", 2).str() == "inf");
  CHECK_THROWS_AS(Place::parse("t^2+1", 2), DomainError);
}

TEST_CASE("normalize_primitive examples") {
  auto r = PolyRing::make(5, {"x"});
  auto n1 = normalize_primitive(Place::parse("t", 5), {parse_poly("t*x - t^3", r)});
  CHECK(n1[0].poly.str() == "x + 4*t^2");
  CHECK(n1[0].shift == -1);
  auto n2 = normalize_primitive(Place::parse("t", 5), {parse_poly("x - t", r)});
  CHECK(n2[0].poly == parse_poly("x - t", r));
  CHECK(n2[0].shift == 0);
  auto n3 = normalize_primitive(Place::infinite(5), {parse_poly("x - t", r)});
  CHECK(n3[0].shift == 1);
  CHECK(valuation(Place::infinite(5), n3[0].poly) == Valuation::of(0));
  CHECK_THROWS_AS(normalize_primitive(Place::parse("t", 5), {Poly(r)}), DomainError);
}

TEST_CASE("contact_order examples") {
  auto r = PolyRing::make(5, {"x"});
  const auto v = Place::parse("t", 5);
  auto c = contact_order(v, Ideal::parse(r, {"x - t^2"}), {rf("t^2 + t^5", 5)});
  CHECK(c.order == Valuation::of(5));
  CHECK(c.distance_exponent == Valuation::of(5));
  auto on = contact_order(v, Ideal::parse(r, {"x - t^2"}), {rf("t^2", 5)});
  CHECK(on.order.infinite);
  auto none = contact_order(v, Ideal::parse(r, {"x"}), {rf("1", 5)});
  CHECK(none.order == Valuation::of(0));
  CHECK(none.local_height() == 0.0);
  CHECK_THROWS_AS(contact_order(v, Ideal::parse(r, {"x"}), {rf("1/t", 5)}), DomainError);
}

TEST_CASE("contact order monotone and bounded by generator orders") {
  auto r = PolyRing::make(3, {"x", "y"});
  const auto v = Place::parse("t", 3);
  auto c = contact_order(v, Ideal::parse(r, {"x - t^2", "y"}), {rf("t^2 + t^4", 3), rf("t^2", 3)});
  CHECK(c.order == Valuation::of(2));
  for (const auto& g : c.generator_orders) CHECK(c.order <= g);
}

TEST_CASE("distance_compare examples") {
  auto r = PolyRing::make(5, {"x", "y"});
  const auto v = Place::parse("t", 5);
  auto d = distance_compare(v, Ideal::parse(r, {"x - t^2"}), Ideal::parse(r, {"x - t^2", "y"}),
                            {rf("t^2+t^3", 5), rf("t", 5)});
  CHECK(d.x.order == Valuation::of(3));
  CHECK(d.y.order == Valuation::of(1));
  CHECK(d.gap.kind == HeightGap::Kind::Finite);
  CHECK(d.gap.exponent == 2);
  CHECK(std::abs(d.x.local_height() - 3 * std::log(5.0)) < 1e-12);

  auto same = distance_compare(v, Ideal::parse(r, {"x"}), Ideal::parse(r, {"x", "y"}), {rf("0", 5), rf("0", 5)});
  CHECK(same.gap.kind == HeightGap::Kind::Finite);
  CHECK(same.gap.exponent == 0);

  auto unit = distance_compare(v, Ideal::parse(r, {"x"}), Ideal::parse(r, {"x", "1"}), {rf("t", 5), rf("0", 5)});
  CHECK(unit.y.order == Valuation::of(0));
}

TEST_CASE("containment constant bounds contact orders") {
  auto r = PolyRing::make(3, {"x", "y"});
  const auto v = Place::parse("t", 3);
  const auto i = Ideal::parse(r, {"x*y - t*y"});
  const auto j = Ideal::parse(r, {"x - t", "y^2"});
  const long long c = containment_constant(v, i, j);
  CHECK(c >= 0);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<RationalFunction> pt;
    for (int s = 0; s < 2; ++s) {
      std::vector<std::uint32_t> co(4);
      for (auto& x : co) x = static_cast<std::uint32_t>(rng() % 3);
      pt.push_back(RationalFunction(UPoly(3, co)));
    }
    const auto oi = contact_order(v, i, pt).order, oj = contact_order(v, j, pt).order;
    if (oi.infinite || oj.infinite) continue;
    CHECK(oi.value >= oj.value - c);
  }
  CHECK_THROWS_AS(containment_constant(v, j, i), DomainError);
}
