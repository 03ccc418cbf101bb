#include <doctest.h>

#include "jetexc/poly.hpp"

using namespace jetexc;

TEST_CASE("canonical text format") {
  auto ring = PolyRing::make(3, {"x1", "y1"});
  Poly f = parse_poly("x1^2*y1 - t*x1 + (t+1)/(t^2+1)", ring);
  CHECK(f.str() == "x1^2*y1 + 2*t*x1 + (t+1)/(t^2+1)");
  CHECK(parse_poly(f.str(), ring) == f);
  CHECK(parse_poly("0", ring).str() == "0");
  CHECK(parse_poly("2*(x1+1)^2", ring).str() == "2*x1^2 + x1 + 2");
}

TEST_CASE("parse errors name the offending position") {
  auto ring = PolyRing::make(5, {"x"});
  CHECK_THROWS_AS(parse_poly("x + z", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("x / x", ring), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + 1", ring), ParseError);
}

TEST_CASE("term orders") {
  auto ring = PolyRing::make(5, {"x", "y", "z"});
  Poly f = parse_poly("x*z + y^2 + x^2", ring);
  CHECK(f.str() == "x^2 + y^2 + x*z");
  Poly g = f.in_ring(ring->with_order(TermOrder::lex()));
  CHECK(g.str() == "x^2 + x*z + y^2");
  Poly h = f.in_ring(ring->with_order(TermOrder::block(0b100)));
  CHECK(h.lead_monomial().e[2] == 1);
}

TEST_CASE("substitution and evaluation agree") {
  auto ring = PolyRing::make(5, {"x", "y"});
  Poly f = parse_poly("x^2*y + t*x + 1", ring);
  std::vector<RationalFunction> pt{parse_rational_function("t+1", 5), parse_rational_function("1/t", 5)};
  auto r1 = PolyRing::make(5, {});
  Poly sub = f.substitute(r1, {Poly::constant(r1, pt[0]), Poly::constant(r1, pt[1])});
  CHECK(sub.constant_term() == f.evaluate(pt));
}
