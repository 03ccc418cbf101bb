#include <doctest.h>

#include <random>

#include "jetexc/rational_function.hpp"
#include "jetexc/poly.hpp"

using namespace jetexc;

namespace {

UPoly random_upoly(std::mt19937& rng, std::uint32_t p, int maxdeg) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<std::uint32_t> dc(0, p - 1);
  std::vector<std::uint32_t> c(dd(rng) + 1);
  for (auto& x : c) x = dc(rng);
  return UPoly(p, c);
}

}  // namespace

TEST_CASE("univariate division identity") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int i = 0; i < 200; ++i) {
      UPoly a = random_upoly(rng, p, 12), b = random_upoly(rng, p, 6);
      if (b.is_zero()) continue;
      auto [q, r] = a.divmod(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      UPoly g = gcd(a, b);
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      auto e = ext_gcd(a, b);
      CHECK(e.s * a + e.u * b == e.g);
    }
  }
}

TEST_CASE("rational functions are kept reduced with monic denominators") {
  const std::uint32_t p = 5;
  RationalFunction t = RationalFunction::t(p);
  RationalFunction one(p, 1);
  RationalFunction f = (t * t - one) / (t - one);
  CHECK(f == t + one);
  CHECK(f.denominator().is_one());
  RationalFunction g = one / (t.pow(2) * RationalFunction(p, 2));
  CHECK(g.denominator().is_monic());
  CHECK(g.str() == "3/t^2");
  CHECK(RationalFunction(p).str() == "0");
  CHECK(((t + one) / (t + RationalFunction(p, 2))).str() == "(t+1)/(t+2)");
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int i = 0; i < 100; ++i) {
      UPoly d1 = random_upoly(rng, p, 3), d2 = random_upoly(rng, p, 3), d3 = random_upoly(rng, p, 3);
      if (d1.is_zero() || d2.is_zero() || d3.is_zero()) continue;
      RationalFunction a(random_upoly(rng, p, 4), d1), b(random_upoly(rng, p, 4), d2),
          c(random_upoly(rng, p, 4), d3);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == RationalFunction(p));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("taylor expansion is the Hasse expansion") {
  // (t + eps)^3 over F_5: t^3 + 3t^2 eps + 3t eps^2 + eps^3
  const std::uint32_t p = 5;
  RationalFunction t3 = RationalFunction::t(p).pow(3);
  auto s = t3.taylor(3);
  CHECK(s[0] == t3);
  CHECK(s[1] == RationalFunction(p, 3) * RationalFunction::t(p).pow(2));
  CHECK(s[2] == RationalFunction(p, 3) * RationalFunction::t(p));
  CHECK(s[3] == RationalFunction(p, 1));
  // over F_3 the middle coefficients vanish
  auto s3 = RationalFunction::t(3).pow(3).taylor(2);
  CHECK(s3[1].is_zero());
  CHECK(s3[2].is_zero());
  // 1/t: 1/t - eps/t^2 + eps^2/t^3
  auto inv = RationalFunction::t(p).inverse().taylor(2);
  CHECK(inv[1] == -RationalFunction::t(p).pow(-2));
  CHECK(inv[2] == RationalFunction::t(p).pow(-3));
}

TEST_CASE("irreducibility test") {
  CHECK(UPoly(2, {1, 1, 1}).is_irreducible());      // t^2+t+1
  CHECK_FALSE(UPoly(2, {1, 0, 1}).is_irreducible());  // (t+1)^2
  CHECK(UPoly(3, {1, 0, 1}).is_irreducible());      // t^2+1 over F_3
  CHECK_FALSE(UPoly(5, {1, 0, 1}).is_irreducible());  // t^2+1 = (t+2)(t+3) over F_5
}

TEST_CASE("rational function text round-trips") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RationalFunction t = RationalFunction::t(p);
    RationalFunction f = (t.pow(2) + RationalFunction(p, 1)) / (t.pow(3) + t + RationalFunction(p, 1));
    CHECK(parse_rational_function(f.str(), p) == f);
  }
  CHECK(parse_rational_function("t^2/(t+1)", 3).str() == "t^2/(t+1)");
}
