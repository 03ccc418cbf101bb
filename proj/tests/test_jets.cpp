#include <doctest.h>

#include <random>

#include "jetexc/jets.hpp"

using namespace jetexc;

namespace {

RationalFunction rf(const std::string& s, std::uint32_t p) { return parse_rational_function(s, p); }

RationalFunction random_poly_rf(std::mt19937_64& rng, std::uint32_t p, int maxdeg) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(maxdeg) + 1);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
  return RationalFunction(UPoly(p, c));
}

Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, int maxdeg) {
  const std::uint32_t p = ring->prime();
  std::vector<Term> terms;
  for (int k = 0; k < 4; ++k) {
    Monomial m{};
    int budget = static_cast<int>(rng() % (maxdeg + 1));
    for (std::size_t i = 0; i < ring->nvars() && budget > 0; ++i) {
      const int e = static_cast<int>(rng() % (budget + 1));
      m.e[i] = static_cast<std::uint8_t>(e);
      m.deg = static_cast<std::uint16_t>(m.deg + e);
      budget -= e;
    }
    terms.push_back({m, random_poly_rf(rng, p, 2)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

std::vector<std::string> strs(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.str());
  return out;
}

}  // namespace

TEST_CASE("prolong_ideal examples") {
  auto w = AffinePresentation::parse(5, {"x", "y"}, {"y - x^2"});
  auto j1 = prolong_ideal(w, 1);
  auto expected = Ideal::parse(j1.ring, {"y@0 - x@0^2", "y@1 - 2*x@0*x@1"});
  CHECK(j1.ideal.canonical() == expected.canonical());

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto frob = AffinePresentation::parse(p, {"x"}, {"x^" + std::to_string(p) + " - t"});
    CHECK(prolong_ideal(frob, 1).ideal.is_unit());
    CHECK_FALSE(prolong_ideal(frob, 0).ideal.is_unit());
  }
  auto j0 = prolong_ideal(w, 0);
  CHECK(j0.ideal.canonical() == Ideal::parse(j0.ring, {"y@0 - x@0^2"}).canonical());
}

TEST_CASE("truncate examples") {
  auto w = AffinePresentation::parse(5, {"x", "y"}, {"y - x^2"});
  auto j1 = prolong_ideal(w, 1);
  CHECK(truncate(j1, 1).ideal.canonical() == j1.ideal.canonical());
  auto t0 = truncate(j1, 0);
  CHECK(t0.ideal.canonical() == std::vector<std::string>{"x@0^2 + 4*y@0"});
  CHECK_THROWS(truncate(j1, 2));

  auto a1 = AffinePresentation::affine_space(7, {"x"});
  auto l2 = lift_point(a1, {rf("t^3", 7)}, 2);
  CHECK(truncate(l2, a1.ring, 1) == lift_point(a1, {rf("t^3", 7)}, 1));
}

TEST_CASE("lift_point examples") {
  auto a5 = AffinePresentation::affine_space(5, {"x"});
  auto l = lift_point(a5, {rf("t^3", 5)}, 2);
  CHECK(l.coords == std::vector<RationalFunction>{rf("t^3", 5), rf("3*t^2", 5), rf("3*t", 5)});
  auto a3 = AffinePresentation::affine_space(3, {"x"});
  auto l3 = lift_point(a3, {rf("t^3", 3)}, 2);
  CHECK(l3.coords == std::vector<RationalFunction>{rf("t^3", 3), rf("0", 3), rf("0", 3)});
  auto c = lift_point(a5, {rf("4", 5)}, 3);
  CHECK(c.coords == std::vector<RationalFunction>{rf("4", 5), rf("0", 5), rf("0", 5), rf("0", 5)});

  auto w = AffinePresentation::parse(5, {"x", "y"}, {"y - x^2"});
  CHECK_THROWS_WITH_AS(lift_point(w, {rf("t", 5), rf("t", 5)}, 1), doctest::Contains("y"), DomainError);
}

TEST_CASE("hasse property of t^p") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto a = AffinePresentation::affine_space(p, {"x"});
    auto l = lift_point(a, {RationalFunction::t(p).pow(p)}, p);
    for (std::uint32_t j = 1; j < p; ++j) CHECK(l.coords[j].is_zero());
    CHECK(l.coords[p].is_one());
  }
}

TEST_CASE("prolong_morphism examples") {
  auto r = PolyRing::make(3, {"x"});
  auto sq = PolyMap{r, r, {parse_poly("x^2", r)}};
  auto j = prolong_morphism(sq, 1);
  CHECK(strs(j.components) == std::vector<std::string>{"x@0^2", "2*x@0*x@1"});
  auto shift = PolyMap{r, r, {parse_poly("x + t", r)}};
  auto js = prolong_morphism(shift, 1);
  CHECK(strs(js.components) == std::vector<std::string>{"x@0 + t", "x@1 + 1"});
  auto id = prolong_morphism(PolyMap::identity(r), 2);
  CHECK(strs(id.components) == strs(PolyMap::identity(id.source).components));

  auto a = AffinePresentation::affine_space(3, {"x"});
  const auto P = rf("t", 3);
  CHECK(apply(prolong_morphism(sq, 2), lift_point(a, {P}, 2)) == lift_point(a, {P * P}, 2));
}

TEST_CASE("lambda-truncation identity on random points") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const std::uint32_t p = (k % 3 == 0) ? 2 : (k % 3 == 1 ? 3 : 5);
    auto a = AffinePresentation::affine_space(p, {"x", "y"});
    std::vector<RationalFunction> pt{random_poly_rf(rng, p, 5), random_poly_rf(rng, p, 4) / RationalFunction(UPoly(p, {1, 1}))};
    const std::size_t n = 1 + rng() % 3, m = rng() % (n + 1);
    CHECK(truncate(lift_point(a, pt, n), a.ring, m) == lift_point(a, pt, m));
  }
}

TEST_CASE("functoriality of jets of morphisms") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const std::uint32_t p = (k % 2) ? 3 : 5;
    auto r = PolyRing::make(p, {"x", "y"});
    PolyMap f{r, r, {random_poly(rng, r, 3), random_poly(rng, r, 3)}};
    PolyMap g{r, r, {random_poly(rng, r, 2), random_poly(rng, r, 2)}};
    const std::size_t n = 1 + k % 2;
    auto lhs = prolong_morphism(g.compose(f), n);
    auto rhs = prolong_morphism(g, n).compose(prolong_morphism(f, n));
    CHECK(strs(lhs.components) == strs(rhs.components));
  }
}

TEST_CASE("epsilon grading and lifts land in the jet scheme") {
  auto w = AffinePresentation::parse(3, {"x", "y"}, {"y^2 - x^3 - t*x"});
  auto j = prolong_ideal(w, 3);
  const auto names = j.ring->names();
  for (std::size_t e = 0; e < j.graded.size(); ++e)
    for (const auto& g : j.graded[e])
      for (std::size_t i = 0; i < names.size(); ++i)
        if ((g.support() >> i) & 1) CHECK(std::stoul(names[i].substr(names[i].find('@') + 1)) <= e);

  auto line = AffinePresentation::parse(3, {"x", "y"}, {"y - x^2 - t"});
  auto jl = prolong_ideal(line, 2);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_poly_rf(rng, 3, 4);
    auto l = lift_point(line, {x, x * x + RationalFunction::t(3)}, 2);
    for (const auto& g : jl.ideal.generators()) CHECK(g.evaluate(l.coords).is_zero());
  }
}

TEST_CASE("jet_product_split") {
  auto a = AffinePresentation::affine_space(5, {"u"});
  auto b = AffinePresentation::affine_space(5, {"v"});
  auto s = jet_product_split(a, b, 1);
  CHECK(s.product.ring->nvars() == 4);
  CHECK(s.product.ideal.is_zero_ideal());

  auto f = AffinePresentation::parse(5, {"x", "y"}, {"y - x^2"});
  auto g = AffinePresentation::parse(5, {"u", "v"}, {"v^2 - u^3 - t"});
  auto sp = jet_product_split(f, g, 2);
  auto direct = prolong_ideal(AffinePresentation::product(f, g), 2);
  CHECK(sp.product.ideal.canonical() == Ideal(sp.product.ring, direct.ideal.generators()).canonical());
}
