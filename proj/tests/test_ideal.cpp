#include <doctest.h>

#include "jetexc/ideal.hpp"

using namespace jetexc;

namespace {

std::vector<std::string> gb(const RingPtr& ring, const std::vector<std::string>& gens) {
  return Ideal::parse(ring, gens).canonical();
}

}  // namespace

TEST_CASE("groebner basis examples") {
  auto r5 = PolyRing::make(5, {"x", "y"});
  CHECK(gb(r5, {"x", "y"}) == std::vector<std::string>{"x", "y"});
  CHECK(gb(PolyRing::make(5, {"x"}), {"x^2 - 1", "x - 1"}) == std::vector<std::string>{"x + 4"});
  CHECK(gb(PolyRing::make(5, {"x"}), {"x - t", "x - t"}) == std::vector<std::string>{"x + 4*t"});
}

TEST_CASE("normal form examples") {
  auto r = PolyRing::make(3, {"x"});
  CHECK(normal_form(parse_poly("x", r), Ideal::parse(r, {"x"})).is_zero());
  CHECK(normal_form(parse_poly("x^2 + t", r), Ideal::parse(r, {"x - t"})).str() == "t^2+t");
  CHECK(normal_form(parse_poly("1", r), Ideal::parse(r, {"x"})).str() == "1");
}

TEST_CASE("elimination examples") {
  auto r = PolyRing::make(5, {"x", "y"});
  CHECK(eliminate(Ideal::parse(r, {"y - x^2", "x - t"}), {"x"}).canonical() ==
        std::vector<std::string>{"y + 4*t^2"});
  CHECK(eliminate(Ideal::parse(r, {"x"}), {"x"}).canonical().empty());
  CHECK(eliminate(Ideal::parse(r, {"x*y - 1"}), {"x"}).canonical().empty());
}

TEST_CASE("sum, intersection, saturation") {
  auto r = PolyRing::make(5, {"x", "y", "z"});
  CHECK(ideal_sum(Ideal::parse(r, {"x"}), Ideal::parse(r, {"y"})).canonical() ==
        std::vector<std::string>{"x", "y"});
  CHECK(ideal_intersect(Ideal::parse(r, {"x"}), Ideal::parse(r, {"y"})).canonical() ==
        std::vector<std::string>{"x*y"});
  CHECK(saturate(Ideal::parse(r, {"x*y", "x*z"}), parse_poly("x", r)).canonical() ==
        std::vector<std::string>{"y", "z"});
}

TEST_CASE("radical membership and subscheme relation") {
  auto r2 = PolyRing::make(2, {"x"});
  CHECK(radical_member(parse_poly("x", r2), Ideal::parse(r2, {"x^2"})));
  CHECK_FALSE(radical_member(parse_poly("x + 1", r2), Ideal::parse(r2, {"x"})));
  CHECK(subscheme_relation(Ideal::parse(r2, {"x^2"}), Ideal::parse(r2, {"x"})) == SubschemeRelation::Equal);
  auto r = PolyRing::make(3, {"x", "y"});
  CHECK(subscheme_relation(Ideal::parse(r, {"x", "y"}), Ideal::parse(r, {"x"})) ==
        SubschemeRelation::IContainsJ);
}

TEST_CASE("budget exhaustion is a clean error") {
  auto r = PolyRing::make(5, {"x", "y", "z"});
  Budget tiny;
  tiny.max_pairs = 1;
  Ideal i = Ideal::parse(r, {"x^2 + y*z + t", "y^2 + x*z + 1", "z^2 + x*y + t^2"});
  CHECK_THROWS_AS(i.basis(tiny), ResourceLimitError);
}
