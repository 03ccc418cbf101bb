#include <doctest.h>

#include "jetexc/run.hpp"

using namespace jetexc;

namespace {

const std::string kFixtures = JETEXC_FIXTURE_DIR;

Json e2xe2_doc() {
  return Json::parse(R"({
    "name": "e2xe2", "p": 2,
    "curves": [{"a": ["1","0","0","0","t^3"]}, ["1","0","0","0","t^3"]],
    "X": ["x2 + x1 + (x1 + t^2 + t)^2"],
    "gamma": [[["t","t"],["t","t"]]],
    "places": ["t", "t+1"]
  })");
}

bool throws_domain(const Json& doc) {
  try {
    parse_scenario(doc);
  } catch (const DomainError&) {
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("scenario parsing") {
  const Scenario s = parse_scenario(e2xe2_doc());
  CHECK(s.p == 2);
  CHECK(s.curves.size() == 2);
  CHECK(s.gamma.size() == 1);
  CHECK(s.places.size() == 2);
  CHECK(s.runs("excdist"));
  CHECK(serialize(s).at("curves")[0].at("a").size() == 5);

  Json bad_p = e2xe2_doc();
  bad_p["p"] = 4;
  CHECK(throws_domain(bad_p));

  Json off = e2xe2_doc();
  off["gamma"] = Json::parse(R"([[["t","t+1"],["t","t"]]])");
  CHECK(throws_domain(off));

  Json missing = e2xe2_doc();
  missing.erase("curves");
  CHECK_THROWS_AS(parse_scenario(missing), ParseError);

  Json check = e2xe2_doc();
  check["checks"] = Json::array({"nonsense"});
  CHECK_THROWS_AS(parse_scenario(check), ParseError);
}

TEST_CASE("serialization round trip and hash") {
  const Scenario s = parse_scenario(e2xe2_doc());
  const Json once = serialize(s);
  const Json twice = serialize(parse_scenario(once));
  CHECK(once.dump() == twice.dump());
  CHECK(scenario_hash(s) == scenario_hash(parse_scenario(once)));
  CHECK(scenario_hash(s).size() == 16);

  Json other = e2xe2_doc();
  other["X"] = Json::array({"x1 + x2"});
  CHECK(scenario_hash(s) != scenario_hash(parse_scenario(other)));
}

TEST_CASE("shipped fixtures load") {
  for (const char* f : {"e2xe2", "diagonal", "point"}) {
    const Scenario s = load_scenario(kFixtures + "/" + f + ".json");
    CHECK(s.p == 2);
    CHECK_FALSE(s.gamma.empty());
  }
  CHECK_FALSE(load_scenario(kFixtures + "/point.json").runs("excdist"));
}

TEST_CASE("distance check at k = 0 is trivial") {
  const Scenario s = parse_scenario(e2xe2_doc());
  const GroupVariety a = s.variety();
  const Subvariety x = s.subvariety();
  const auto r = check_excdist(a, x, x.patch.ideal, s.subgroup(), s.places.front(), 0, 2, s.name);
  CHECK(r.pass());
  REQUIRE(r.n_min);
  CHECK(*r.n_min == 0);
}

TEST_CASE("corollary holds for Y = X") {
  const Scenario s = parse_scenario(e2xe2_doc());
  const Subvariety x = s.subvariety();
  CHECK(check_corollary(s.variety(), x, x, s.subgroup(), 2, s.name).pass());
}

TEST_CASE("inequality for Y = X has exponent zero") {
  const Scenario s = parse_scenario(e2xe2_doc());
  const Subvariety x = s.subvariety();
  const auto r = check_inequality(s.variety(), x, x, s.subgroup(), s.places.front(), 2, s.name);
  CHECK(r.pass());
  REQUIRE(r.c_v_exponent);
  CHECK(*r.c_v_exponent == 0);
}

TEST_CASE("batteries are reproducible and catch the perturbed law") {
  BatteryOptions o;
  o.points = 10;
  o.maps = 5;
  o.triples = 20;
  o.pairs = 10;
  const auto a = to_json(jet_battery(o)).dump();
  const auto b = to_json(jet_battery(o)).dump();
  CHECK(a == b);
  CHECK(jet_battery(o).pass());
  CHECK(group_battery(o).pass());
  o.fault = true;
  CHECK_FALSE(jet_battery(o).pass());
  CHECK_FALSE(group_battery(o).pass());
  o.fault = false;
  CHECK(group_battery(o).pass());
}

TEST_CASE("run: exc at k = 0 returns X") {
  const Scenario s = parse_scenario(e2xe2_doc());
  RunOptions o;
  o.k = 0;
  const RunRecord rec = run("exc", s, o);
  CHECK(rec.status == VerifyStatus::Pass);
  CHECK(exit_code(rec.status) == 0);
  CHECK(rec.document.at("subcommand") == "exc");
  CHECK(rec.document.at("scenario_hash") == scenario_hash(s));
}

TEST_CASE("run: jet order above the cap is rejected") {
  const Scenario s = parse_scenario(e2xe2_doc());
  RunOptions o;
  o.order = 4;
  CHECK_THROWS_AS(run("jet", s, o), DomainError);
}

TEST_CASE("status helpers") {
  CHECK(exit_code(VerifyStatus::Fail) == 1);
  CHECK(exit_code(VerifyStatus::Inconclusive) == 2);
  CHECK(combine(VerifyStatus::Pass, VerifyStatus::Fail) == VerifyStatus::Fail);
  CHECK(combine(VerifyStatus::Pass, VerifyStatus::Pass) == VerifyStatus::Pass);
}

TEST_CASE("budget exhaustion is inconclusive") {
  Json doc = e2xe2_doc();
  doc["budgets"] = Json{{"max_pairs", 3}};
  const Scenario s = parse_scenario(doc);
  RunOptions o;
  o.k = 2;
  const RunRecord rec = run("exc", s, o);
  CHECK(rec.status == VerifyStatus::Inconclusive);
  CHECK(rec.document.at("outputs").contains("budget_exhausted"));
}
