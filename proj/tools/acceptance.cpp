// One pass/fail line per acceptance criterion. Thresholds are fixed here.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jetexc/run.hpp"

using namespace jetexc;

namespace {

constexpr double kBatterySeconds = 60.0;
constexpr double kChainSeconds = 600.0;
constexpr std::size_t kPoints = 50, kMaps = 20, kTriples = 100, kPairs = 50, kMaxOrder = 3;
constexpr std::size_t kExcK = 1;
constexpr int kRadius = 3;
constexpr long long kMaxNmin = 2;
const std::vector<int> kRadii{2, 3};
constexpr std::uint64_t kSeed = 1;

using clk = std::chrono::steady_clock;
double since(clk::time_point t) { return std::chrono::duration<double>(clk::now() - t).count(); }

int failures = 0;

void line(int n, const std::string& name, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << " " << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
  if (!ok) ++failures;
}

// Runs one criterion; any exception (budget included) is a failure.
template <class F>
void criterion(int n, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(n, name, false, std::string("error: ") + e.what());
  }
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

BatteryOptions battery(bool fault) {
  BatteryOptions o;
  o.seed = kSeed;
  o.fault = fault;
  o.points = kPoints;
  o.maps = kMaps;
  o.triples = kTriples;
  o.pairs = kPairs;
  o.max_order = kMaxOrder;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  const std::string cli = argc > 2 ? argv[2] : "";
  const Scenario main_fixture = load_scenario(dir + "/e2xe2.json");
  const Scenario diagonal = load_scenario(dir + "/diagonal.json");
  const Scenario point = load_scenario(dir + "/point.json");
  const std::vector<const Scenario*> all{&main_fixture, &diagonal, &point};

  criterion(1, "jet identities", [&] {
    const auto t0 = clk::now();
    const auto r = jet_battery(battery(false));
    const double s = since(t0);
    // Per curve: truncation and lift checks per point, functoriality and composition per map.
    const std::size_t want = battery_curves().size() * (2 * kPoints + 2 * kMaps);
    line(1, "jet identities", r.pass() && r.samples_tested >= want && s < kBatterySeconds,
         std::to_string(r.samples_tested) + " checks, " + fmt(s));
  });

  criterion(2, "group law", [&] {
    const auto t0 = clk::now();
    const auto r = group_battery(battery(false));
    const double s = since(t0);
    const std::size_t want = battery_curves().size() * (3 * kTriples + kPairs);
    line(2, "group law", r.pass() && r.samples_tested >= want && s < kBatterySeconds,
         std::to_string(r.samples_tested) + " checks, " + fmt(s));
  });

  const GroupVariety a = main_fixture.variety();
  const Subvariety x = main_fixture.subvariety();
  const Subgroup gamma = main_fixture.subgroup();
  const Budget budget = main_fixture.budget.resolve();

  std::optional<Ideal> exc1;
  criterion(3, "chain descent", [&] {
    const auto t0 = clk::now();
    const Ideal e1 = exceptional_scheme(a, x, 1, budget).ideal;
    const Ideal e2 = exceptional_scheme(a, x, 2, budget).ideal;
    const double s = since(t0);
    exc1 = e1;
    const bool lower = radical_contains(e2, e1, budget);
    const bool upper = radical_contains(e1, x.patch.ideal, budget);
    line(3, "chain descent", lower && upper && s < kChainSeconds,
         std::string("Exc2 in Exc1: ") + (lower ? "yes" : "no") + ", Exc1 in X: " + (upper ? "yes" : "no") + ", " +
             fmt(s));
  });

  criterion(4, "containment", [&] {
    const Ideal e = exc1 ? *exc1 : exceptional_scheme(a, x, kExcK, budget).ideal;
    const auto r = check_containment(a, x, e, gamma, kExcK, kRadius, main_fixture.name, budget);
    line(4, "containment", r.pass() && r.samples_tested > 0,
         std::to_string(r.samples_tested) + " points of X in p*Gamma checked");
  });

  criterion(5, "distance", [&] {
    const Ideal e = exc1 ? *exc1 : exceptional_scheme(a, x, kExcK, budget).ideal;
    bool ok = true;
    std::string detail;
    for (const std::string place : {"t", "t+1"}) {
      const auto r = check_excdist(a, x, e, gamma, Place::parse(place, a.prime()), kExcK, kRadius,
                                   main_fixture.name, budget);
      ok = ok && r.pass() && r.n_min && *r.n_min <= kMaxNmin;
      detail += (detail.empty() ? "" : ", ") + std::string("v=") + place + " " + to_string(r.status) +
                " n_min=" + (r.n_min ? std::to_string(*r.n_min) : "none");
    }
    line(5, "distance", ok, detail);
  });

  criterion(6, "linear locus", [&] {
    auto locus = [&](const Scenario& s) {
      return build_linear_locus(s.variety(), s.subvariety(), s.subgroup(), LocusOptions{}, s.budget.resolve());
    };
    auto relation = [&](const Scenario& s, const LinearLocusResult& y) {
      return subscheme_relation(y.y.patch.ideal, s.subvariety().patch.ideal, s.budget.resolve());
    };
    auto corollary = [&](const Scenario& s, const LinearLocusResult& y) {
      return check_corollary(s.variety(), s.subvariety(), y.y, s.subgroup(), kRadius, s.name, s.budget.resolve())
          .pass();
    };
    const auto yd = locus(diagonal);
    const bool d = relation(diagonal, yd) == SubschemeRelation::Equal && yd.certificate.size() == 1;
    const auto yp = locus(point);
    const bool p = relation(point, yp) == SubschemeRelation::Equal && corollary(point, yp);
    const auto yn = locus(main_fixture);
    const bool n = relation(main_fixture, yn) == SubschemeRelation::IContainsJ && corollary(main_fixture, yn);
    line(6, "linear locus", d && p && n,
         std::string("diagonal ") + (d ? "ok" : "bad") + ", point " + (p ? "ok" : "bad") + ", non-linear " +
             (n ? "ok" : "bad"));
  });

  criterion(7, "height inequality", [&] {
    bool ok = true;
    std::string detail;
    for (const Scenario* s : all) {
      const auto sa = s->variety();
      const auto sx = s->subvariety();
      const auto sb = s->budget.resolve();
      const auto y = build_linear_locus(sa, sx, s->subgroup(), LocusOptions{}, sb).y;
      for (const auto& v : s->places) {
        std::vector<std::optional<long long>> exps;
        for (const int r : kRadii)
          exps.push_back(check_inequality(sa, sx, y, s->subgroup(), v, r, s->name, sb).c_v_exponent);
        bool same = true;
        for (const auto& e : exps) same = same && e && exps.front() && *e == *exps.front();
        ok = ok && same;
        detail += (detail.empty() ? "" : ", ") + s->name + "@" + v.str() + "=" +
                  (exps.front() ? std::to_string(*exps.front()) : "inf");
      }
    }
    line(7, "height inequality", ok, detail);
  });

  criterion(8, "determinism", [&] {
    if (cli.empty()) {
      line(8, "determinism", false, "no CLI path given");
      return;
    }
    const std::string files = dir + "/e2xe2.json " + dir + "/diagonal.json " + dir + "/point.json";
    std::string outs[2];
    int codes[2];
    for (int i = 0; i < 2; ++i) {
      outs[i] = "acceptance_verify_" + std::to_string(i) + ".json";
      codes[i] = std::system((cli + " verify --all " + files + " --out " + outs[i]).c_str());
    }
    const bool same = slurp(outs[0]) == slurp(outs[1]) && !slurp(outs[0]).empty();
    line(8, "determinism", same && codes[0] == 0 && codes[1] == 0,
         std::string("reports ") + (same ? "byte-identical" : "differ") + ", exit " + std::to_string(codes[0]));
  });

  criterion(9, "negative control", [&] {
    const auto j = jet_battery(battery(true));
    const auto g = group_battery(battery(true));
    line(9, "negative control", !j.pass() && !g.pass(),
         std::string("jet battery ") + to_string(j.status) + ", group battery " + to_string(g.status));
  });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
  return failures ? 1 : 0;
}
