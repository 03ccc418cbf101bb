#include "jetexc/run.hpp"

#include "jetexc/jets.hpp"

namespace jetexc {

namespace {

Json strings(const std::vector<Poly>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.str());
  return out;
}

Json optional_int(const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); }

struct Resolved {
  std::size_t order, k, m;
  int radius;
  std::uint64_t seed;
  std::vector<Place> places;
};

Resolved resolve(const Scenario& s, const RunOptions& o) {
  Resolved r{o.order.value_or(s.params.order), o.k.value_or(s.params.k), o.m.value_or(s.params.m),
             o.radius.value_or(s.params.radius), o.seed.value_or(s.params.seed), s.places};
  if (o.place) r.places = {Place::parse(*o.place, s.p)};
  if (r.m == 0) throw DomainError("--m: must be at least 1");
  if (r.order > s.params.max_jet_order)
    throw DomainError("--order: " + std::to_string(r.order) + " exceeds max_jet_order " +
                      std::to_string(s.params.max_jet_order));
  return r;
}

Json header(const std::string& sub, const Scenario& s, const Resolved& r) {
  Json doc;
  doc["toolkit"] = kToolkitVersion;
  doc["subcommand"] = sub;
  doc["scenario"] = s.name;
  doc["scenario_hash"] = scenario_hash(s);
  Json places = Json::array();
  for (const auto& v : r.places) places.push_back(v.str());
  doc["parameters"] = {{"order", r.order}, {"k", r.k},         {"m", r.m},
                       {"radius", r.radius}, {"seed", r.seed}, {"places", places}};
  Json b = serialize(s)["budgets"];
  doc["parameters"]["budgets"] = b;
  return doc;
}

VerificationReport locus_report(const Scenario& s, const LinearLocusResult& y, std::size_t m, const Budget& budget) {
  VerificationReport r;
  r.statement = "locus m=" + std::to_string(m);
  r.fixture = s.name;
  const Subvariety x = s.subvariety();
  const auto rel = subscheme_relation(y.y.patch.ideal, x.patch.ideal, budget);
  const std::string shape = rel == SubschemeRelation::Equal          ? "equal"
                            : rel == SubschemeRelation::IContainsJ ? "strict"
                                                                     : "not contained";
  SampleRecord rec;
  rec.id = "Y";
  std::string gens;
  for (const auto& g : y.y.patch.ideal.canonical()) gens += (gens.empty() ? "" : "; ") + g;
  rec.fields = {{"generators", gens},
                {"relation_to_x", shape},
                {"iterations", std::to_string(y.certificate.size())},
                {"pieces", std::to_string(y.pieces.size())},
                {"stabilized", y.stabilized ? "true" : "false"},
                {"linearity_certified", y.linearity_certified ? "true" : "false"},
                {"decomposition_incomplete", y.decomposition_incomplete ? "true" : "false"}};
  r.samples.push_back(rec);
  r.samples_tested = 1;
  auto fail = [&](const std::string& why) {
    r.failures.push_back(why);
    r.status = VerifyStatus::Fail;
  };
  if (!y.stabilized) fail("the iteration did not stabilize");
  if (shape == "not contained") fail("Y is not contained in X");
  if (!s.expect_locus.empty() && shape != s.expect_locus) fail("expected " + s.expect_locus + ", got " + shape);
  if (s.expect_iterations && y.certificate.size() != *s.expect_iterations)
    fail("expected " + std::to_string(*s.expect_iterations) + " iterations, got " +
         std::to_string(y.certificate.size()));
  for (const auto& c : y.certificate)
    for (const auto& n : c.notes) r.notes.push_back("iteration " + std::to_string(c.iteration) + ": " + n);
  r.notes.push_back("strictness is tested only at the coset representatives used");
  return r;
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json doc;
  doc["statement"] = r.statement;
  doc["fixture"] = r.fixture;
  doc["pass"] = r.pass();
  doc["status"] = to_string(r.status);
  doc["n_min"] = optional_int(r.n_min);
  doc["C_v_exponent"] = optional_int(r.c_v_exponent);
  doc["samples_tested"] = r.samples_tested;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j;
    j["id"] = s.id;
    for (const auto& [k, v] : s.fields) j[k] = v;
    j["ok"] = s.ok;
    samples.push_back(j);
  }
  doc["samples"] = samples;
  doc["failures"] = r.failures;
  doc["notes"] = r.notes;
  return doc;
}

int exit_code(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return 0;
    case VerifyStatus::Fail:
      return 1;
    case VerifyStatus::Inconclusive:
      return 2;
  }
  return 2;
}

VerifyStatus combine(VerifyStatus a, VerifyStatus b) {
  if (a == VerifyStatus::Fail || b == VerifyStatus::Fail) return VerifyStatus::Fail;
  if (a == VerifyStatus::Inconclusive || b == VerifyStatus::Inconclusive) return VerifyStatus::Inconclusive;
  return VerifyStatus::Pass;
}

RunRecord run(const std::string& sub, const Scenario& s, const RunOptions& o) {
  const Resolved p = resolve(s, o);
  RunRecord rec;
  rec.document = header(sub, s, p);
  const Budget budget = s.budget.resolve();
  const GroupVariety a = s.variety();
  const Subvariety x = s.subvariety();
  Json out;
  try {
    if (sub == "jet") {
      const auto jp = prolong_ideal(x.patch, p.order);
      out["order"] = p.order;
      out["ring"] = jp.ring->names();
      out["generators"] = strings(jp.ideal.generators());
    } else if (sub == "crit") {
      const auto crit = critical_scheme(a, x, p.k, budget);
      out["k"] = p.k;
      out["ring"] = crit.ring->names();
      out["generators"] = strings(crit.ideal.generators());
    } else if (sub == "exc") {
      const auto exc = exceptional_scheme(a, x, p.k, budget);
      out["k"] = p.k;
      out["ideal"] = exc.ideal.canonical();
      out["unit"] = exc.ideal.is_unit(budget);
    } else if (sub == "chain") {
      const std::size_t k_max = o.k.value_or(s.params.k_max);
      const auto chain = stable_exceptional(a, x, k_max, budget);
      out["k_max"] = k_max;
      Json terms = Json::array();
      for (const auto& e : chain.chain) terms.push_back({{"k", e.k}, {"ideal", e.ideal.canonical()}});
      out["chain"] = terms;
      out["stabilized_at"] = chain.stabilized_at ? Json(*chain.stabilized_at) : Json(nullptr);
      out["descending"] = chain.descending;
      if (!chain.descending) rec.status = VerifyStatus::Fail;
      else if (!chain.stabilized_at) rec.status = VerifyStatus::Inconclusive;
    } else if (sub == "build-y") {
      const auto y = build_linear_locus(a, x, s.subgroup(), LocusOptions{p.m, std::nullopt, 8}, budget);
      const auto report = locus_report(s, y, p.m, budget);
      out["y"] = y.y.patch.ideal.canonical();
      Json pieces = Json::array();
      for (const auto& piece : y.pieces) pieces.push_back(piece.canonical());
      out["pieces"] = pieces;
      Json cert = Json::array();
      for (const auto& c : y.certificate)
        cert.push_back({{"iteration", c.iteration},
                        {"strict", c.strict},
                        {"stable", c.stable},
                        {"pieces", c.pieces},
                        {"notes", c.notes}});
      out["certificate"] = cert;
      out["report"] = to_json(report);
      rec.status = report.status;
    } else if (sub == "dist") {
      const auto exc = exceptional_scheme(a, x, p.k, budget);
      Json reports = Json::array();
      if (p.places.empty()) throw DomainError("dist: no place given (use --place or the scenario's places)");
      for (const auto& v : p.places) {
        const auto r = check_excdist(a, x, exc.ideal, s.subgroup(), v, p.k, p.radius, s.name, budget);
        rec.status = combine(rec.status, r.status);
        reports.push_back(to_json(r));
      }
      out["reports"] = reports;
    } else {
      throw DomainError("unknown subcommand " + sub);
    }
  } catch (const ResourceLimitError& e) {
    rec.status = VerifyStatus::Inconclusive;
    out["budget_exhausted"] = e.stage();
    out["message"] = e.what();
  }
  rec.document["status"] = to_string(rec.status);
  rec.document["outputs"] = out;
  return rec;
}

std::vector<VerificationReport> verify_fixture(const Scenario& s, const RunOptions& o) {
  const Resolved p = resolve(s, o);
  const Budget budget = s.budget.resolve();
  const GroupVariety a = s.variety();
  const Subvariety x = s.subvariety();
  const Subgroup gamma = s.subgroup();
  std::vector<VerificationReport> out;
  if (s.runs("exceptional")) out.push_back(exceptional_battery(a, x, gamma, s.name, budget));
  if (s.runs("containment") || s.runs("excdist")) {
    const Ideal exc = exceptional_scheme(a, x, p.k, budget).ideal;
    if (s.runs("containment")) out.push_back(check_containment(a, x, exc, gamma, p.k, p.radius, s.name, budget));
    for (const auto& v : s.runs("excdist") ? p.places : std::vector<Place>{}) {
      auto r = check_excdist(a, x, exc, gamma, v, p.k, p.radius, s.name, budget);
      if (r.n_min && *r.n_min > s.params.n_min) {
        r.status = VerifyStatus::Fail;
        r.failures.push_back("n_min " + std::to_string(*r.n_min) + " exceeds " + std::to_string(s.params.n_min));
      }
      out.push_back(std::move(r));
    }
  }
  if (!s.runs("locus") && !s.runs("inequality") && !s.runs("corollary")) return out;
  const auto y = build_linear_locus(a, x, gamma, LocusOptions{p.m, std::nullopt, 8}, budget);
  if (s.runs("locus")) out.push_back(locus_report(s, y, p.m, budget));
  for (const auto& v : s.runs("inequality") ? p.places : std::vector<Place>{}) {
    VerificationReport stable;
    stable.statement = "inequality stability v=" + v.str();
    stable.fixture = s.name;
    std::optional<long long> first;
    for (const int radius : s.params.radii) {
      auto r = check_inequality(a, x, y.y, gamma, v, radius, s.name, budget);
      SampleRecord rec;
      rec.id = "radius " + std::to_string(radius);
      rec.fields.push_back({"C_v_exponent", r.c_v_exponent ? std::to_string(*r.c_v_exponent) : "inf"});
      rec.ok = r.c_v_exponent.has_value() && (!first || *first == *r.c_v_exponent);
      if (!first && r.c_v_exponent) first = r.c_v_exponent;
      if (!rec.ok) {
        stable.status = VerifyStatus::Fail;
        stable.failures.push_back("exponent at radius " + std::to_string(radius) + " is infinite or differs");
      }
      ++stable.samples_tested;
      stable.samples.push_back(rec);
      out.push_back(std::move(r));
    }
    stable.c_v_exponent = first;
    out.push_back(std::move(stable));
  }
  if (s.runs("corollary")) out.push_back(check_corollary(a, x, y.y, gamma, p.radius, s.name, budget));
  return out;
}

RunRecord run_verify(const std::vector<Scenario>& scenarios, const RunOptions& o) {
  RunRecord rec;
  const std::uint64_t seed = o.seed.value_or(scenarios.empty() ? 1 : scenarios.front().params.seed);
  rec.document["toolkit"] = kToolkitVersion;
  rec.document["subcommand"] = "verify";
  rec.document["seed"] = seed;
  rec.document["fault_injection"] = o.fault;
  Json props = Json::array();
  for (const auto& r : property_suite(seed, o.fault)) {
    rec.status = combine(rec.status, r.status);
    props.push_back(to_json(r));
  }
  rec.document["properties"] = props;
  Json fixtures = Json::array();
  for (const auto& s : o.all ? scenarios : std::vector<Scenario>{}) {
    const Resolved p = resolve(s, o);
    Json f = header("verify", s, p);
    f.erase("toolkit");
    f.erase("subcommand");
    Json reports = Json::array();
    VerifyStatus st = VerifyStatus::Pass;
    try {
      for (const auto& r : verify_fixture(s, o)) {
        st = combine(st, r.status);
        reports.push_back(to_json(r));
      }
    } catch (const ResourceLimitError& e) {
      st = VerifyStatus::Inconclusive;
      f["budget_exhausted"] = e.stage();
      f["message"] = e.what();
    }
    f["status"] = to_string(st);
    f["reports"] = reports;
    rec.status = combine(rec.status, st);
    fixtures.push_back(f);
  }
  rec.document["fixtures"] = fixtures;
  rec.document["status"] = to_string(rec.status);
  return rec;
}

}  // namespace jetexc
