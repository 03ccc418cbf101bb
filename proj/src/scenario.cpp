#include "jetexc/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jetexc/prime_field.hpp"

namespace jetexc {

namespace {

const Json& field(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(where, "missing field \"" + key + "\"");
  return doc.at(key);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer, got " + j.dump());
  return j.get<long long>();
}

std::size_t count(const Json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < 0) throw ParseError(where, "must be nonnegative");
  return static_cast<std::size_t>(v);
}

// Runs `f`, prefixing parse errors from nested parsers with the field name.
template <class F>
auto at_field(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

GroupPoint parse_point(const Json& j, const Scenario& s, const std::string& where) {
  if (!j.is_array() || j.size() != s.curves.size())
    throw ParseError(where, "expected " + std::to_string(s.curves.size()) + " parts");
  GroupPoint out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (j[i].is_string() && j[i].get<std::string>() == "O") {
      out.parts.push_back(KPoint::identity());
      continue;
    }
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(w, "expected \"O\" or [x, y]");
    const RationalFunction x = at_field(w, [&] { return parse_rational_function(text(j[i][0], w), s.p); });
    const RationalFunction y = at_field(w, [&] { return parse_rational_function(text(j[i][1], w), s.p); });
    if (!s.curves[i].contains(x, y))
      throw DomainError(w + ": point (" + x.str() + ", " + y.str() + ") is not on curve " + std::to_string(i + 1));
    out.parts.push_back(KPoint::at(x, y));
  }
  return out;
}

}  // namespace

Budget ScenarioBudget::resolve() const {
  Budget b = Budget::defaults();
  if (max_pairs) b.max_pairs = static_cast<std::size_t>(*max_pairs);
  if (max_degree) b.max_degree = static_cast<int>(*max_degree);
  if (max_basis) b.max_basis = static_cast<std::size_t>(*max_basis);
  if (max_cosets) b.max_cosets = static_cast<std::size_t>(*max_cosets);
  if (wall_time_s) b.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(*wall_time_s);
  return b.with_env_overrides();
}

namespace {

const std::vector<std::string> kChecks{"exceptional", "containment", "excdist", "locus", "inequality", "corollary"};

}  // namespace

bool Scenario::runs(const std::string& check) const {
  return checks.empty() || std::find(checks.begin(), checks.end(), check) != checks.end();
}

Subvariety Scenario::subvariety() const { return jetexc::subvariety(variety(), x); }

Scenario parse_scenario(const Json& doc, const std::string& source) {
  if (!doc.is_object()) throw ParseError(source, "expected a JSON object");
  Scenario s;
  s.name = doc.contains("name") ? text(doc.at("name"), "name") : source;
  const long long p = integer(field(doc, "p", source), "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("p: " + std::to_string(p) + " is not prime");
  require_supported_prime(static_cast<std::uint64_t>(p));
  s.p = static_cast<std::uint32_t>(p);

  const Json& curves = field(doc, "curves", source);
  if (!curves.is_array() || curves.empty()) throw ParseError("curves", "expected a nonempty list");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string w = "curves[" + std::to_string(i) + "]";
    const Json& coeffs = curves[i].is_object() ? field(curves[i], "a", w) : curves[i];
    if (!coeffs.is_array() || coeffs.size() != 5) throw ParseError(w, "expected {\"a\": [a1, a2, a3, a4, a6]}");
    std::array<std::string, 5> a;
    for (std::size_t c = 0; c < 5; ++c) a[c] = text(coeffs[c], w);
    s.curves.push_back(at_field(w, [&] { return EllipticCurve::parse(a, s.p); }));
  }

  if (doc.contains("assumptions") && doc.at("assumptions").contains("trace_zero"))
    s.trace_zero = text(doc.at("assumptions").at("trace_zero"), "assumptions.trace_zero");
  if (s.trace_zero == "checked-nonisotrivial") {
    for (std::size_t i = 0; i < s.curves.size(); ++i)
      if (!is_nonisotrivial(s.curves[i]))
        throw DomainError("curves[" + std::to_string(i) + "]: j-invariant is constant, trace zero cannot be checked");
  } else if (s.trace_zero != "asserted") {
    throw ParseError("assumptions.trace_zero", "expected \"asserted\" or \"checked-nonisotrivial\"");
  }

  const GroupVariety a = s.variety();
  const Json& xs = field(doc, "X", source);
  if (!xs.is_array()) throw ParseError("X", "expected a list of polynomials");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string w = "X[" + std::to_string(i) + "]";
    s.x.push_back(at_field(w, [&] { return parse_poly(text(xs[i], w), a.ring()); }));
  }

  const Json& gamma = field(doc, "gamma", source);
  if (!gamma.is_array()) throw ParseError("gamma", "expected a list of points");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    s.gamma.push_back(parse_point(gamma[i], s, "gamma[" + std::to_string(i) + "]"));

  if (doc.contains("places")) {
    const Json& places = doc.at("places");
    if (!places.is_array()) throw ParseError("places", "expected a list");
    for (std::size_t i = 0; i < places.size(); ++i) {
      const std::string w = "places[" + std::to_string(i) + "]";
      s.places.push_back(at_field(w, [&] { return Place::parse(text(places[i], w), s.p); }));
    }
  }

  if (doc.contains("parameters")) {
    const Json& q = doc.at("parameters");
    if (q.contains("k")) s.params.k = count(q.at("k"), "parameters.k");
    if (q.contains("m")) s.params.m = count(q.at("m"), "parameters.m");
    if (q.contains("k_max")) s.params.k_max = count(q.at("k_max"), "parameters.k_max");
    if (q.contains("order")) s.params.order = count(q.at("order"), "parameters.order");
    if (q.contains("max_jet_order"))
      s.params.max_jet_order = count(q.at("max_jet_order"), "parameters.max_jet_order");
    if (q.contains("n_min")) s.params.n_min = integer(q.at("n_min"), "parameters.n_min");
    if (q.contains("radius")) s.params.radius = static_cast<int>(count(q.at("radius"), "parameters.radius"));
    if (q.contains("seed")) s.params.seed = count(q.at("seed"), "parameters.seed");
    if (q.contains("radii")) {
      s.params.radii.clear();
      for (const auto& r : q.at("radii")) s.params.radii.push_back(static_cast<int>(count(r, "parameters.radii")));
    }
    if (s.params.m == 0) throw DomainError("parameters.m: must be at least 1");
  }

  if (doc.contains("budgets")) {
    const Json& b = doc.at("budgets");
    auto opt = [&](const char* key, std::optional<long long>& out) {
      if (b.contains(key)) out = static_cast<long long>(count(b.at(key), std::string("budgets.") + key));
    };
    opt("max_pairs", s.budget.max_pairs);
    opt("max_degree", s.budget.max_degree);
    opt("max_basis", s.budget.max_basis);
    opt("max_cosets", s.budget.max_cosets);
    opt("wall_time_s", s.budget.wall_time_s);
  }

  if (doc.contains("expect")) {
    const Json& e = doc.at("expect");
    if (e.contains("locus")) {
      s.expect_locus = text(e.at("locus"), "expect.locus");
      if (s.expect_locus != "equal" && s.expect_locus != "strict")
        throw ParseError("expect.locus", "expected \"equal\" or \"strict\"");
    }
    if (e.contains("iterations")) s.expect_iterations = count(e.at("iterations"), "expect.iterations");
  }
  if (doc.contains("checks")) {
    const Json& c = doc.at("checks");
    if (!c.is_array()) throw ParseError("checks", "expected a list");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string w = "checks[" + std::to_string(i) + "]";
      const std::string name = text(c[i], w);
      if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end())
        throw ParseError(w, "unknown check \"" + name + "\"");
      s.checks.push_back(name);
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.what());
  }
  return parse_scenario(doc, path);
}

Json serialize(const Scenario& s) {
  Json doc;
  doc["name"] = s.name;
  doc["p"] = s.p;
  doc["curves"] = Json::array();
  for (const auto& e : s.curves) {
    const auto a = e.serialize();
    doc["curves"].push_back(Json{{"a", std::vector<std::string>(a.begin(), a.end())}});
  }
  doc["X"] = Json::array();
  for (const auto& g : s.x) doc["X"].push_back(g.str());
  doc["gamma"] = Json::array();
  for (const auto& g : s.gamma) {
    Json pt = Json::array();
    for (const auto& q : g.parts) pt.push_back(q.infinity ? Json("O") : Json::array({q.x.str(), q.y.str()}));
    doc["gamma"].push_back(pt);
  }
  doc["places"] = Json::array();
  for (const auto& v : s.places) doc["places"].push_back(v.str());
  doc["parameters"] = {{"k", s.params.k},         {"m", s.params.m},           {"k_max", s.params.k_max},
                       {"order", s.params.order}, {"max_jet_order", s.params.max_jet_order}, {"n_min", s.params.n_min},   {"radius", s.params.radius},
                       {"radii", s.params.radii}, {"seed", s.params.seed}};
  Json b = Json::object();
  auto put = [&](const char* key, const std::optional<long long>& v) {
    if (v) b[key] = *v;
  };
  put("max_pairs", s.budget.max_pairs);
  put("max_degree", s.budget.max_degree);
  put("max_basis", s.budget.max_basis);
  put("max_cosets", s.budget.max_cosets);
  put("wall_time_s", s.budget.wall_time_s);
  doc["budgets"] = b;
  doc["assumptions"] = {{"trace_zero", s.trace_zero}};
  Json e = Json::object();
  if (!s.expect_locus.empty()) e["locus"] = s.expect_locus;
  if (s.expect_iterations) e["iterations"] = *s.expect_iterations;
  doc["expect"] = e;
  if (!s.checks.empty()) doc["checks"] = s.checks;
  return doc;
}

std::string scenario_hash(const Scenario& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : serialize(s).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jetexc
