// Scenario files: a curve product, X, generators of Gamma, places and the
// parameters and budgets of a run. JSON with every field value an exact string.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetexc/exceptional.hpp"
#include "jetexc/function_field.hpp"

namespace jetexc {

using Json = nlohmann::ordered_json;

struct ScenarioParameters {
  std::size_t k = 1;
  std::size_t m = 1;
  std::size_t k_max = 2;
  std::size_t order = 1;
  std::size_t max_jet_order = 3;
  long long n_min = 2;  // largest acceptable reported threshold
  int radius = 3;
  std::vector<int> radii{2, 3};
  std::uint64_t seed = 1;
};

/// Budget fields as written in the scenario (unset fields keep the defaults).
struct ScenarioBudget {
  std::optional<long long> max_pairs, max_degree, max_basis, max_cosets, wall_time_s;
  Budget resolve() const;  // then JETEXC_BUDGET on top
};

struct Scenario {
  std::string name;
  std::uint32_t p = 0;
  std::vector<EllipticCurve> curves;
  std::vector<Poly> x;  // extra generators of X on A's patch
  std::vector<GroupPoint> gamma;
  std::vector<Place> places;
  ScenarioParameters params;
  ScenarioBudget budget;
  std::string trace_zero = "checked-nonisotrivial";
  /// Expected shape of the linear locus: "equal", "strict" or empty.
  std::string expect_locus;
  std::optional<std::size_t> expect_iterations;
  /// Statements run by verify --all: exceptional, containment, excdist,
  /// locus, inequality, corollary. All of them when the field is absent.
  std::vector<std::string> checks;

  bool runs(const std::string& check) const;

  GroupVariety variety() const { return GroupVariety(curves); }
  Subvariety subvariety() const;
  Subgroup subgroup() const { return {gamma}; }
};

/// Throws ParseError naming the offending field, or DomainError for an
/// off-curve point, a composite p or an isotrivial curve.
Scenario parse_scenario(const Json& doc, const std::string& source = "scenario");
Scenario load_scenario(const std::string& path);
/// Normalized form: parse(serialize(s)) serializes identically.
Json serialize(const Scenario& s);
/// FNV-1a of the normalized serialization, as 16 hex digits.
std::string scenario_hash(const Scenario& s);

}  // namespace jetexc
