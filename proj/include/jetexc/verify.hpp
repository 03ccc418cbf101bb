// Executable checkers: the distance statement for Exc^k, the height
// inequality with a fitted constant, the rational-point equality, and the
// randomized identity batteries.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetexc/exceptional.hpp"
#include "jetexc/function_field.hpp"

namespace jetexc {

enum class VerifyStatus { Pass, Fail, Inconclusive };
std::string to_string(VerifyStatus s);

/// One evaluated sample. `fields` is an ordered list of (key, value) strings.
struct SampleRecord {
  std::string id;
  std::vector<std::pair<std::string, std::string>> fields;
  bool ok = true;
};

struct VerificationReport {
  std::string statement;
  std::string fixture;
  VerifyStatus status = VerifyStatus::Pass;
  std::size_t samples_tested = 0;
  std::vector<std::string> failures;
  std::optional<long long> n_min;
  /// Fitted exponent of C_v; empty when it is +infinity or not applicable.
  std::optional<long long> c_v_exponent;
  std::vector<SampleRecord> samples;
  std::vector<std::string> notes;

  bool pass() const { return status == VerifyStatus::Pass; }
};

/// For P = p^k Q with Q in gamma_ball(radius): whenever the contact of P with
/// X is n >= n_min, its contact with Exc^k must be >= n. n_min is the least
/// threshold for which this holds over the samples.
VerificationReport check_excdist(const GroupVariety& a, const Subvariety& x, const Ideal& exc, const Subgroup& gamma,
                                 const Place& v, std::size_t k, int radius, const std::string& fixture,
                                 const Budget& budget = Budget::defaults());

/// Every point of X(K) among p^k gamma_ball(radius) lies on V(Exc^k).
VerificationReport check_containment(const GroupVariety& a, const Subvariety& x, const Ideal& exc,
                                     const Subgroup& gamma, std::size_t k, int radius, const std::string& fixture,
                                     const Budget& budget = Budget::defaults());

/// max over P in gamma_ball(radius) of lambda_v(X,P) - lambda_v(Y,P).
VerificationReport check_inequality(const GroupVariety& a, const Subvariety& x, const Subvariety& y,
                                    const Subgroup& gamma, const Place& v, int radius, const std::string& fixture,
                                    const Budget& budget = Budget::defaults());

/// X(K) and Y(K) agree on gamma_ball(radius).
VerificationReport check_corollary(const GroupVariety& a, const Subvariety& x, const Subvariety& y,
                                   const Subgroup& gamma, int radius, const std::string& fixture,
                                   const Budget& budget = Budget::defaults());

/// Curves with known generators for the batteries (p = 2, 3, 5).
struct BatteryCurve {
  std::string id;
  EllipticCurve curve;
  std::vector<KPoint> generators;
};
std::vector<BatteryCurve> battery_curves();

struct BatteryOptions {
  std::uint64_t seed = 1;
  bool fault = false;  // perturbed K-point group law
  std::size_t points = 50;
  std::size_t maps = 20;
  std::size_t triples = 100;
  std::size_t pairs = 50;
  std::size_t max_order = 3;
};

/// Truncation and functoriality identities for jets of points and maps.
VerificationReport jet_battery(const BatteryOptions& options);
/// Group axioms and the homomorphism property of lambda_1.
VerificationReport group_battery(const BatteryOptions& options);
/// Descent and soundness of the exceptional chain on the given fixture.
VerificationReport exceptional_battery(const GroupVariety& a, const Subvariety& x, const Subgroup& gamma,
                                       const std::string& fixture, const Budget& budget = Budget::defaults());

/// The jet and group batteries with default sizes.
std::vector<VerificationReport> property_suite(std::uint64_t seed, bool fault = false);

}  // namespace jetexc
