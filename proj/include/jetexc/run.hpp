// Subcommand dispatch for the command-line front end. Every run yields a
// deterministic JSON document and a status that maps onto the exit code.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetexc/scenario.hpp"
#include "jetexc/verify.hpp"

namespace jetexc {

inline constexpr const char* kToolkitVersion = "jetexc 0.1.0";

/// Command-line overrides of the scenario parameters.
struct RunOptions {
  std::optional<std::size_t> order, k, m;
  std::optional<std::string> place;
  std::optional<int> radius;
  std::optional<std::uint64_t> seed;
  bool all = false;
  bool fault = false;  // negative control for the batteries
};

struct RunRecord {
  VerifyStatus status = VerifyStatus::Pass;
  Json document;
};

Json to_json(const VerificationReport& r);
/// 0 pass, 1 fail, 2 inconclusive (budget exhaustion included).
int exit_code(VerifyStatus s);
VerifyStatus combine(VerifyStatus a, VerifyStatus b);

/// jet, crit, exc, chain, build-y, dist on one scenario.
RunRecord run(const std::string& subcommand, const Scenario& s, const RunOptions& options);

/// Every statement on one fixture.
std::vector<VerificationReport> verify_fixture(const Scenario& s, const RunOptions& options);

/// verify: the batteries once; with `all`, verify_fixture on each scenario too.
RunRecord run_verify(const std::vector<Scenario>& scenarios, const RunOptions& options);

}  // namespace jetexc
