#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "jetexc/run.hpp"

using namespace jetexc;

namespace {

int emit(const RunRecord& rec, const std::string& out) {
  const std::string text = rec.document.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ParseError("--out", "cannot write " + out);
    f << text;
  }
  return exit_code(rec.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jets, exceptional schemes and linear loci of subvarieties of E_1 x ... x E_n over F_p(t)"};
  app.require_subcommand(1);
  RunOptions opts;
  std::string out;
  std::vector<std::string> files;

  auto add_common = [&](CLI::App* sub, bool many) {
    if (many) sub->add_option("scenarios", files, "Scenario files")->check(CLI::ExistingFile);
    else sub->add_option("scenario", files, "Scenario file")->required()->expected(1)->check(CLI::ExistingFile);
    sub->add_option("--out", out, "Write the report here instead of stdout");
    sub->add_option("--seed", opts.seed, "Randomness seed for the batteries");
    sub->add_option("--radius", opts.radius, "Gamma-ball radius");
    sub->add_option("--place", opts.place, "Place: an irreducible polynomial in t, or inf");
  };
  auto* jet = app.add_subcommand("jet", "Jet ideal of X");
  jet->add_option("-n,--order", opts.order, "Jet order");
  auto* crit = app.add_subcommand("crit", "Critical scheme of X");
  auto* exc = app.add_subcommand("exc", "Exceptional scheme of X");
  auto* chain = app.add_subcommand("chain", "Exceptional chain up to --k");
  auto* build = app.add_subcommand("build-y", "Linear locus Y of X");
  build->add_option("--m", opts.m, "Exponent of p in the coset representatives");
  auto* dist = app.add_subcommand("dist", "Distance statement for Exc^k");
  auto* verify = app.add_subcommand("verify", "Identity batteries and, with --all, every statement on each fixture");
  verify->add_flag("--all", opts.all, "Run every statement on every scenario");
  verify->add_flag("--fault", opts.fault, "Perturb the group law (negative control)");
  verify->add_option("--k", opts.k, "Jet order k");
  verify->add_option("--m", opts.m, "Exponent of p in the coset representatives");
  for (auto* sub : {crit, exc, chain, dist}) sub->add_option("--k", opts.k, "Jet order k");
  for (auto* sub : {jet, crit, exc, chain, build, dist}) add_common(sub, false);
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<Scenario> scenarios;
      for (const auto& f : files) scenarios.push_back(load_scenario(f));
      return emit(run_verify(scenarios, opts), out);
    }
    const Scenario s = load_scenario(files.front());
    for (auto* sub : app.get_subcommands()) return emit(run(sub->get_name(), s, opts), out);
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exhausted in " << e.stage() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
