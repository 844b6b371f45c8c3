#include <iostream>

#include <CLI/CLI11.hpp>

#include "dgcell/cli/commands.hpp"
#include "dgcell/cli/report.hpp"

int main(int argc, char** argv) {
  using namespace dgcell::cli;

  CLI::App app{"Bounded-weight checks for finite-cell DG algebras, DG ideals and Hochschild homology"};
  app.set_version_flag("--version", "dgcell 0.1.0");

  std::string command;
  std::string spec_path;
  RunOptions opts;
  std::string order = "degord";
  std::string format = "text";
  int weight_bound = -1;
  int n_max = -1;
  bool no_timing = false;

  app.add_option("command", command, "validate | uop-check | decompose | acyclic | homology | hh-bar | hh-weyl | "
                                     "hh-les | tipdec | presets")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("spec", spec_path, "spec file, or presets/<name>");
  app.add_option("--weight-bound,-N", weight_bound, "weight truncation N")->check(CLI::NonNegativeNumber);
  app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"rightlex", "degord"}));
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "seed for randomized checks");
  app.add_option("--n-max", n_max, "largest Hochschild degree for hh-bar")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "report elapsed_ms as 0 so output is reproducible byte for byte");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  if (weight_bound >= 0) opts.weight_bound = weight_bound;
  if (n_max >= 0) opts.n_max = static_cast<std::size_t>(n_max);
  opts.order = *dgcell::parse_order(order);
  opts.timing = !no_timing;

  RunOutcome out = run_command(command, spec_path, opts);
  if (!out.report) {
    std::cerr << "dgcell: " << out.error << "\n";
    return out.exit_code;
  }
  if (format == "json")
    std::cout << to_json(*out.report) << "\n";
  else
    std::cout << to_text(*out.report);
  return out.exit_code;
}
