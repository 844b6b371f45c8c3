#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgcell/cli/report.hpp"
#include "dgcell/monomial_orders.hpp"

namespace dgcell::cli {

inline constexpr int kExitInvalidInput = 2;

struct RunOptions {
  std::optional<int> weight_bound;
  OrderKind order = OrderKind::DegreeOrder;
  std::uint64_t seed = 20240917;
  std::optional<std::size_t> n_max;
  std::size_t threads = 1;
  bool timing = true;
};

const std::vector<std::string>& command_names();

/// Runs one command. Invalid input (bad spec, unknown command, missing
/// stanza) is reported by throwing; callers map that to exit code 2.
Report run_check(const std::string& command, const std::string& spec_path, const RunOptions& opts);

struct RunOutcome {
  int exit_code = 0;
  std::optional<Report> report;
  std::string error;
};

/// run_check with the exit-code contract applied.
RunOutcome run_command(const std::string& command, const std::string& spec_path, const RunOptions& opts);

}  // namespace dgcell::cli
