#pragma once

#include <exception>

#include "orbitlab/expcli/config.hpp"
#include "orbitlab/expcli/record.hpp"

namespace orbitlab::expcli {

/// Process exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_config = 2, exit_budget = 3, exit_invariant = 4 };

/// Maps a library exception to its exit code: ConfigError -> 2,
/// BudgetExceeded -> 3, InvariantViolation -> 4, anything else -> 1.
int exit_code_for(const std::exception& e);

/// Executes the experiment. BudgetExceeded and InvariantViolation do not
/// escape: the record comes back with status set and the partial payload
/// kept. ConfigError does escape.
ResultRecord run(const ExperimentConfig& config);

/// Brute-force cross-checks for the config's group and space (word lists,
/// entry scans, full-ball enumeration), at sizes small enough for the
/// references. Returns a JSON report with "agree" per check.
Json run_oracles(const ExperimentConfig& config);

}  // namespace orbitlab::expcli
