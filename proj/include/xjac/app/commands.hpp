#ifndef XJAC_APP_COMMANDS_HPP
#define XJAC_APP_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "xjac/app/config.hpp"
#include "xjac/app/report.hpp"
#include "xjac/error.hpp"

namespace xjac::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;

struct CommandResult {
    Table table;
    /// Failed sweep cells and similar non-fatal problems.
    std::size_t warnings = 0;
    std::vector<std::string> notes;
};

CommandResult cmd_jacobian(const ExperimentConfig& cfg);
CommandResult cmd_extract_sd(const ExperimentConfig& cfg);
/// mode: orthogonality | mordell | winterhof | interval.
CommandResult cmd_charsum(const ExperimentConfig& cfg);
CommandResult cmd_sweep(const ExperimentConfig& cfg);

/// 3 for BudgetExceeded, 2 for everything else.
int exit_code_for(ErrorCode code);

/// Runs a command by name ("jacobian", "extract-sd", "charsum", "sweep") and
/// writes the report to cfg.out, or to `out` when cfg.out is empty. Errors
/// and warnings go to `err`. Returns the process exit code.
int run_command(const std::string& command, const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace xjac::app

#endif  // XJAC_APP_COMMANDS_HPP
