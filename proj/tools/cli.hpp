#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reeb::cli {

enum ExitCode {
    ok = 0,
    invalid_input = 1,
    budget_exceeded = 2,
    invariant_violation = 3,
};

/// Runs one command. `args` includes the program name. JSON goes to `out`,
/// a human summary and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reeb::cli
