#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dmagic::app {

enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kInputError = 2,
    kBudgetAbort = 3,
};

/// Runs the dmagic command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmagic::app
