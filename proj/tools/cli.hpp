#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtlab::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_claim_violated = 1,
    exit_not_evaluated = 2,
    exit_usage = 3,
};

/// Runs one mtlab invocation; args excludes the program name.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

}  // namespace mtlab::cli
