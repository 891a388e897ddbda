#pragma once

#include <iosfwd>

namespace padicmeasure::cli {

/// Exit statuses: 0 success, 2 usage, 3 precondition, 4 internal consistency,
/// 5 stability-check failure, 1 anything unexpected.
enum exit_code : int {
    exit_ok = 0,
    exit_unexpected = 1,
    exit_usage = 2,
    exit_precondition = 3,
    exit_consistency = 4,
    exit_stability = 5,
};

/// Parses argv and runs one subcommand, writing results to out and
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicmeasure::cli
