#pragma once

#include <string>
#include <vector>

namespace qredux::cli {

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 domain error, 2 accuracy error, 3 usage error.
int run(const std::vector<std::string>& args);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The umbrella oracle/invariant suite behind `verify`. When a path to a
/// ZETA matrix file is given, its trace and spectrum are checked against
/// the closed forms named in its header.
std::vector<CheckResult> run_verification(const std::string& zeta_file = "");

} // namespace qredux::cli
