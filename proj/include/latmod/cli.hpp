#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latmod::cli {

/// Runs one command. argv excludes the program name.
///
/// Exit codes: 0 success, 1 failed expectation (--expect, --expect-all,
/// a failing verify or reference check), 2 usage error, 3 invalid input,
/// 4 internal error.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace latmod::cli
