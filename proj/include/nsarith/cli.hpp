#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsarith::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kPartial = 3 };

/// Runs one command line (without the program name), writing JSON (or the
/// --pretty rendering) to out and diagnostics to err. Returns the exit code:
/// 0 success, 1 negative verdict or violation, 2 usage/parse/precondition,
/// 3 model partiality (NonTerminatingQuotient, CoefficientNotRepresentable).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsarith::cli
