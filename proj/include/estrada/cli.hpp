#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace estrada::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`; diagnostics and counterexample blocks go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace estrada::cli
