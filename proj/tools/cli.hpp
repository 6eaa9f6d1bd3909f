#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segopt::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int internal_error = 1;
inline constexpr int usage_error = 2;
inline constexpr int input_error = 3;
inline constexpr int validation_error = 4;
inline constexpr int budget_error = 5;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segopt::cli
