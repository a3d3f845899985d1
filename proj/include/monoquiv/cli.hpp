#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monoquiv {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitValidationError = 3;
inline constexpr int kExitBudgetExceeded = 4;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoquiv
