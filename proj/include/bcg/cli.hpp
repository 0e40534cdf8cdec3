#pragma once

// Command-line front end. Documents are read from files (or standard input
// for "-") and results are written as JSON.
//
// Exit codes: 0 success, 1 invalid input, 2 negative outcome (non-polar form,
// invalid cocycle, non-cohomologous pair, failed check), 3 guard exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace bcg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNegative = 2;
inline constexpr int kExitGuard = 3;

inline constexpr long long kDefaultMaxCandidates = 1'000'000;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bcg::cli
