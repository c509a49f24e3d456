#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerfrac::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kNumerical = 2;

/// Runs one command. `args` excludes the program name. Normal output goes to
/// `out`; diagnostics in text/csv mode go to `err` (json mode reports errors
/// as an object on `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerfrac::cli
