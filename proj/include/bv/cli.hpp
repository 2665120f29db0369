#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bv::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kUndecided = 2;
inline constexpr int kInternal = 3;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bv::cli
