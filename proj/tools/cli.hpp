#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffstring::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCheckFailure = 3;

/// Runs one subcommand. `args` excludes the program name. Reports go to the
/// --output path when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffstring::cli
