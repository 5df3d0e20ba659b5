#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpp {

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

// Runs the `lpp` command line. `args` excludes the program name. Reports go
// to `out`; warnings, timings and (without --json) errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lpp
