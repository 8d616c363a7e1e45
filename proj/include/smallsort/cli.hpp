#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smallsort::cli {

//! Exit statuses besides 0 (success) and CLI11's own parse-error codes.
inline constexpr int kExitInvalidNetwork = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitCorrectness = 3;

//! Runs the command line `args` (without the program name), writing results
//! to `out` unless --out is given and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace smallsort::cli
