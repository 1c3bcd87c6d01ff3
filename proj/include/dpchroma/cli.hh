#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpchroma::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_budget = 3;

/// Runs one invocation; `args` excludes the program name. Output goes to
/// `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace dpchroma::cli
