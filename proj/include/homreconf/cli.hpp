#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homreconf {

inline constexpr int exit_answered = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_budget = 2;

/// Runs one command line (args excludes the program name). Reports go to out, diagnostics
/// and timings to err. Returns the process exit code.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace homreconf
