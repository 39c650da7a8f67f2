#pragma once

#include <ostream>

namespace pdfa::io {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_yes = 0, exit_no = 1, exit_error = 2 };

/// Runs one `pdfa` invocation. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pdfa::io
