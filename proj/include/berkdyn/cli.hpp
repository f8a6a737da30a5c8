// Batch front end: analyze, equidist, potential.
#pragma once

#include <ostream>

namespace berkdyn {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitExceptional = 3,
  kExitCap = 4,
};

/// Runs the command line; results go to --out or `out`, one-line reasons for
/// refusals go to `err` as "error: <kind>: <message>".
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace berkdyn
