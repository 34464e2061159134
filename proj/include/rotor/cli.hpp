#pragma once
// Command-line front end.  run_cli parses argv, dispatches to the library,
// writes results to stdout (or --out), and maps failures to exit codes:
// 0 success, 1 numerical failure, 2 usage error.

namespace rotor {

int run_cli(int argc, const char* const* argv);

}  // namespace rotor
