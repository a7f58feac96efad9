#pragma once

#include <iosfwd>

namespace moessner {

/// Command-line front end. Parses argv, runs one subcommand (sieve, value,
/// triangle, verify), writes data to `out` and diagnostics to `err`.
/// Returns 0 on success / all-pass, 1 when a check ran and found a
/// violation, 2 on usage or domain errors. Never any other code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moessner
