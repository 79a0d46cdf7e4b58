#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "k3cli/verify.hpp"

namespace k3cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
///
/// Subcommands: classify, verify, hilbert, qseries, invariant. Results go to
/// --output when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// run() with the invariants of `verify` replaced by `backend`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const InvariantBackend& backend);

}  // namespace k3cli
