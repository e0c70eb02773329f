#pragma once

#include <iosfwd>

namespace gspec::cli {

enum ExitCode : int { ok = 0, usage_error = 1, computation_error = 2, verify_mismatch = 3 };

/// Runs the command line; records go to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gspec::cli
