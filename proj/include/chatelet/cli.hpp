#pragma once

#include <iosfwd>

namespace chatelet {

// Command-line driver: subcommands analyze / symbol / galois / evimage /
// norms / squares / corpus.  Writes reports to `out`, diagnostics to `err`.
// Returns the process exit code: 0 for a definitive result, 2 when an
// analysis ends inconclusive, 1 on input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chatelet
