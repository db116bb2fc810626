#pragma once

#include <iosfwd>

namespace mcgcoh::cli {

/// Runs the command line; returns the exit status (0 ok, 1 check failed,
/// 2 bad input or usage). Reports go to `out` unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcgcoh::cli
