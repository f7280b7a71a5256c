#pragma once

#include <iosfwd>

namespace c2b::cli {

/// Runs the command line; returns the process exit code.
/// 0 success, 1 failed check or internal error, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace c2b::cli
