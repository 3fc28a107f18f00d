#pragma once

#include <iosfwd>

namespace pochzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line front-end. Data goes to `out` (or --out), messages
/// and the summary of a CSV run written to stdout go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pochzeta::cli
