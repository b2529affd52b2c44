#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhahn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). QHAHN_THREADS is
/// read from the environment.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qhahn::cli
