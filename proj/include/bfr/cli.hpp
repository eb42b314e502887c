#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Run the command line (arguments exclude the program name). Returns the
/// process exit code: 0 success, 1 computation/domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfr::cli
