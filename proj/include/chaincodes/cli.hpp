#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaincodes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

// Runs the command line (args excludes the program name). Output written to
// --output goes to that file; everything else goes to out / err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaincodes
