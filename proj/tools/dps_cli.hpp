#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dps::cli {

/// Exit codes of the dps tool.
enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kSchema = 2,         // malformed input, unknown family, bad flags
  kPrecondition = 3,   // ZeroAlpha, MalformedR, invalid parameters, ...
  kIdentityFails = 4,  // some residual is nonzero
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dps::cli
