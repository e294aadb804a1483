#pragma once

// The wqo_meter command line: invariants, normalize, bounds, weakmot, oracle, check, iso.

#include <iosfwd>
#include <string>
#include <vector>

namespace wqo::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kHypothesisNotMet = 3,
  kUnsupported = 4,
  kOracleTooLarge = 5,
};

/// Runs one command; args exclude the program name. The WQO_METER_SEED environment
/// variable, when set, overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wqo::cli
