#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ooc/bounds.hpp"
#include "ooc/verify.hpp"

namespace ooc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,   // verify: the input code violates a correlation bound
  kExitUsage = 2,          // bad arguments, unsupported parameters, malformed input
  kExitInternalFailure = 3,  // a construction failed its own verification
  kExitResource = 4,       // a search needed by a construction ran out of budget
};

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

nlohmann::json report_json(const VerificationReport& report);
nlohmann::json bound_json(const BoundReport& report);

}  // namespace ooc::cli
