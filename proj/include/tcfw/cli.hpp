#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcfw/planner.hpp"
#include "tcfw/report.hpp"
#include "tcfw/ring.hpp"

namespace tcfw {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "tcfw-report/1";

Json to_json(const VerificationReport& r);
Json to_json(const LowerBoundReport& r);
Json to_json(const std::vector<HomologyGroup>& h);

/// Entry point behind the executable. `args` excludes the program name.
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
/// The JSON report goes to `out` (or --out); a one-line summary goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcfw
