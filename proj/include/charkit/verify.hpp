#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "charkit/classify.hpp"
#include "charkit/config.hpp"

namespace charkit {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view to_string(CheckStatus status);

/// Outcome of one check on one group. `data` holds the counts examined on a
/// pass and the offending character, subgroup or counts on a failure.
struct CheckResult {
  std::string check;
  std::string group;
  CheckStatus status = CheckStatus::kPass;
  std::string reason;  // set for skipped and failed results
  nlohmann::json data = nlohmann::json::object();
};

/// Check identifiers in suite order.
const std::vector<std::string>& check_ids();

/// Runs one check exhaustively over its quantifiers. Unknown ids and
/// internal errors give a failed result; CapExceeded gives a skipped one.
CheckResult run_check(std::string_view id, const GroupAnalysis& ctx);

/// Catalog x checks sweep, in catalog-major order. Groups that fail to
/// parse yield one failed result per check; groups above max_order (when
/// given) or the element cap yield skipped results.
std::vector<CheckResult> run_suite(const std::vector<std::string>& catalog,
                                   const std::vector<std::string>& checks, const Config& config,
                                   std::optional<std::uint64_t> max_order = std::nullopt);

bool any_failed(const std::vector<CheckResult>& results);

}  // namespace charkit
