#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"

namespace gpi {

/// Stable machine-readable emission ("schema": 1). All integers that can
/// exceed 2^53 are strings; two runs with the same config and seed are
/// byte-identical.
std::string report_to_json(const InvariantReport& rep, const RunConfig& cfg);
std::string checks_to_json(const std::string& algebra_name, const std::vector<CheckLine>& checks,
                           const RunConfig& cfg, bool truncated);

bool any_hard_failure(const std::vector<CheckLine>& checks);
bool any_skipped(const std::vector<CheckLine>& checks);

}  // namespace gpi
