#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "theta/graph.hpp"
#include "theta/properties.hpp"

namespace theta {

inline constexpr int kReportVersion = 1;

struct ReportOptions {
  std::uint64_t hamilton_budget = kDefaultHamiltonBudget;
  bool timestamp = true;
};

nlohmann::json group_json(const GroupSpec& g);

/// Spectrum section: numeric always, closed form when a theorem covers the
/// group, and the comparison flag (null when there is no closed form).
nlohmann::json spectrum_json(const ThetaGraph& t);

/// Full analysis. Throws ConsistencyError when any dual criterion disagrees.
nlohmann::json analysis_report(const ThetaGraph& t, const ReportOptions& opts = {});

/// Re-checks every witness stored in a report against a graph. Returns an
/// empty string on success, otherwise a description of the first failure.
std::string revalidate_report(const nlohmann::json& report, const ThetaGraph& t);

}  // namespace theta
