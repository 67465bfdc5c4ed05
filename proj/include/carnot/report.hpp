#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "carnot/quadrature.hpp"
#include "carnot/verify.hpp"

namespace carnot {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json config_to_json(const GroupConfig& cfg);

/// Report document: tool_version, config, check_name, operator, points,
/// summary, verdict, tolerance, semantics, seed, rng_name, diagnostics, notes.
nlohmann::json report_to_json(const ResidualReport& report, bool include_points = true);

nlohmann::json estimate_to_json(const McEstimate& est);

/// Keys every emitted document carries.
const std::vector<std::string>& required_report_keys();

/// Header `c0,...,c{k-1},residual,value`, one row per sample, every number
/// printed with 17 significant digits.
std::string report_to_csv(const ResidualReport& report);

/// Inverse of report_to_csv for the sample table. Throws Error on malformed input.
std::vector<SampleResidual> parse_csv(const std::string& text);

/// %.17g
std::string format_double(double v);

}  // namespace carnot
