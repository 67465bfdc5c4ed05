#include "carnot/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "carnot/errors.hpp"

namespace carnot {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json config_to_json(const GroupConfig& cfg) {
  return {{"n", cfg.n()}, {"L", cfg.L()}, {"metric", to_string(cfg.metric())}, {"law", to_string(cfg.law())}};
}

const std::vector<std::string>& required_report_keys() {
  static const std::vector<std::string> keys{"tool_version", "config",  "check_name", "summary",
                                             "verdict",      "seed",    "rng_name"};
  return keys;
}

nlohmann::json report_to_json(const ResidualReport& report, bool include_points) {
  nlohmann::json doc;
  doc["tool_version"] = kToolVersion;
  doc["config"] = config_to_json(report.config);
  doc["check_name"] = report.check_name;
  doc["operator"] = report.operator_spec;
  if (include_points) {
    nlohmann::json points = nlohmann::json::array();
    for (const SampleResidual& s : report.points) {
      points.push_back({{"point", s.coords}, {"residual", s.residual}, {"value", s.value}});
    }
    doc["points"] = std::move(points);
  }
  doc["summary"] = {{"max_abs", report.summary.max_abs},
                    {"mean_abs", report.summary.mean_abs},
                    {"count", report.summary.count}};
  doc["verdict"] = to_string(report.verdict);
  doc["tolerance"] = report.tolerance;
  doc["semantics"] = to_string(report.semantics);
  doc["seed"] = report.seed;
  doc["rng_name"] = report.rng_name;
  doc["diagnostics"] = report.diagnostics;
  doc["notes"] = report.notes;
  return doc;
}

nlohmann::json estimate_to_json(const McEstimate& est) {
  return {{"value", est.value},
          {"std_error", est.std_error},
          {"samples", est.samples},
          {"seed", est.seed},
          {"generator", est.generator},
          {"p", est.p},
          {"r", est.r},
          {"gradient_norm", to_string(est.norm)},
          {"bound_violations", est.bound_violations},
          {"max_gradient_norm", est.max_gradient_norm}};
}

std::string report_to_csv(const ResidualReport& report) {
  std::ostringstream os;
  const std::size_t width = report.points.empty() ? 0 : report.points.front().coords.size();
  for (std::size_t c = 0; c < width; ++c) os << 'c' << c << ',';
  os << "residual,value\n";
  for (const SampleResidual& s : report.points) {
    for (double c : s.coords) os << format_double(c) << ',';
    os << format_double(s.residual) << ',' << format_double(s.value) << '\n';
  }
  return os.str();
}

std::vector<SampleResidual> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV");
  const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  if (columns < 2) throw Error("CSV header needs at least residual and value");
  std::vector<SampleResidual> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size()) throw Error("malformed CSV cell '" + cell + "'");
      cells.push_back(v);
    }
    if (cells.size() != columns) throw Error("CSV row width does not match the header");
    SampleResidual s;
    s.value = cells.back();
    cells.pop_back();
    s.residual = cells.back();
    cells.pop_back();
    s.coords = std::move(cells);
    rows.push_back(std::move(s));
  }
  return rows;
}

}  // namespace carnot
