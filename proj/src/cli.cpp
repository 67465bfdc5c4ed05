#include "carnot/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <type_traits>

#include "CLI11.hpp"

#include "carnot/errors.hpp"
#include "carnot/gauges.hpp"
#include "carnot/quadrature.hpp"
#include "carnot/report.hpp"
#include "carnot/rng.hpp"
#include "carnot/verify.hpp"

namespace carnot::cli {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CARNOT_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("CARNOT_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell = trim(cell);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (cell.empty() || used != cell.size()) throw ConfigError(std::string("bad number in ") + what + ": '" + cell + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string(what) + " is empty");
  return out;
}

struct RunConfig {
  std::string config_file;
  int n = 0;
  std::string L = "1";
  std::string metric = "main-assumption";
  std::string law = "bch";
  std::string field = "rho";
  std::string op;
  double p = 2.0;
  std::size_t points = 500;
  std::uint64_t seed = 0;
  double tol = -1.0;
  double floor = kCounterexampleFloor;
  double L1 = 1.0;
  std::uint64_t samples = 1000000;
  double r = 1.0;
  unsigned threads = 1;
  std::string format = "json";
  std::string output;
  std::string norm = "metric";
  std::string a;
  std::string b;
};

/// Registers an option and remembers how to assign it from a config-file string.
class OptionTable {
 public:
  template <typename T>
  void add(CLI::App* app, const std::string& key, T& target, const std::string& help) {
    CLI::Option* opt = app->add_option("--" + key, target, help);
    setters_[app].push_back({key, opt, [&target, key](const std::string& text) {
                               if constexpr (std::is_same_v<T, std::string>) {
                                 target = text;
                               } else {
                                 std::istringstream in(text);
                                 T value{};
                                 in >> value;
                                 if (in.fail() || !(in >> std::ws).eof()) {
                                   throw ConfigError("bad value for '" + key + "' in config file: '" + text + "'");
                                 }
                                 target = value;
                               }
                             }});
  }

  /// Applies file entries for options not given on the command line.
  void apply_file(CLI::App* app, const std::map<std::string, std::string>& entries) {
    auto& list = setters_[app];
    for (const auto& [key, value] : entries) {
      auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.key == key; });
      if (it == list.end()) throw ConfigError("unknown key '" + key + "' in config file");
      if (it->option->count() == 0) it->assign(value);
    }
  }

  bool given(CLI::App* app, const std::string& key) {
    for (const Entry& e : setters_[app]) {
      if (e.key == key) return e.option->count() > 0 || from_file_.count(key) > 0;
    }
    return false;
  }

  void mark_file_keys(const std::map<std::string, std::string>& entries) {
    for (const auto& kv : entries) from_file_.insert(kv.first);
  }

 private:
  struct Entry {
    std::string key;
    CLI::Option* option;
    std::function<void(const std::string&)> assign;
  };
  std::map<CLI::App*, std::vector<Entry>> setters_;
  std::set<std::string> from_file_;
};

GroupConfig group_from(const RunConfig& rc, bool n_given) {
  const std::vector<double> L = parse_list(rc.L, "--L");
  const int n = n_given ? rc.n : static_cast<int>(L.size());
  if (n_given && static_cast<std::size_t>(rc.n) != L.size()) {
    throw ConfigError("--n " + std::to_string(rc.n) + " does not match " + std::to_string(L.size()) +
                      " values in --L");
  }
  return GroupConfig(n, L, parse_metric_mode(rc.metric), parse_law_convention(rc.law));
}

void check_format(const RunConfig& rc) {
  if (rc.format != "json" && rc.format != "csv") throw ConfigError("--format must be json or csv");
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(rc.output);
  if (!file) throw ConfigError("cannot open output file '" + rc.output + "'");
  file << text;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

int verdict_code(Verdict v) { return v == Verdict::Pass ? kExitPass : kExitFail; }

int cmd_check_htype(const RunConfig& rc, bool n_given, std::ostream& out) {
  const GroupConfig cfg = group_from(rc, n_given);
  const HTypeResult requested = is_heisenberg_type(cfg);
  ResidualReport report = verify_htype_transition(cfg.L(), rc.points == 0 ? 1 : std::min<std::size_t>(rc.points, 16));
  report.check_name = "check-htype";
  report.config = cfg;
  report.verdict = requested.heisenberg_type ? Verdict::Pass : Verdict::Fail;
  report.notes.push_back("verdict: H-type status under the requested metric '" + to_string(cfg.metric()) + "'");
  report.seed = 0;
  report.rng_name = std::string(Xoshiro256::kName);

  if (rc.format == "csv") {
    emit(rc, report_to_csv(report), out);
  } else {
    nlohmann::json doc = report_to_json(report);
    doc["htype"] = requested.heisenberg_type;
    doc["jz_matrix"] = nlohmann::json::array();
    const Eigen::MatrixXd J = jz_matrix(cfg);
    for (int i = 0; i < J.rows(); ++i) {
      std::vector<double> row(J.cols());
      for (int j = 0; j < J.cols(); ++j) row[static_cast<std::size_t>(j)] = J(i, j);
      doc["jz_matrix"].push_back(row);
    }
    emit(rc, dump(doc), out);
  }
  return verdict_code(report.verdict);
}

OperatorSpec operator_from(const RunConfig& rc, const std::string& fallback) {
  const std::string op = rc.op.empty() ? fallback : rc.op;
  if (op == "infinity") return OperatorSpec::infinity_laplace();
  if (op == "p-laplace") return OperatorSpec::p_laplace(rc.p);
  throw ConfigError("--operator must be p-laplace or infinity");
}

double default_tol(const OperatorSpec& spec) {
  return spec.kind() == OperatorSpec::Kind::InfinityLaplace ? kInfinityHarmonicTol : kPHarmonicTol;
}

int cmd_verify(const RunConfig& rc, bool n_given, std::ostream& out) {
  if (rc.points == 0) throw ConfigError("--points must be positive");
  if (rc.tol == 0.0 || (rc.tol < 0.0 && rc.tol != -1.0)) throw ConfigError("--tol must be positive");
  ResidualReport report{.check_name = "", .config = GroupConfig(1, {1.0})};

  if (rc.field == "rho" || rc.field == "gamma") {
    const GroupConfig cfg = group_from(rc, n_given);
    const bool gamma = rc.field == "gamma";
    const OperatorSpec spec = operator_from(rc, gamma ? "p-laplace" : "infinity");
    const FieldPtr f = gamma ? harmonic_profile(rc.p, cfg) : rho_field(cfg);
    const double tol = rc.tol > 0.0 ? rc.tol : default_tol(spec);
    report = verify_harmonic(f, spec, cfg, rc.points, rc.seed, tol, {.threads = rc.threads});
    if (gamma) {
      const bool log_branch = rc.p == static_cast<double>(homogeneous_dimension(cfg));
      report.notes.push_back(std::string("residual of the unscaled profile (C_p cancels); branch ") +
                             (log_branch ? "log" : "power"));
    }
  } else if (rc.field == "N" || rc.field == "u2") {
    const OperatorSpec spec = operator_from(rc, rc.field == "N" ? "infinity" : "p-laplace");
    const bool hinf_check = rc.field == "N" && spec.kind() == OperatorSpec::Kind::InfinityLaplace;
    const bool h2_check = rc.field == "u2" && spec.kind() == OperatorSpec::Kind::PLaplace && spec.p() == 2.0;
    if (hinf_check || h2_check) {
      CounterexampleOptions opts{.floor = rc.floor, .threads = rc.threads};
      if (rc.tol > 0.0) opts.tol = rc.tol;
      CounterexampleReports both = verify_counterexample(rc.L1, rc.points, rc.seed, opts);
      report = hinf_check ? std::move(both.hinf) : std::move(both.h2);
    } else {
      const GroupConfig cfg = counterexample_config(rc.L1, MetricMode::Orthonormal);
      const FieldPtr f = rc.field == "N" ? counterexample_norm(rc.L1) : counterexample_u2(rc.L1);
      const double tol = rc.tol > 0.0 ? rc.tol : default_tol(spec);
      report = verify_harmonic(f, spec, cfg, rc.points, rc.seed, tol,
                               {.gauge = counterexample_norm(rc.L1), .threads = rc.threads});
    }
  } else {
    throw ConfigError("--field must be one of rho, gamma, N, u2");
  }

  emit(rc, rc.format == "csv" ? report_to_csv(report) : dump(report_to_json(report)), out);
  return verdict_code(report.verdict);
}

int cmd_omega(const RunConfig& rc, bool n_given, std::ostream& out, std::ostream& err) {
  const GroupConfig cfg = group_from(rc, n_given);
  const QuadratureOptions opts{.norm = parse_gradient_norm(rc.norm), .threads = rc.threads};
  const McEstimate est = rc.r == 1.0 ? omega_p(rc.p, cfg, rc.samples, rc.seed, opts)
                                     : ball_p_measure(rc.r, rc.p, cfg, rc.samples, rc.seed, opts);
  const bool ok = std::isfinite(est.value) && est.value > 0.0;
  err << (rc.r == 1.0 ? "omega_p" : "|B_r|_p") << " = " << format_double(est.value) << " +- "
      << format_double(est.std_error) << '\n';

  if (rc.format == "csv") {
    std::ostringstream os;
    os << "value,std_error,samples,seed,p,r\n"
       << format_double(est.value) << ',' << format_double(est.std_error) << ',' << est.samples << ',' << est.seed
       << ',' << format_double(est.p) << ',' << format_double(est.r) << '\n';
    emit(rc, os.str(), out);
  } else {
    nlohmann::json doc;
    doc["tool_version"] = kToolVersion;
    doc["config"] = config_to_json(cfg);
    doc["check_name"] = rc.r == 1.0 ? "omega_p" : "ball_p_measure";
    doc["estimate"] = estimate_to_json(est);
    doc["summary"] = {{"value", est.value}, {"std_error", est.std_error}, {"count", est.samples}};
    doc["verdict"] = ok ? "Pass" : "Fail";
    doc["seed"] = est.seed;
    doc["rng_name"] = est.generator;
    emit(rc, dump(doc), out);
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_mul(const RunConfig& rc, bool n_given, std::ostream& out) {
  const GroupConfig cfg = group_from(rc, n_given);
  const Point a = Point::from_coords(parse_list(rc.a, "--a"));
  const Point b = Point::from_coords(parse_list(rc.b, "--b"));
  const Point c = multiply(a, b, cfg);
  if (rc.format == "csv") {
    std::ostringstream os;
    const std::vector<double> coords = c.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << format_double(coords[i]);
    os << '\n';
    emit(rc, os.str(), out);
  } else {
    nlohmann::json doc;
    doc["tool_version"] = kToolVersion;
    doc["config"] = config_to_json(cfg);
    doc["check_name"] = "mul";
    doc["a"] = a.coords();
    doc["b"] = b.coords();
    doc["result"] = c.coords();
    doc["summary"] = {{"law_factor", law_factor(cfg.law())}};
    doc["verdict"] = "Pass";
    doc["seed"] = nullptr;
    doc["rng_name"] = nullptr;
    emit(rc, dump(doc), out);
  }
  return kExitPass;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + " has no '='");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + " has an empty key");
    entries[key] = trim(line.substr(eq + 1));
  }
  return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Calculus and harmonicity checks on anisotropic Heisenberg groups", "carnot"};
  app.require_subcommand(1);
  OptionTable table;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--config", rc.config_file, "key = value config file; flags override it");
    table.add(sub, "n", rc.n, "half the horizontal dimension");
    table.add(sub, "L", rc.L, "comma-separated anisotropy constants L_1..L_n");
    table.add(sub, "metric", rc.metric, "orthonormal | main-assumption");
    table.add(sub, "law", rc.law, "group law convention: bch | paper");
    table.add(sub, "format", rc.format, "json | csv");
    table.add(sub, "output", rc.output, "write the report to this file instead of stdout");
    table.add(sub, "threads", rc.threads, "worker threads (results do not depend on it)");
  };

  CLI::App* htype = app.add_subcommand("check-htype", "Heisenberg-type test of the J_T map");
  add_group(htype);
  table.add(htype, "points", rc.points, "number of center vectors for the scaling identity");

  CLI::App* verify = app.add_subcommand("verify", "operator residuals on the unit gauge sphere");
  add_group(verify);
  table.add(verify, "field", rc.field, "rho | gamma | N | u2");
  table.add(verify, "operator", rc.op, "p-laplace | infinity");
  table.add(verify, "p", rc.p, "p-Laplacian exponent");
  table.add(verify, "points", rc.points, "number of sample points");
  table.add(verify, "seed", rc.seed, "sampling seed (default: CARNOT_SEED or built-in)");
  table.add(verify, "tol", rc.tol, "tolerance (default per operator)");
  table.add(verify, "floor", rc.floor, "exceedance floor for the Delta_inf N != 0 check");
  table.add(verify, "L1", rc.L1, "L_1 of the counterexample group (L_2 = 2 L_1)");

  CLI::App* omega = app.add_subcommand("omega", "Monte-Carlo estimate of omega_p or |B_r|_p");
  add_group(omega);
  table.add(omega, "p", rc.p, "exponent p");
  table.add(omega, "r", rc.r, "ball radius (1 gives omega_p)");
  table.add(omega, "samples", rc.samples, "box draws");
  table.add(omega, "seed", rc.seed, "sampling seed (default: CARNOT_SEED or built-in)");
  table.add(omega, "norm", rc.norm, "integrand gradient norm: metric | euclidean");

  CLI::App* mul = app.add_subcommand("mul", "multiply two points under the chosen law");
  add_group(mul);
  table.add(mul, "a", rc.a, "left factor x_1,...,x_2n,t");
  table.add(mul, "b", rc.b, "right factor x_1,...,x_2n,t");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!rc.config_file.empty()) {
      std::ifstream file(rc.config_file);
      if (!file) throw ConfigError("cannot read config file '" + rc.config_file + "'");
      std::stringstream buffer;
      buffer << file.rdbuf();
      const auto entries = parse_config_text(buffer.str());
      table.apply_file(sub, entries);
      table.mark_file_keys(entries);
    }
    if (!table.given(sub, "seed")) rc.seed = default_seed();
    check_format(rc);
    if (rc.threads == 0) throw ConfigError("--threads must be positive");
    const bool n_given = table.given(sub, "n");

    if (sub == htype) return cmd_check_htype(rc, n_given, out);
    if (sub == verify) return cmd_verify(rc, n_given, out);
    if (sub == omega) return cmd_omega(rc, n_given, out, err);
    return cmd_mul(rc, n_given, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace carnot::cli
