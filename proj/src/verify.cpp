#include "carnot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carnot/errors.hpp"
#include "carnot/fd_oracle.hpp"
#include "carnot/parallel.hpp"
#include "carnot/quadrature.hpp"
#include "carnot/rng.hpp"

namespace carnot {

std::string to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

std::string to_string(CheckSemantics s) {
  switch (s) {
    case CheckSemantics::BelowTolerance:
      return "below-tolerance";
    case CheckSemantics::AboveFloor:
      return "above-floor";
    case CheckSemantics::Composite:
      break;
  }
  return "composite";
}

Summary summarize(const std::vector<SampleResidual>& points) {
  Summary s;
  s.count = points.size();
  double total = 0.0;
  for (const SampleResidual& r : points) {
    const double a = std::abs(r.residual);
    if (std::isnan(a) || a > s.max_abs) s.max_abs = a;  // a NaN sticks and fails either semantics
    total += a;
  }
  s.mean_abs = s.count == 0 ? 0.0 : total / static_cast<double>(s.count);
  return s;
}

Verdict judge(const Summary& summary, double tolerance, CheckSemantics semantics) {
  if (summary.count == 0) return Verdict::Fail;
  switch (semantics) {
    case CheckSemantics::BelowTolerance:
      return summary.max_abs < tolerance ? Verdict::Pass : Verdict::Fail;
    case CheckSemantics::AboveFloor:
      return summary.max_abs > tolerance ? Verdict::Pass : Verdict::Fail;
    case CheckSemantics::Composite:
      break;
  }
  throw ConfigError("composite checks carry their own verdict rule");
}

std::vector<Point> sample_unit_gauge(const GroupConfig& cfg, const ScalarField& gauge, std::size_t count,
                                     std::uint64_t seed, SampleNormalization normalization) {
  const GaugeRho shell_gauge(cfg);
  const std::vector<double> box = ball_bounding_box(2.0, cfg);
  Xoshiro256 rng(seed);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    Point p = Point::origin(cfg);
    for (int j = 0; j < cfg.horizontal_dim(); ++j) p.x[j] = rng.uniform(-1.0, 1.0) * box[static_cast<std::size_t>(j)];
    p.t = rng.uniform(-1.0, 1.0) * box.back();
    const double r = shell_gauge.value(p);
    if (r < 0.5 || r >= 2.0) continue;
    if (normalization == SampleNormalization::UnitGauge) p = dilate(1.0 / gauge.value(p), p);
    out.push_back(std::move(p));
  }
  return out;
}

ResidualReport verify_harmonic(const FieldPtr& f, const OperatorSpec& spec, const GroupConfig& cfg, std::size_t count,
                               std::uint64_t seed, double tol, const VerifyOptions& options) {
  if (count == 0) throw ConfigError("point count must be positive");
  const FieldPtr gauge = options.gauge ? options.gauge : rho_field(cfg);
  const std::vector<Point> samples = sample_unit_gauge(cfg, *gauge, count, seed, options.normalization);

  struct Slot {
    SampleResidual residual;
    bool degenerate = false;
  };
  std::vector<Slot> slots(samples.size());
  parallel_for(samples.size(), options.threads, [&](std::size_t i) {
    const Point& p = samples[i];
    try {
      const Jet2 jet = eval_jet(*f, p);
      const HorizontalDerivatives d = horizontal_derivatives(jet, p, cfg);
      double r = apply_operator(d, spec, cfg);
      if (options.normalization == SampleNormalization::Raw) r *= gauge->value(p);
      slots[i].residual = {p.coords(), r, jet.value};
    } catch (const DegeneratePointError&) {
      slots[i].degenerate = true;
    }
  });

  ResidualReport report{.check_name = "harmonic:" + f->name(), .config = cfg, .operator_spec = spec.describe()};
  std::size_t degenerate = 0;
  for (Slot& s : slots) {
    if (s.degenerate) {
      ++degenerate;
    } else {
      report.points.push_back(std::move(s.residual));
    }
  }
  report.summary = summarize(report.points);
  report.tolerance = tol;
  report.semantics = options.semantics;
  report.verdict = judge(report.summary, tol, options.semantics);
  report.seed = seed;
  report.rng_name = std::string(Xoshiro256::kName);
  report.diagnostics["excluded_degenerate"] = static_cast<double>(degenerate);
  report.notes.push_back(std::string("samples normalized by gauge '") + gauge->name() + "'" +
                         (options.normalization == SampleNormalization::Raw ? " (raw mode, residual * gauge)" : ""));
  return report;
}

CounterexampleReports verify_counterexample(double L1, std::size_t count, std::uint64_t seed,
                                            const CounterexampleOptions& options) {
  const GroupConfig cfg = counterexample_config(L1, MetricMode::Orthonormal);
  const FieldPtr N = counterexample_norm(L1);

  VerifyOptions below{.gauge = N, .semantics = CheckSemantics::BelowTolerance, .threads = options.threads};
  ResidualReport h2 = verify_harmonic(counterexample_u2(L1), OperatorSpec::p_laplace(2.0), cfg, count, seed,
                                      options.tol, below);
  h2.check_name = "counterexample:laplace-u2";

  VerifyOptions above = below;
  above.semantics = CheckSemantics::AboveFloor;
  ResidualReport hinf =
      verify_harmonic(N, OperatorSpec::infinity_laplace(), cfg, count, seed, options.floor, above);
  hinf.check_name = "counterexample:infinity-laplace-N";
  hinf.diagnostics["floor"] = options.floor;
  hinf.notes.push_back("floor is the calibrated lower bound for max |Delta_inf N| on the unit N-sphere");
  return {std::move(h2), std::move(hinf)};
}

FieldPtr random_smooth_field(int dim, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  auto draw = [&] {
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (double& c : v) c = rng.uniform(-1.0, 1.0);
    return v;
  };
  const std::vector<double> a = draw(), b = draw(), c = draw(), d = draw();
  const double k = rng.uniform(0.5, 2.0);
  return make_field("random-smooth", [=](const auto& z) {
    using std::exp;
    using std::sin;
    auto form = [&z](const std::vector<double>& w) {
      auto s = z[0] * w[0];
      for (std::size_t i = 1; i < w.size(); ++i) s += z[i] * w[i];
      return s;
    };
    const auto bz = form(b);
    return exp(0.3 * form(a)) + bz * bz * form(c) + k * sin(form(d));
  });
}

ResidualReport verify_left_invariance(const GroupConfig& cfg, std::size_t count, std::uint64_t seed, double tol) {
  if (count == 0) throw ConfigError("count must be positive");
  Xoshiro256 rng(seed);
  auto random_point = [&] {
    Point p = Point::origin(cfg);
    for (int j = 0; j < cfg.horizontal_dim(); ++j) p.x[j] = rng.uniform(-1.0, 1.0);
    p.t = rng.uniform(-1.0, 1.0);
    return p;
  };

  ResidualReport report{.check_name = "left-invariance", .config = cfg, .operator_spec = "X_j"};
  for (std::size_t k = 0; k < count; ++k) {
    const FieldPtr f = random_smooth_field(cfg.dim(), rng());
    const Point p = random_point();
    const Point q = random_point();
    const FieldPtr translated = left_translate(p, f, cfg);
    const Point pq = multiply(p, q, cfg);

    const Eigen::VectorXd lhs = horizontal_first(eval_jet(*translated, q), q, cfg);
    const Eigen::VectorXd rhs = horizontal_first(eval_jet(*f, pq), pq, cfg);
    double worst = 0.0;
    for (int j = 0; j < cfg.horizontal_dim(); ++j) {
      worst = std::max(worst, std::abs(lhs[j] - rhs[j]) / std::max(1.0, std::abs(rhs[j])));
    }
    std::vector<double> coords = p.coords();
    const std::vector<double> qc = q.coords();
    coords.insert(coords.end(), qc.begin(), qc.end());
    report.points.push_back({std::move(coords), worst, f->value(pq)});
  }
  report.summary = summarize(report.points);
  report.tolerance = tol;
  report.verdict = judge(report.summary, tol, CheckSemantics::BelowTolerance);
  report.seed = seed;
  report.rng_name = std::string(Xoshiro256::kName);
  report.diagnostics["law_factor"] = law_factor(cfg.law());
  report.notes.push_back("point coordinates are [p..., q...]; law convention " + to_string(cfg.law()));
  return report;
}

ResidualReport verify_htype_transition(const std::vector<double>& L, std::size_t count) {
  const int n = static_cast<int>(L.size());
  const GroupConfig main_cfg(n, L, MetricMode::MainAssumption);
  const GroupConfig ortho_cfg = main_cfg.with_metric(MetricMode::Orthonormal);

  ResidualReport report{.check_name = "htype-transition", .config = main_cfg, .operator_spec = "J_z"};
  report.semantics = CheckSemantics::Composite;
  report.tolerance = kHTypeTolerance;

  const HTypeResult main_result = is_heisenberg_type(main_cfg);
  const HTypeResult ortho_result = is_heisenberg_type(ortho_cfg);
  for (const auto& [key, value] : main_result.diagnostics) report.diagnostics["main-assumption:" + key] = value;
  for (const auto& [key, value] : ortho_result.diagnostics) report.diagnostics["orthonormal:" + key] = value;
  report.diagnostics["main-assumption:htype"] = main_result.heisenberg_type ? 1.0 : 0.0;
  report.diagnostics["orthonormal:htype"] = ortho_result.heisenberg_type ? 1.0 : 0.0;

  bool unit_pairs = true;
  for (double l : L) unit_pairs = unit_pairs && std::abs(std::abs(2.0 * l) - 1.0) < kHTypeTolerance;
  report.diagnostics["orthonormal:expected"] = unit_pairs ? 1.0 : 0.0;

  // Rows: [mode (0 = main-assumption, 1 = orthonormal), |z|]; residual is
  // |J_z^2 + |z|^2 Id|_F / |z|^2, value the orthogonality residual of J_T.
  Xoshiro256 rng(0x5eedULL + L.size());
  const std::size_t rows = std::max<std::size_t>(count, 1);
  for (int mode = 0; mode < 2; ++mode) {
    const GroupConfig& cfg = mode == 0 ? main_cfg : ortho_cfg;
    const Eigen::MatrixXd J = jz_matrix(cfg);
    const auto I = Eigen::MatrixXd::Identity(J.rows(), J.cols());
    const double orth = (mode == 0 ? main_result : ortho_result).diagnostics.at("orthogonality");
    for (std::size_t k = 0; k < rows; ++k) {
      const double z = rng.uniform(0.1, 3.0);
      const Eigen::MatrixXd Jz = z * J;
      const double residual = (Jz * Jz + z * z * I).norm() / (z * z);
      report.points.push_back({{static_cast<double>(mode), z}, residual, orth});
    }
  }
  report.summary = summarize(report.points);
  report.verdict = main_result.heisenberg_type && ortho_result.heisenberg_type == unit_pairs ? Verdict::Pass
                                                                                             : Verdict::Fail;
  report.notes.push_back("Pass iff the main-assumption metric is H-type and the orthonormal verdict matches the "
                         "|2 L_j| = 1 criterion");
  if (std::any_of(L.begin(), L.end(), [](double l) { return l < 0.0; })) {
    report.notes.push_back("negative anisotropy constants: J_T computed from the bracket definition with signs kept");
  }
  return report;
}

Verdict recheck_with_fd(const ResidualReport& report, const ScalarField& f, const OperatorSpec& spec,
                        const GroupConfig& cfg, std::size_t k, double fd_tol) {
  // The largest jet residuals decide both kinds of verdict, so recheck those.
  std::vector<std::size_t> order(report.points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(report.points[a].residual) > std::abs(report.points[b].residual);
  });
  order.resize(std::min(k, order.size()));

  std::vector<SampleResidual> rechecked;
  for (std::size_t i : order) {
    const Point p = Point::from_coords(report.points[i].coords);
    const Jet2 jet = fd_oracle(f, p);
    rechecked.push_back({report.points[i].coords, apply_operator(horizontal_derivatives(jet, p, cfg), spec, cfg),
                         jet.value});
  }
  const Summary s = summarize(rechecked);
  if (report.semantics == CheckSemantics::AboveFloor) return judge(s, report.tolerance, report.semantics);
  return judge(s, std::max(report.tolerance, fd_tol), CheckSemantics::BelowTolerance);
}

}  // namespace carnot
