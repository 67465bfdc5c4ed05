#include "carnot/lie_structure.hpp"

#include <cmath>

#include "carnot/errors.hpp"

namespace carnot {

std::string to_string(MetricMode mode) {
  return mode == MetricMode::Orthonormal ? "orthonormal" : "main-assumption";
}

std::string to_string(LawConvention law) {
  return law == LawConvention::BchDerived ? "bch" : "paper";
}

MetricMode parse_metric_mode(const std::string& text) {
  if (text == "orthonormal") return MetricMode::Orthonormal;
  if (text == "main-assumption" || text == "main") return MetricMode::MainAssumption;
  throw ConfigError("unknown metric mode '" + text + "' (expected orthonormal|main-assumption)");
}

LawConvention parse_law_convention(const std::string& text) {
  if (text == "bch") return LawConvention::BchDerived;
  if (text == "paper") return LawConvention::PaperPrinted;
  throw ConfigError("unknown law convention '" + text + "' (expected bch|paper)");
}

GroupConfig::GroupConfig(int n, std::vector<double> L, MetricMode metric, LawConvention law)
    : n_(n), L_(std::move(L)), metric_(metric), law_(law) {
  if (n_ < 1) throw ConfigError("n must be at least 1");
  if (L_.size() != static_cast<std::size_t>(n_)) {
    throw ConfigError("expected " + std::to_string(n_) + " anisotropy constants, got " +
                      std::to_string(L_.size()));
  }
  for (double l : L_) {
    if (!std::isfinite(l) || l == 0.0) throw ConfigError("anisotropy constants must be finite and nonzero");
  }
}

double GroupConfig::horizontal_norm_sq(int j) const {
  if (metric_ == MetricMode::Orthonormal) return 1.0;
  return 2.0 * std::abs(pair_constant(j));
}

AlgebraElement AlgebraElement::zero(const GroupConfig& cfg) {
  return {Eigen::VectorXd::Zero(cfg.horizontal_dim()), 0.0};
}

AlgebraElement AlgebraElement::basis(const GroupConfig& cfg, int j) {
  if (j < 1 || j > cfg.horizontal_dim()) throw IndexError("basis index out of range");
  AlgebraElement e = zero(cfg);
  e.horizontal[j - 1] = 1.0;
  return e;
}

AlgebraElement AlgebraElement::center_generator(const GroupConfig& cfg) {
  AlgebraElement e = zero(cfg);
  e.center = 1.0;
  return e;
}

namespace {

// Coefficient of T in [X_j, X_k], 0-based.
double structure_constant(int j, int k, int n, const std::vector<double>& L) {
  if (j < n && k == j + n) return 2.0 * L[static_cast<std::size_t>(j)];
  if (k < n && j == k + n) return -2.0 * L[static_cast<std::size_t>(k)];
  return 0.0;
}

void check_dims(const AlgebraElement& u, const GroupConfig& cfg) {
  if (u.horizontal.size() != cfg.horizontal_dim()) throw DimensionError("algebra element has wrong dimension");
}

}  // namespace

AlgebraElement bracket(int j, int k, const GroupConfig& cfg) {
  const int h = cfg.horizontal_dim();
  if (j < 1 || j > h || k < 1 || k > h) throw IndexError("bracket index out of range");
  AlgebraElement out = AlgebraElement::zero(cfg);
  out.center = structure_constant(j - 1, k - 1, cfg.n(), cfg.L());
  return out;
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v, const GroupConfig& cfg) {
  check_dims(u, cfg);
  check_dims(v, cfg);
  AlgebraElement out = AlgebraElement::zero(cfg);
  const int n = cfg.n();
  for (int j = 0; j < n; ++j) {
    const double minor = u.horizontal[j] * v.horizontal[j + n] - u.horizontal[j + n] * v.horizontal[j];
    out.center += 2.0 * cfg.L()[static_cast<std::size_t>(j)] * minor;
  }
  return out;
}

double inner_product(const AlgebraElement& u, const AlgebraElement& v, const GroupConfig& cfg) {
  check_dims(u, cfg);
  check_dims(v, cfg);
  double sum = u.center * v.center;
  for (int j = 0; j < cfg.horizontal_dim(); ++j) {
    sum += cfg.horizontal_norm_sq(j) * u.horizontal[j] * v.horizontal[j];
  }
  return sum;
}

Eigen::MatrixXd jz_matrix(const GroupConfig& cfg) {
  const int h = cfg.horizontal_dim();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(h, h);
  // <T,T> = 1 in both metric modes, so T is already the unit center generator.
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      const double c = structure_constant(a, b, cfg.n(), cfg.L());
      if (c == 0.0) continue;
      J(b, a) = c / std::sqrt(cfg.horizontal_norm_sq(a) * cfg.horizontal_norm_sq(b));
    }
  }
  return J;
}

HTypeResult is_heisenberg_type(const GroupConfig& cfg, double tol) {
  const Eigen::MatrixXd J = jz_matrix(cfg);
  const auto I = Eigen::MatrixXd::Identity(J.rows(), J.cols());
  HTypeResult result;
  result.diagnostics["orthogonality"] = (J.transpose() * J - I).norm();
  result.diagnostics["square"] = (J * J + I).norm();

  bool spans = false;
  for (int j = 1; j <= cfg.n(); ++j) spans = spans || bracket(j, j + cfg.n(), cfg).center != 0.0;
  result.diagnostics["center_span"] = spans ? 0.0 : 1.0;

  result.heisenberg_type =
      spans && result.diagnostics["orthogonality"] < tol && result.diagnostics["square"] < tol;
  return result;
}

int homogeneous_dimension(const GroupConfig& cfg) { return cfg.horizontal_dim() + 2; }

}  // namespace carnot
