#include "carnot/operators.hpp"

#include <cmath>
#include <sstream>

#include "carnot/errors.hpp"

namespace carnot {

OperatorSpec OperatorSpec::p_laplace(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("p-Laplacian exponent must satisfy 1 < p < inf");
  return OperatorSpec(Kind::PLaplace, p);
}

std::string OperatorSpec::describe() const {
  if (kind_ == Kind::InfinityLaplace) return "infinity-laplace";
  std::ostringstream os;
  os.precision(17);
  os << "p-laplace(p=" << p_ << ")";
  return os.str();
}

namespace {

Eigen::VectorXd weights(const GroupConfig& cfg) {
  Eigen::VectorXd w(cfg.horizontal_dim());
  for (int j = 0; j < w.size(); ++j) w[j] = cfg.operator_weight(j);
  return w;
}

HorizontalDerivatives derivatives(const ScalarField& f, const Point& pt, const GroupConfig& cfg) {
  return horizontal_derivatives(eval_jet(f, pt), pt, cfg);
}

// sum_ij w_i w_j X_iX_j f X_i f X_j f
double weighted_quadratic_form(const HorizontalDerivatives& d, const Eigen::VectorXd& w) {
  const Eigen::VectorXd g = w.cwiseProduct(d.first);
  return g.dot(d.second * g);
}

double guarded_power(double m, double e) {
  if (m == 0.0) {
    if (e < 0.0) throw DegeneratePointError("negative power of a vanishing gradient norm");
    return e == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(m, e);
}

}  // namespace

HorizontalGradient horizontal_gradient(const ScalarField& f, const Point& pt, const GroupConfig& cfg) {
  return {horizontal_first(eval_jet(f, pt), pt, cfg)};
}

SymmetrizedHessian symmetrized_hessian(const ScalarField& f, const Point& pt, const GroupConfig& cfg) {
  const HorizontalDerivatives d = derivatives(f, pt, cfg);
  return {0.5 * (d.second + d.second.transpose())};
}

double m_factor(const HorizontalDerivatives& d, const GroupConfig& cfg) {
  return std::sqrt(weights(cfg).dot(d.first.cwiseAbs2()));
}

double p_laplacian(const HorizontalDerivatives& d, double p, const GroupConfig& cfg) {
  const Eigen::VectorXd w = weights(cfg);
  const double m = m_factor(d, cfg);
  const double trace = w.dot(d.second.diagonal());
  double result = guarded_power(m, p - 2.0) * trace;
  if (p != 2.0) result += (p - 2.0) * guarded_power(m, p - 4.0) * weighted_quadratic_form(d, w);
  return result;
}

double infinity_laplacian(const HorizontalDerivatives& d, const GroupConfig& cfg) {
  return weighted_quadratic_form(d, weights(cfg));
}

double apply_operator(const HorizontalDerivatives& d, const OperatorSpec& spec, const GroupConfig& cfg) {
  if (spec.kind() == OperatorSpec::Kind::InfinityLaplace) return infinity_laplacian(d, cfg);
  return p_laplacian(d, spec.p(), cfg);
}

double m_factor(const ScalarField& f, const Point& pt, const GroupConfig& cfg) {
  return m_factor(derivatives(f, pt, cfg), cfg);
}

double p_laplacian(const ScalarField& f, const Point& pt, const OperatorSpec& spec, const GroupConfig& cfg) {
  if (spec.kind() != OperatorSpec::Kind::PLaplace) throw ConfigError("p_laplacian needs a PLaplace spec");
  return p_laplacian(derivatives(f, pt, cfg), spec.p(), cfg);
}

double infinity_laplacian(const ScalarField& f, const Point& pt, const GroupConfig& cfg) {
  return infinity_laplacian(derivatives(f, pt, cfg), cfg);
}

double apply_operator(const ScalarField& f, const Point& pt, const OperatorSpec& spec, const GroupConfig& cfg) {
  return apply_operator(derivatives(f, pt, cfg), spec, cfg);
}

double divergence(const std::vector<FieldPtr>& components, const Point& pt, const GroupConfig& cfg) {
  if (components.size() != static_cast<std::size_t>(cfg.horizontal_dim())) {
    throw DimensionError("divergence needs one component per horizontal direction");
  }
  double sum = 0.0;
  for (int i = 0; i < cfg.horizontal_dim(); ++i) {
    const Eigen::VectorXd first = horizontal_first(eval_jet(*components[static_cast<std::size_t>(i)], pt), pt, cfg);
    sum += std::sqrt(cfg.operator_weight(i)) * first[i];
  }
  return sum;
}

}  // namespace carnot
