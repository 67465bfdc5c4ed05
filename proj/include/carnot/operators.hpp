#pragma once

#include <string>
#include <vector>

#include "carnot/field.hpp"

namespace carnot {

struct HorizontalGradient {
  Eigen::VectorXd components;
};

struct SymmetrizedHessian {
  Eigen::MatrixXd m;
};

/// Either the p-Laplacian (1 < p < inf) or the infinity-Laplacian.
class OperatorSpec {
 public:
  enum class Kind { PLaplace, InfinityLaplace };

  /// Throws ConfigError unless 1 < p < inf.
  static OperatorSpec p_laplace(double p);
  static OperatorSpec infinity_laplace() { return OperatorSpec(Kind::InfinityLaplace, 0.0); }

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  std::string describe() const;

 private:
  OperatorSpec(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

HorizontalGradient horizontal_gradient(const ScalarField& f, const Point& pt, const GroupConfig& cfg);
SymmetrizedHessian symmetrized_hessian(const ScalarField& f, const Point& pt, const GroupConfig& cfg);

/// Metric gradient norm: sqrt(sum_j (X_j f)^2 / <X_j, X_j>).
double m_factor(const ScalarField& f, const Point& pt, const GroupConfig& cfg);

double p_laplacian(const ScalarField& f, const Point& pt, const OperatorSpec& spec, const GroupConfig& cfg);
double infinity_laplacian(const ScalarField& f, const Point& pt, const GroupConfig& cfg);

/// Dispatches on spec.kind().
double apply_operator(const ScalarField& f, const Point& pt, const OperatorSpec& spec, const GroupConfig& cfg);

/// Same operators evaluated from precomputed horizontal derivatives, so a
/// jet from any source (forward mode or finite differences) can be fed in.
double m_factor(const HorizontalDerivatives& d, const GroupConfig& cfg);
double p_laplacian(const HorizontalDerivatives& d, double p, const GroupConfig& cfg);
double infinity_laplacian(const HorizontalDerivatives& d, const GroupConfig& cfg);
double apply_operator(const HorizontalDerivatives& d, const OperatorSpec& spec, const GroupConfig& cfg);

/// div F for F = sum_i g_i X_i. Only first derivatives of the components are used.
double divergence(const std::vector<FieldPtr>& components, const Point& pt, const GroupConfig& cfg);

}  // namespace carnot
