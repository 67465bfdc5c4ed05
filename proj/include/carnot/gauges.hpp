#pragma once

#include <memory>

#include "carnot/field.hpp"

namespace carnot {

/// Horizontal weights inside the gauge: Metric uses 2|L_j| per coordinate,
/// Unit uses 1 (the classical (|x|^4 + 16 t^2)^(1/4)).
enum class GaugeWeighting { Metric, Unit };

/// rho = ((sum_j w_j x_j^2)^2 + 16 t^2)^(1/4), singular only at the origin.
class GaugeRho final : public ScalarField {
 public:
  explicit GaugeRho(GroupConfig cfg, GaugeWeighting weighting = GaugeWeighting::Metric);

  double value(const Point& p) const override;
  Jet2 jet(const Point& p) const override;
  bool singular_at(const Point& p) const override { return p.is_origin(); }
  std::string name() const override { return "rho"; }

  const GroupConfig& config() const { return cfg_; }
  /// Weight w_j on x_j^2, 0-based.
  double weight(int j) const;

 private:
  GroupConfig cfg_;
  GaugeWeighting weighting_;
};

double rho(const Point& pt, const GroupConfig& cfg);

/// Gamma_p = C_p rho^((p-Q)/(p-1)) for p != Q and C_p log rho for p = Q.
class FundamentalSolution {
 public:
  enum class Branch { Power, Log };

  /// omega_p comes from the quadrature module. Throws ConfigError unless
  /// p > 1 and omega_p > 0.
  FundamentalSolution(double p, GroupConfig cfg, double omega_p);

  double p() const { return p_; }
  const GroupConfig& config() const { return cfg_; }
  double omega_p() const { return omega_; }
  Branch branch() const { return branch_; }
  /// (p - Q) / (p - 1); unused on the log branch.
  double exponent() const;
  double constant() const;

 private:
  double p_;
  GroupConfig cfg_;
  double omega_;
  Branch branch_;
};

/// Throws SingularPointError at the origin.
double gamma_p(const Point& pt, const FundamentalSolution& fs);

/// Gamma_p as a jet-evaluatable field.
FieldPtr gamma_field(const FundamentalSolution& fs);

/// The p-dependent profile of Gamma_p without its constant:
/// rho^((p-Q)/(p-1)) for p != Q, log rho for p = Q.
FieldPtr harmonic_profile(double p, const GroupConfig& cfg);

/// rho as a shared field.
FieldPtr rho_field(const GroupConfig& cfg, GaugeWeighting weighting = GaugeWeighting::Metric);

/// n = 2 group with L = (L1, 2 L1) used by the counterexample functions.
GroupConfig counterexample_config(double L1, MetricMode metric = MetricMode::Orthonormal,
                                  LawConvention law = LawConvention::BchDerived);

struct CounterexampleValues {
  double A = 0.0;
  double B = 0.0;
  double N = 0.0;
  double u2 = 0.0;
};

/// A, B, N and u2 = N^-4 at a point of R^5. Throws ConfigError for L1 = 0
/// and SingularPointError at the origin (N, u2 undefined there).
CounterexampleValues counterexample_fields(const Point& pt, double L1);

/// N as a field; singular at the origin.
FieldPtr counterexample_norm(double L1);
/// N^-4 as a field (the multiplicative constant is omitted).
FieldPtr counterexample_u2(double L1);

}  // namespace carnot
