#pragma once

#include <Eigen/Dense>

namespace carnot {

/// Second-order forward-mode jet: value, gradient and Hessian with respect
/// to the flat coordinates (x_1, ..., x_2n, t).
///
/// Every operation builds the Hessian from symmetric pieces (outer products
/// g g^T and g h^T + h g^T), so hess stays exactly symmetric.
struct Jet2 {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;

  Jet2() = default;
  Jet2(double v, Eigen::VectorXd g, Eigen::MatrixXd h) : value(v), grad(std::move(g)), hess(std::move(h)) {}

  static Jet2 constant(double v, int dim);
  /// The coordinate function number `index` evaluated at `v`.
  static Jet2 variable(double v, int index, int dim);

  int dim() const { return static_cast<int>(grad.size()); }

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);
  Jet2& operator+=(double c);
  Jet2& operator-=(double c);
  Jet2& operator*=(double c);
  Jet2& operator/=(double c);
};

/// Chain rule for a scalar function g applied to `a`, given g(a), g'(a), g''(a).
Jet2 chain(const Jet2& a, double g0, double g1, double g2);

Jet2 operator-(const Jet2& a);
Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator+(Jet2 a, double c);
Jet2 operator+(double c, Jet2 a);
Jet2 operator-(Jet2 a, double c);
Jet2 operator-(double c, const Jet2& a);
Jet2 operator*(Jet2 a, double c);
Jet2 operator*(double c, Jet2 a);
Jet2 operator/(Jet2 a, double c);
Jet2 operator/(double c, const Jet2& a);

/// Throws DomainError for negative arguments (and for zero, where the
/// derivatives blow up).
Jet2 sqrt(const Jet2& a);
/// Real power. Non-integer exponents need a positive base.
Jet2 pow(const Jet2& a, double e);
Jet2 log(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);

}  // namespace carnot
