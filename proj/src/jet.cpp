#include "carnot/jet.hpp"

#include <cmath>

#include "carnot/errors.hpp"

namespace carnot {

namespace {

// 0.5 * (h_ab + h_ba) is the same double for both entries.
Eigen::MatrixXd symmetric_part(const Eigen::MatrixXd& h) { return 0.5 * (h + h.transpose()); }

}  // namespace

Jet2 Jet2::constant(double v, int dim) {
  return {v, Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)};
}

Jet2 Jet2::variable(double v, int index, int dim) {
  Jet2 j = constant(v, dim);
  j.grad[index] = 1.0;
  return j;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  value += o.value;
  grad += o.grad;
  hess += o.hess;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  value -= o.value;
  grad -= o.grad;
  hess -= o.hess;
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
  const Eigen::MatrixXd cross = grad * o.grad.transpose();
  hess = symmetric_part(o.value * hess + value * o.hess + cross + cross.transpose());
  grad = o.value * grad + value * o.grad;
  value *= o.value;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& o) { return *this *= (1.0 / o); }

Jet2& Jet2::operator+=(double c) {
  value += c;
  return *this;
}

Jet2& Jet2::operator-=(double c) {
  value -= c;
  return *this;
}

Jet2& Jet2::operator*=(double c) {
  value *= c;
  grad *= c;
  hess *= c;
  return *this;
}

Jet2& Jet2::operator/=(double c) { return *this *= (1.0 / c); }

Jet2 chain(const Jet2& a, double g0, double g1, double g2) {
  return {g0, g1 * a.grad, symmetric_part(g1 * a.hess + g2 * (a.grad * a.grad.transpose()))};
}

Jet2 operator-(const Jet2& a) { return {-a.value, -a.grad, -a.hess}; }
Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 out = a;
  return out *= b;
}
Jet2 operator/(const Jet2& a, const Jet2& b) { return a * (1.0 / b); }
Jet2 operator+(Jet2 a, double c) { return a += c; }
Jet2 operator+(double c, Jet2 a) { return a += c; }
Jet2 operator-(Jet2 a, double c) { return a -= c; }
Jet2 operator-(double c, const Jet2& a) { return (-a) += c; }
Jet2 operator*(Jet2 a, double c) { return a *= c; }
Jet2 operator*(double c, Jet2 a) { return a *= c; }
Jet2 operator/(Jet2 a, double c) { return a /= c; }
Jet2 operator/(double c, const Jet2& a) {
  if (a.value == 0.0) throw DomainError("division by a jet with zero value");
  const double inv = 1.0 / a.value;
  return chain(a, c * inv, -c * inv * inv, 2.0 * c * inv * inv * inv);
}

Jet2 sqrt(const Jet2& a) {
  if (!(a.value > 0.0)) throw DomainError("sqrt of a non-positive jet");
  const double s = std::sqrt(a.value);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.value));
}

Jet2 pow(const Jet2& a, double e) {
  if (e == 0.0) return Jet2::constant(1.0, a.dim());
  if (e == 1.0) return a;
  if (e == 2.0) return a * a;
  const bool integral = std::floor(e) == e;
  if (a.value < 0.0 && !integral) throw DomainError("non-integer power of a negative jet");
  if (a.value == 0.0 && e < 2.0) throw DomainError("power with exponent < 2 of a zero jet");
  const double v = a.value;
  const double p2 = std::pow(v, e - 2.0);
  return chain(a, p2 * v * v, e * p2 * v, e * (e - 1.0) * p2);
}

Jet2 log(const Jet2& a) {
  if (!(a.value > 0.0)) throw DomainError("log of a non-positive jet");
  const double inv = 1.0 / a.value;
  return chain(a, std::log(a.value), inv, -inv * inv);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return chain(a, e, e, e);
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value);
  return chain(a, s, std::cos(a.value), -s);
}

Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.value);
  return chain(a, c, -std::sin(a.value), -c);
}

}  // namespace carnot
