#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "carnot/group.hpp"
#include "carnot/jet.hpp"

namespace carnot {

/// A smooth function on the group away from a declared singular set.
///
/// Implementations must be safe to evaluate from several threads at once.
class ScalarField {
 public:
  virtual ~ScalarField() = default;

  virtual double value(const Point& p) const = 0;

  /// Value, gradient and Hessian at p. Callers go through eval_jet, which
  /// rejects singular points first.
  virtual Jet2 jet(const Point& p) const = 0;

  virtual bool singular_at(const Point& /*p*/) const { return false; }

  virtual std::string name() const { return "field"; }
};

using FieldPtr = std::shared_ptr<const ScalarField>;

/// Throws SingularPointError inside the singular set; DomainError from
/// primitives propagates unchanged.
Jet2 eval_jet(const ScalarField& f, const Point& p);

namespace detail {

template <typename Expr>
class ExpressionField final : public ScalarField {
 public:
  ExpressionField(std::string name, Expr expr, std::function<bool(const Point&)> singular)
      : name_(std::move(name)), expr_(std::move(expr)), singular_(std::move(singular)) {}

  double value(const Point& p) const override {
    const std::vector<double> c = p.coords();
    return expr_(c);
  }

  Jet2 jet(const Point& p) const override {
    const int d = p.dim();
    std::vector<Jet2> c;
    c.reserve(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) c.push_back(Jet2::variable(p.coord(a), a, d));
    return expr_(c);
  }

  bool singular_at(const Point& p) const override { return singular_ && singular_(p); }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Expr expr_;
  std::function<bool(const Point&)> singular_;
};

}  // namespace detail

/// Wraps a generic callable `expr(const std::vector<S>& coords) -> S` that
/// works for S = double and S = Jet2 (write it with unqualified sqrt/pow/log
/// after `using std::sqrt;` etc.). coords follows the flat layout [x..., t].
template <typename Expr>
FieldPtr make_field(std::string name, Expr expr, std::function<bool(const Point&)> singular = {}) {
  return std::make_shared<detail::ExpressionField<Expr>>(std::move(name), std::move(expr), std::move(singular));
}

/// q -> f(p * q).
FieldPtr left_translate(const Point& p, FieldPtr f, const GroupConfig& cfg);

/// Coefficient c_j(x) in X_j = d/dx_j + c_j(x) d/dt, 0-based j.
double frame_coefficient(int j, const Point& p, const GroupConfig& cfg);

/// X_j f and X_i X_j f (unsymmetrized) at one point, read from a single jet.
struct HorizontalDerivatives {
  Eigen::VectorXd first;   // (X_1 f, ..., X_2n f)
  Eigen::MatrixXd second;  // (i, j) -> X_i X_j f
  double value = 0.0;
};

HorizontalDerivatives horizontal_derivatives(const Jet2& jet, const Point& p, const GroupConfig& cfg);

/// First-order part only; Hessian entries of the jet are not read.
Eigen::VectorXd horizontal_first(const Jet2& jet, const Point& p, const GroupConfig& cfg);

/// X_j f(p), 1-based j.
double apply_X(int j, const ScalarField& f, const Point& p, const GroupConfig& cfg);

/// X_i (X_j f)(p), 1-based indices.
double apply_XX(int i, int j, const ScalarField& f, const Point& p, const GroupConfig& cfg);

}  // namespace carnot
