#include "carnot/field.hpp"

#include "carnot/errors.hpp"

namespace carnot {

Jet2 eval_jet(const ScalarField& f, const Point& p) {
  if (f.singular_at(p)) throw SingularPointError("jet of '" + f.name() + "' requested at a singular point");
  return f.jet(p);
}

namespace {

class LeftTranslated final : public ScalarField {
 public:
  LeftTranslated(Point p, FieldPtr f, GroupConfig cfg)
      : p_(std::move(p)), f_(std::move(f)), cfg_(std::move(cfg)), jac_(left_translation_jacobian(p_, cfg_)) {}

  double value(const Point& q) const override { return f_->value(multiply(p_, q, cfg_)); }

  Jet2 jet(const Point& q) const override {
    // The translation is affine in q, so the chain rule has no curvature term.
    const Jet2 inner = eval_jet(*f_, multiply(p_, q, cfg_));
    const Eigen::MatrixXd h = jac_.transpose() * inner.hess * jac_;
    return {inner.value, jac_.transpose() * inner.grad, 0.5 * (h + h.transpose())};
  }

  bool singular_at(const Point& q) const override { return f_->singular_at(multiply(p_, q, cfg_)); }
  std::string name() const override { return f_->name() + " o L_p"; }

 private:
  Point p_;
  FieldPtr f_;
  GroupConfig cfg_;
  Eigen::MatrixXd jac_;
};

void check_index(int j, const GroupConfig& cfg) {
  if (j < 1 || j > cfg.horizontal_dim()) throw IndexError("vector field index out of range");
}

}  // namespace

FieldPtr left_translate(const Point& p, FieldPtr f, const GroupConfig& cfg) {
  check_point(p, cfg);
  return std::make_shared<LeftTranslated>(p, std::move(f), cfg);
}

double frame_coefficient(int j, const Point& p, const GroupConfig& cfg) {
  const int n = cfg.n();
  if (j < n) return -cfg.L()[static_cast<std::size_t>(j)] * p.x[j + n];
  return cfg.L()[static_cast<std::size_t>(j - n)] * p.x[j - n];
}

Eigen::VectorXd horizontal_first(const Jet2& jet, const Point& p, const GroupConfig& cfg) {
  check_point(p, cfg);
  const int h = cfg.horizontal_dim();
  const double ft = jet.grad[h];
  Eigen::VectorXd first(h);
  for (int j = 0; j < h; ++j) first[j] = jet.grad[j] + frame_coefficient(j, p, cfg) * ft;
  return first;
}

HorizontalDerivatives horizontal_derivatives(const Jet2& jet, const Point& p, const GroupConfig& cfg) {
  check_point(p, cfg);
  const int n = cfg.n();
  const int h = cfg.horizontal_dim();
  const int t = h;

  Eigen::VectorXd c(h);
  for (int j = 0; j < h; ++j) c[j] = frame_coefficient(j, p, cfg);

  HorizontalDerivatives out;
  out.value = jet.value;
  out.first = horizontal_first(jet, p, cfg);
  out.second.resize(h, h);

  const double ft = jet.grad[t];
  const double ftt = jet.hess(t, t);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      // X_i (f_j + c_j f_t) = f_ij + (d_i c_j) f_t + c_j f_it + c_i (f_tj + c_j f_tt)
      double dc = 0.0;
      if (j < n && i == j + n) dc = -cfg.L()[static_cast<std::size_t>(j)];
      if (j >= n && i == j - n) dc = cfg.L()[static_cast<std::size_t>(j - n)];
      out.second(i, j) = jet.hess(i, j) + dc * ft + c[j] * jet.hess(i, t) + c[i] * (jet.hess(t, j) + c[j] * ftt);
    }
  }
  return out;
}

double apply_X(int j, const ScalarField& f, const Point& p, const GroupConfig& cfg) {
  check_index(j, cfg);
  return horizontal_first(eval_jet(f, p), p, cfg)[j - 1];
}

double apply_XX(int i, int j, const ScalarField& f, const Point& p, const GroupConfig& cfg) {
  check_index(i, cfg);
  check_index(j, cfg);
  return horizontal_derivatives(eval_jet(f, p), p, cfg).second(i - 1, j - 1);
}

}  // namespace carnot
