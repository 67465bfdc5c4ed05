#include "carnot/gauges.hpp"

#include <cmath>

#include "carnot/errors.hpp"

namespace carnot {

GaugeRho::GaugeRho(GroupConfig cfg, GaugeWeighting weighting) : cfg_(std::move(cfg)), weighting_(weighting) {}

double GaugeRho::weight(int j) const {
  return weighting_ == GaugeWeighting::Unit ? 1.0 : 2.0 * std::abs(cfg_.pair_constant(j));
}

double GaugeRho::value(const Point& p) const {
  check_point(p, cfg_);
  double s = 0.0;
  for (int j = 0; j < cfg_.horizontal_dim(); ++j) s += weight(j) * p.x[j] * p.x[j];
  return std::pow(s * s + 16.0 * p.t * p.t, 0.25);
}

Jet2 GaugeRho::jet(const Point& p) const {
  check_point(p, cfg_);
  const int d = cfg_.dim();
  const int h = cfg_.horizontal_dim();
  Jet2 s = Jet2::constant(0.0, d);
  for (int j = 0; j < h; ++j) {
    const Jet2 xj = Jet2::variable(p.x[j], j, d);
    s += weight(j) * (xj * xj);
  }
  const Jet2 t = Jet2::variable(p.t, h, d);
  return pow(s * s + 16.0 * (t * t), 0.25);
}

double rho(const Point& pt, const GroupConfig& cfg) { return GaugeRho(cfg).value(pt); }

FieldPtr rho_field(const GroupConfig& cfg, GaugeWeighting weighting) {
  return std::make_shared<GaugeRho>(cfg, weighting);
}

FundamentalSolution::FundamentalSolution(double p, GroupConfig cfg, double omega_p)
    : p_(p), cfg_(std::move(cfg)), omega_(omega_p) {
  if (!(p_ > 1.0) || !std::isfinite(p_)) throw ConfigError("fundamental solution needs 1 < p < inf");
  if (!(omega_ > 0.0) || !std::isfinite(omega_)) throw ConfigError("omega_p must be positive");
  branch_ = p_ == static_cast<double>(homogeneous_dimension(cfg_)) ? Branch::Log : Branch::Power;
}

double FundamentalSolution::exponent() const {
  const double q = homogeneous_dimension(cfg_);
  return (p_ - q) / (p_ - 1.0);
}

double FundamentalSolution::constant() const {
  const double q = homogeneous_dimension(cfg_);
  const double base = std::pow(q * omega_, -1.0 / (p_ - 1.0));
  return branch_ == Branch::Log ? base : (p_ - 1.0) / (p_ - q) * base;
}

namespace {

class ProfileField final : public ScalarField {
 public:
  ProfileField(double p, const GroupConfig& cfg, double scale)
      : rho_(cfg), scale_(scale), log_branch_(p == static_cast<double>(homogeneous_dimension(cfg))) {
    const double q = homogeneous_dimension(cfg);
    exponent_ = (p - q) / (p - 1.0);
  }

  double value(const Point& p) const override {
    const double r = rho_.value(p);
    return scale_ * (log_branch_ ? std::log(r) : std::pow(r, exponent_));
  }

  Jet2 jet(const Point& p) const override {
    const Jet2 r = rho_.jet(p);
    return scale_ * (log_branch_ ? log(r) : pow(r, exponent_));
  }

  bool singular_at(const Point& p) const override { return p.is_origin(); }
  std::string name() const override { return scale_ == 1.0 ? "gamma-profile" : "gamma"; }

 private:
  GaugeRho rho_;
  double scale_;
  bool log_branch_;
  double exponent_ = 0.0;
};

}  // namespace

double gamma_p(const Point& pt, const FundamentalSolution& fs) {
  if (pt.is_origin()) throw SingularPointError("Gamma_p is singular at the origin");
  return ProfileField(fs.p(), fs.config(), fs.constant()).value(pt);
}

FieldPtr gamma_field(const FundamentalSolution& fs) {
  return std::make_shared<ProfileField>(fs.p(), fs.config(), fs.constant());
}

FieldPtr harmonic_profile(double p, const GroupConfig& cfg) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("profile needs 1 < p < inf");
  return std::make_shared<ProfileField>(p, cfg, 1.0);
}

GroupConfig counterexample_config(double L1, MetricMode metric, LawConvention law) {
  return GroupConfig(2, {L1, 2.0 * L1}, metric, law);
}

namespace {

void check_L1(double L1) {
  if (!(std::abs(L1) > 0.0) || !std::isfinite(L1)) throw ConfigError("L1 must be finite and nonzero");
}

// Generic in the scalar type so the same expression serves values and jets.
template <typename S>
struct CounterexampleExpr {
  S A, B, N;
};

template <typename S>
CounterexampleExpr<S> counterexample_expr(const std::vector<S>& c, double L1) {
  using std::pow;
  using std::sqrt;
  const double a = std::abs(L1);
  const S B = a * (0.5 * (c[0] * c[0]) + c[1] * c[1] + 0.5 * (c[2] * c[2]) + c[3] * c[3]);
  const S A = a * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
  const S q = B * B + c[4] * c[4];
  const S root = sqrt(q);
  const S N = pow(q, 0.125) * pow(A - B + root, 0.375) / pow(B + root, 0.125);
  return {A, B, N};
}

bool origin5(const Point& p) { return p.is_origin(); }

void check_r5(const Point& p) {
  if (p.x.size() != 4) throw DimensionError("counterexample functions live on R^5");
}

}  // namespace

CounterexampleValues counterexample_fields(const Point& pt, double L1) {
  check_L1(L1);
  check_r5(pt);
  if (pt.is_origin()) throw SingularPointError("N is singular at the origin");
  const auto e = counterexample_expr(pt.coords(), L1);
  return {e.A, e.B, e.N, std::pow(e.N, -4.0)};
}

FieldPtr counterexample_norm(double L1) {
  check_L1(L1);
  return make_field(
      "N",
      [L1](const auto& c) {
        if (c.size() != 5) throw DimensionError("counterexample functions live on R^5");
        return counterexample_expr(c, L1).N;
      },
      origin5);
}

FieldPtr counterexample_u2(double L1) {
  check_L1(L1);
  return make_field(
      "u2",
      [L1](const auto& c) {
        using std::pow;
        if (c.size() != 5) throw DimensionError("counterexample functions live on R^5");
        return pow(counterexample_expr(c, L1).N, -4.0);
      },
      origin5);
}

}  // namespace carnot
