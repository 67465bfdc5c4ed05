#include "carnot/group.hpp"

#include <string>

#include "carnot/errors.hpp"

namespace carnot {

Point Point::from_coords(std::span<const double> coords) {
  if (coords.size() < 3 || coords.size() % 2 == 0) {
    throw DimensionError("point needs 2n+1 coordinates, got " + std::to_string(coords.size()));
  }
  const auto h = static_cast<Eigen::Index>(coords.size() - 1);
  Eigen::VectorXd x(h);
  for (Eigen::Index i = 0; i < h; ++i) x[i] = coords[static_cast<std::size_t>(i)];
  return {std::move(x), coords.back()};
}

std::vector<double> Point::coords() const {
  std::vector<double> out(x.data(), x.data() + x.size());
  out.push_back(t);
  return out;
}

double law_factor(LawConvention law) { return law == LawConvention::BchDerived ? 1.0 : 2.0; }

void check_point(const Point& p, const GroupConfig& cfg) {
  if (p.x.size() != cfg.horizontal_dim()) {
    throw DimensionError("point has " + std::to_string(p.x.size()) + " horizontal coordinates, config expects " +
                         std::to_string(cfg.horizontal_dim()));
  }
}

Point multiply(const Point& p, const Point& q, const GroupConfig& cfg) {
  check_point(p, cfg);
  check_point(q, cfg);
  const int n = cfg.n();
  double symplectic = 0.0;
  for (int j = 0; j < n; ++j) {
    symplectic += cfg.L()[static_cast<std::size_t>(j)] * (p.x[j] * q.x[j + n] - q.x[j] * p.x[j + n]);
  }
  return {p.x + q.x, p.t + q.t + law_factor(cfg.law()) * symplectic};
}

Point inverse(const Point& p) { return {-p.x, -p.t}; }

Point dilate(double r, const Point& p) {
  if (!(r > 0.0)) throw ConfigError("dilation factor must be positive");
  return {r * p.x, r * r * p.t};
}

Eigen::MatrixXd left_translation_jacobian(const Point& p, const GroupConfig& cfg) {
  check_point(p, cfg);
  const int n = cfg.n();
  const int d = cfg.dim();
  const double kappa = law_factor(cfg.law());
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(d, d);
  // t' = t_p + t_q + kappa * sum_j L_j (p_j q_{j+n} - q_j p_{j+n})
  for (int j = 0; j < n; ++j) {
    const double l = cfg.L()[static_cast<std::size_t>(j)];
    A(d - 1, j) = -kappa * l * p.x[j + n];
    A(d - 1, j + n) = kappa * l * p.x[j];
  }
  return A;
}

}  // namespace carnot
