#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <span>
#include <vector>

#include "carnot/lie_structure.hpp"

namespace carnot {

/// Group element in exponential coordinates (x_1, ..., x_2n, t).
struct Point {
  Eigen::VectorXd x;
  double t = 0.0;

  Point() = default;
  Point(Eigen::VectorXd horizontal, double center) : x(std::move(horizontal)), t(center) {}

  static Point origin(const GroupConfig& cfg) { return {Eigen::VectorXd::Zero(cfg.horizontal_dim()), 0.0}; }
  static Point origin(int n) { return {Eigen::VectorXd::Zero(2 * n), 0.0}; }

  /// From a flat array [x_1, ..., x_2n, t]; the length must be odd and at least 3.
  static Point from_coords(std::span<const double> coords);
  static Point from_coords(std::initializer_list<double> coords) {
    return from_coords(std::span<const double>(coords.begin(), coords.size()));
  }

  std::vector<double> coords() const;
  int dim() const { return static_cast<int>(x.size()) + 1; }
  int n() const { return static_cast<int>(x.size()) / 2; }

  /// Coordinate a of the flat layout (t at index 2n).
  double coord(int a) const { return a < x.size() ? x[a] : t; }

  bool is_origin() const { return t == 0.0 && (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0); }
  bool operator==(const Point& other) const { return x == other.x && t == other.t; }
};

/// Coefficient of the center correction: 1 for BchDerived, 2 for PaperPrinted.
double law_factor(LawConvention law);

Point multiply(const Point& p, const Point& q, const GroupConfig& cfg);
Point inverse(const Point& p);

/// Carnot dilation (r x, r^2 t). Throws ConfigError for r <= 0.
Point dilate(double r, const Point& p);

/// Jacobian of q -> p * q in flat coordinates (constant in q).
Eigen::MatrixXd left_translation_jacobian(const Point& p, const GroupConfig& cfg);

void check_point(const Point& p, const GroupConfig& cfg);

}  // namespace carnot
