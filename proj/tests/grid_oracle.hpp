#pragma once

#include <cmath>

namespace carnot::testing {

struct GridResult {
  double value;
  double error;
};

// Midpoint rule for omega_2 of the classical one-pair ball (L = 1/2): an n x n
// grid in (x, y) over [-1, 1]^2 and nt cells in t per column, each column
// clipped to the ball |t| < sqrt(1 - |x|^4) / 4. The integrand
// |grad_0 rho|^2 reduces to |x|^2 / rho^2 there.
inline double grid_omega2(int n, int nt) {
  const double h = 2.0 / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double y = -1.0 + (j + 0.5) * h;
      const double s = x * x + y * y;
      if (s >= 1.0) continue;
      const double T = std::sqrt(1.0 - s * s) / 4.0;
      const double ht = 2.0 * T / nt;
      double column = 0.0;
      for (int k = 0; k < nt; ++k) {
        const double t = -T + (k + 0.5) * ht;
        column += s / std::sqrt(s * s + 16.0 * t * t);
      }
      total += column * ht;
    }
  }
  return total * h * h;
}

/// 400^2 x 200 cells; the error estimate is the change from halving every axis.
inline GridResult grid_oracle() {
  const double fine = grid_omega2(400, 200);
  const double coarse = grid_omega2(200, 100);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace carnot::testing
