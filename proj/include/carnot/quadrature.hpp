#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carnot/group.hpp"

namespace carnot {

/// Which gradient norm enters the integrand |grad_0 rho|^p.
/// Metric: the config's own norm (m_factor). Euclidean: plain |(X_j rho)_j|.
enum class GradientNorm { Metric, Euclidean };

std::string to_string(GradientNorm norm);
GradientNorm parse_gradient_norm(const std::string& text);

struct QuadratureOptions {
  GradientNorm norm = GradientNorm::Metric;
  unsigned threads = 1;
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator;
  double p = 0.0;
  double r = 1.0;
  GradientNorm norm = GradientNorm::Metric;
  /// Samples where the integrand norm exceeded 1 + 1e-12.
  std::uint64_t bound_violations = 0;
  double max_gradient_norm = 0.0;
};

struct BallSamples {
  std::vector<Point> points;
  std::uint64_t draws = 0;
  double acceptance() const { return draws == 0 ? 0.0 : static_cast<double>(points.size()) / draws; }
};

/// Draws per substream; estimates are merged block by block in index order,
/// so results do not depend on the thread count.
inline constexpr std::uint64_t kQuadratureBlock = 4096;

/// Half-widths of the box enclosing the gauge ball B_r: r / sqrt(2|L_j|)
/// horizontally and r^2 / 4 for t.
std::vector<double> ball_bounding_box(double r, const GroupConfig& cfg);

/// `count` uniform points of B_r = {rho < r} by rejection from the bounding box.
BallSamples sample_ball(double r, const GroupConfig& cfg, std::size_t count, std::uint64_t seed);

/// Monte-Carlo estimate of |B_r|_p = int_{B_r} |grad_0 rho|^p over `count`
/// box draws. Throws ConfigError unless r > 0, 1 < p < inf and count > 1.
McEstimate ball_p_measure(double r, double p, const GroupConfig& cfg, std::uint64_t count, std::uint64_t seed,
                          const QuadratureOptions& options = {});

/// omega_p = |B_1|_p.
McEstimate omega_p(double p, const GroupConfig& cfg, std::uint64_t count, std::uint64_t seed,
                   const QuadratureOptions& options = {});

/// |grad_0 rho| at p under the chosen norm, from the closed-form gradient of rho.
double gauge_gradient_norm(const Point& p, const GroupConfig& cfg, GradientNorm norm);

}  // namespace carnot
