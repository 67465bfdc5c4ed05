#include "carnot/quadrature.hpp"

#include <cmath>

#include "carnot/errors.hpp"
#include "carnot/field.hpp"
#include "carnot/parallel.hpp"
#include "carnot/rng.hpp"

namespace carnot {

std::string to_string(GradientNorm norm) { return norm == GradientNorm::Metric ? "metric" : "euclidean"; }

GradientNorm parse_gradient_norm(const std::string& text) {
  if (text == "metric") return GradientNorm::Metric;
  if (text == "euclidean") return GradientNorm::Euclidean;
  throw ConfigError("unknown gradient norm '" + text + "' (expected metric|euclidean)");
}

namespace {

// Resample cutoff around the singular point, relative to r.
constexpr double kCutoff = 1e-9;

double gauge_weight(const GroupConfig& cfg, int j) { return 2.0 * std::abs(cfg.pair_constant(j)); }

struct Draw {
  Point point;
  double rho = 0.0;
};

class BoxSampler {
 public:
  BoxSampler(double r, const GroupConfig& cfg) : cfg_(cfg), box_(ball_bounding_box(r, cfg)) {}

  Draw draw(Xoshiro256& rng) const {
    const int h = cfg_.horizontal_dim();
    Draw d;
    d.point.x.resize(h);
    double s = 0.0;
    for (int j = 0; j < h; ++j) {
      const double xj = (2.0 * rng.uniform() - 1.0) * box_[static_cast<std::size_t>(j)];
      d.point.x[j] = xj;
      s += gauge_weight(cfg_, j) * xj * xj;
    }
    d.point.t = (2.0 * rng.uniform() - 1.0) * box_.back();
    d.rho = std::pow(s * s + 16.0 * d.point.t * d.point.t, 0.25);
    return d;
  }

  double volume() const {
    double v = 1.0;
    for (double half : box_) v *= 2.0 * half;
    return v;
  }

 private:
  const GroupConfig& cfg_;
  std::vector<double> box_;
};

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t violations = 0;
  double max_norm = 0.0;
};

}  // namespace

std::vector<double> ball_bounding_box(double r, const GroupConfig& cfg) {
  if (!(r > 0.0)) throw ConfigError("ball radius must be positive");
  std::vector<double> box;
  for (int j = 0; j < cfg.horizontal_dim(); ++j) box.push_back(r / std::sqrt(gauge_weight(cfg, j)));
  box.push_back(r * r / 4.0);
  return box;
}

double gauge_gradient_norm(const Point& p, const GroupConfig& cfg, GradientNorm norm) {
  check_point(p, cfg);
  const int h = cfg.horizontal_dim();
  double s = 0.0;
  for (int j = 0; j < h; ++j) s += gauge_weight(cfg, j) * p.x[j] * p.x[j];
  const double rho4 = s * s + 16.0 * p.t * p.t;
  const double inv_rho3 = std::pow(rho4, -0.75);
  // d rho/dx_j = s w_j x_j / rho^3, d rho/dt = 8 t / rho^3
  Jet2 jet = Jet2::constant(std::pow(rho4, 0.25), cfg.dim());
  for (int j = 0; j < h; ++j) jet.grad[j] = s * gauge_weight(cfg, j) * p.x[j] * inv_rho3;
  jet.grad[h] = 8.0 * p.t * inv_rho3;
  const Eigen::VectorXd first = horizontal_first(jet, p, cfg);
  double sum = 0.0;
  for (int j = 0; j < h; ++j) {
    const double w = norm == GradientNorm::Metric ? cfg.operator_weight(j) : 1.0;
    sum += w * first[j] * first[j];
  }
  return std::sqrt(sum);
}

BallSamples sample_ball(double r, const GroupConfig& cfg, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw ConfigError("sample count must be positive");
  const BoxSampler sampler(r, cfg);
  BallSamples out;
  out.points.reserve(count);
  for (std::uint64_t block = 0; out.points.size() < count; ++block) {
    Xoshiro256 rng = Xoshiro256::substream(seed, block);
    for (std::uint64_t k = 0; k < kQuadratureBlock && out.points.size() < count; ++k) {
      Draw d = sampler.draw(rng);
      ++out.draws;
      if (d.rho < r) out.points.push_back(std::move(d.point));
    }
  }
  return out;
}

McEstimate ball_p_measure(double r, double p, const GroupConfig& cfg, std::uint64_t count, std::uint64_t seed,
                          const QuadratureOptions& options) {
  if (!(r > 0.0)) throw ConfigError("ball radius must be positive");
  if (!(p > 1.0) || !std::isfinite(p)) throw ConfigError("p must satisfy 1 < p < inf");
  if (count < 2) throw ConfigError("need at least two samples");

  const BoxSampler sampler(r, cfg);
  const std::uint64_t blocks = (count + kQuadratureBlock - 1) / kQuadratureBlock;
  std::vector<BlockSums> sums(blocks);

  parallel_for(blocks, options.threads, [&](std::size_t b) {
    Xoshiro256 rng = Xoshiro256::substream(seed, b);
    const std::uint64_t begin = b * kQuadratureBlock;
    const std::uint64_t end = std::min(count, begin + kQuadratureBlock);
    BlockSums& acc = sums[b];
    for (std::uint64_t k = begin; k < end; ++k) {
      Draw d = sampler.draw(rng);
      while (d.rho < kCutoff * r) d = sampler.draw(rng);
      if (!(d.rho < r)) continue;
      const double m = gauge_gradient_norm(d.point, cfg, options.norm);
      if (m > 1.0 + 1e-12) ++acc.violations;
      acc.max_norm = std::max(acc.max_norm, m);
      const double v = std::pow(m, p);
      acc.sum += v;
      acc.sum_sq += v * v;
    }
  });

  BlockSums total;
  for (const BlockSums& s : sums) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
    total.violations += s.violations;
    total.max_norm = std::max(total.max_norm, s.max_norm);
  }

  const double nd = static_cast<double>(count);
  const double mean = total.sum / nd;
  const double var = std::max(0.0, (total.sum_sq - nd * mean * mean) / (nd - 1.0));
  const double volume = sampler.volume();

  McEstimate est;
  est.value = volume * mean;
  est.std_error = volume * std::sqrt(var / nd);
  est.samples = count;
  est.seed = seed;
  est.generator = std::string(Xoshiro256::kName);
  est.p = p;
  est.r = r;
  est.norm = options.norm;
  est.bound_violations = total.violations;
  est.max_gradient_norm = total.max_norm;
  return est;
}

McEstimate omega_p(double p, const GroupConfig& cfg, std::uint64_t count, std::uint64_t seed,
                   const QuadratureOptions& options) {
  return ball_p_measure(1.0, p, cfg, count, seed, options);
}

}  // namespace carnot
