#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace carnot {

enum class MetricMode { Orthonormal, MainAssumption };

/// Center coordinate of the group law: factor 1 follows from the
/// Baker-Campbell-Hausdorff expansion, factor 2 is the alternative
/// printed form kept for comparison.
enum class LawConvention { BchDerived, PaperPrinted };

std::string to_string(MetricMode mode);
std::string to_string(LawConvention law);
MetricMode parse_metric_mode(const std::string& text);
LawConvention parse_law_convention(const std::string& text);

/// Step-two algebra spanned by X_1..X_2n and a one-dimensional center T,
/// with [X_j, X_{j+n}] = 2 L_j T.
class GroupConfig {
 public:
  /// Throws ConfigError when n < 1, L.size() != n, or some L_j is zero or not finite.
  GroupConfig(int n, std::vector<double> L, MetricMode metric = MetricMode::MainAssumption,
              LawConvention law = LawConvention::BchDerived);

  int n() const { return n_; }
  int horizontal_dim() const { return 2 * n_; }
  int dim() const { return 2 * n_ + 1; }
  const std::vector<double>& L() const { return L_; }
  MetricMode metric() const { return metric_; }
  LawConvention law() const { return law_; }

  /// Anisotropy constant attached to horizontal index j (0-based, 0..2n-1).
  double pair_constant(int j) const { return L_[static_cast<std::size_t>(j % n_)]; }

  /// <X_j, X_j> under the configured metric (0-based j).
  double horizontal_norm_sq(int j) const;

  /// Weight 1/<X_j,X_j> used by the operators; 1 in orthonormal mode.
  double operator_weight(int j) const { return 1.0 / horizontal_norm_sq(j); }

  GroupConfig with_metric(MetricMode metric) const { return {n_, L_, metric, law_}; }
  GroupConfig with_law(LawConvention law) const { return {n_, L_, metric_, law}; }

  bool operator==(const GroupConfig&) const = default;

 private:
  int n_;
  std::vector<double> L_;
  MetricMode metric_;
  LawConvention law_;
};

/// Coefficients on X_1..X_2n (horizontal) and T (center).
struct AlgebraElement {
  Eigen::VectorXd horizontal;
  double center = 0.0;

  static AlgebraElement zero(const GroupConfig& cfg);
  /// Basis vector X_j, 1-based j in 1..2n.
  static AlgebraElement basis(const GroupConfig& cfg, int j);
  static AlgebraElement center_generator(const GroupConfig& cfg);

  std::size_t size() const { return static_cast<std::size_t>(horizontal.size()) + 1; }
};

/// [X_j, X_k] for 1-based indices. Always a multiple of T.
AlgebraElement bracket(int j, int k, const GroupConfig& cfg);

/// Bilinear extension of [.,.] to arbitrary elements.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v, const GroupConfig& cfg);

double inner_product(const AlgebraElement& u, const AlgebraElement& v, const GroupConfig& cfg);

/// Matrix of J_T on the orthonormalized horizontal basis X_j / |X_j|,
/// defined by <J_T v, w> = <T, [v, w]>. Column a holds J_T e_a.
Eigen::MatrixXd jz_matrix(const GroupConfig& cfg);

struct HTypeResult {
  bool heisenberg_type = false;
  /// "orthogonality" = |J^T J - I|_F, "square" = |J^2 + I|_F,
  /// "center_span" = 0 when the horizontal brackets span the center, else 1.
  std::map<std::string, double> diagnostics;
};

inline constexpr double kHTypeTolerance = 1e-12;

HTypeResult is_heisenberg_type(const GroupConfig& cfg, double tol = kHTypeTolerance);

/// Q = dim V1 + 2 dim V2 = 2n + 2.
int homogeneous_dimension(const GroupConfig& cfg);

}  // namespace carnot
