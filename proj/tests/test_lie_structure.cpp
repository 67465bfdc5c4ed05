#include "doctest.h"

#include "carnot/errors.hpp"
#include "carnot/lie_structure.hpp"

using namespace carnot;

TEST_CASE("GroupConfig validation") {
  CHECK_THROWS_AS(GroupConfig(0, {}), ConfigError);
  CHECK_THROWS_AS(GroupConfig(2, {1.0}), ConfigError);
  CHECK_THROWS_AS(GroupConfig(2, {0.0, 1.0}), ConfigError);
  const GroupConfig cfg(3, {1.0, 0.5, 3.0});
  CHECK(cfg.horizontal_dim() == 6);
  CHECK(cfg.dim() == 7);
}

TEST_CASE("bracket table") {
  const GroupConfig cfg(2, {1.0, 2.0});
  CHECK(bracket(1, 3, cfg).center == 2.0);
  CHECK(bracket(2, 4, cfg).center == 4.0);
  CHECK(bracket(1, 2, cfg).center == 0.0);
  CHECK(bracket(3, 1, cfg).center == -2.0);
  CHECK(bracket(1, 3, cfg).horizontal.isZero());
  CHECK_THROWS_AS(bracket(0, 1, cfg), IndexError);
  CHECK_THROWS_AS(bracket(1, 5, cfg), IndexError);

  SUBCASE("antisymmetric for every pair") {
    for (int j = 1; j <= 4; ++j) {
      for (int k = 1; k <= 4; ++k) CHECK(bracket(j, k, cfg).center == -bracket(k, j, cfg).center);
    }
  }
  SUBCASE("step two: brackets land in the center, which brackets to zero") {
    const AlgebraElement T = AlgebraElement::center_generator(cfg);
    for (int j = 1; j <= 4; ++j) {
      const AlgebraElement xj = AlgebraElement::basis(cfg, j);
      CHECK(bracket(xj, T, cfg).center == 0.0);
      CHECK(bracket(bracket(xj, AlgebraElement::basis(cfg, 1), cfg), xj, cfg).center == 0.0);
    }
  }
  SUBCASE("bilinear extension agrees with the table") {
    for (int j = 1; j <= 4; ++j) {
      for (int k = 1; k <= 4; ++k) {
        CHECK(bracket(AlgebraElement::basis(cfg, j), AlgebraElement::basis(cfg, k), cfg).center ==
              bracket(j, k, cfg).center);
      }
    }
  }
}

TEST_CASE("inner products") {
  const GroupConfig main_cfg(1, {2.0}, MetricMode::MainAssumption);
  const GroupConfig ortho_cfg = main_cfg.with_metric(MetricMode::Orthonormal);
  const auto X1 = AlgebraElement::basis(main_cfg, 1);
  const auto X2 = AlgebraElement::basis(main_cfg, 2);
  const auto T = AlgebraElement::center_generator(main_cfg);
  CHECK(inner_product(X1, X1, main_cfg) == 4.0);
  CHECK(inner_product(X2, X2, main_cfg) == 4.0);
  CHECK(inner_product(X1, X1, ortho_cfg) == 1.0);
  CHECK(inner_product(X1, T, main_cfg) == 0.0);
  CHECK(inner_product(X1, T, ortho_cfg) == 0.0);
  CHECK(inner_product(T, T, main_cfg) == 1.0);
  CHECK(inner_product(X1, X2, main_cfg) == 0.0);

  AlgebraElement bad = X1;
  bad.horizontal.resize(4);
  CHECK_THROWS_AS(inner_product(bad, X1, main_cfg), DimensionError);
}

TEST_CASE("jz_matrix examples") {
  Eigen::Matrix2d rot;
  rot << 0, -1, 1, 0;
  CHECK(jz_matrix(GroupConfig(1, {1.0}, MetricMode::MainAssumption)).isApprox(rot));
  CHECK(jz_matrix(GroupConfig(1, {0.5}, MetricMode::Orthonormal)).isApprox(rot));
  CHECK(jz_matrix(GroupConfig(1, {3.0}, MetricMode::Orthonormal)).isApprox(6.0 * rot));

  SUBCASE("main assumption gives the block rotation for positive L") {
    const Eigen::MatrixXd J = jz_matrix(GroupConfig(3, {1.0, 0.5, 3.0}));
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(6, 6);
    expected.topRightCorner(3, 3) = -Eigen::MatrixXd::Identity(3, 3);
    expected.bottomLeftCorner(3, 3) = Eigen::MatrixXd::Identity(3, 3);
    CHECK((J - expected).norm() < 1e-15);
  }
  SUBCASE("negative L keeps the sign of the bracket") {
    const Eigen::MatrixXd J = jz_matrix(GroupConfig(1, {-2.0}));
    CHECK(J(1, 0) == doctest::Approx(-1.0));
    CHECK(J(0, 1) == doctest::Approx(1.0));
  }
}

TEST_CASE("jz_matrix is antisymmetric and orthogonal under the main assumption") {
  for (double a : {0.25, 1.0, 3.0, 7.5}) {
    for (double b : {0.1, 2.0, 5.0}) {
      const GroupConfig cfg(2, {a, b});
      const Eigen::MatrixXd J = jz_matrix(cfg);
      CHECK((J + J.transpose()).norm() == 0.0);
      CHECK((J.transpose() * J - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-14);
    }
  }
}

TEST_CASE("Heisenberg-type classification") {
  CHECK(is_heisenberg_type(GroupConfig(2, {1.0, 2.0}, MetricMode::MainAssumption)).heisenberg_type);
  CHECK(is_heisenberg_type(GroupConfig(4, {-1.0, 0.3, 9.0, 2.0}, MetricMode::MainAssumption)).heisenberg_type);
  CHECK_FALSE(is_heisenberg_type(GroupConfig(2, {1.0, 2.0}, MetricMode::Orthonormal)).heisenberg_type);
  const HTypeResult classical = is_heisenberg_type(GroupConfig(1, {0.5}, MetricMode::Orthonormal));
  CHECK(classical.heisenberg_type);
  CHECK(classical.diagnostics.at("orthogonality") == 0.0);
  CHECK(classical.diagnostics.at("center_span") == 0.0);

  SUBCASE("orthonormal mode is H-type iff every |2 L_j| = 1") {
    const double grid[] = {-2.0, -0.5, -0.25, 0.25, 0.5, 1.0, 1.5};
    for (double a : grid) {
      for (double b : grid) {
        const GroupConfig cfg(2, {a, b}, MetricMode::Orthonormal);
        const bool expected = std::abs(2 * a) == 1.0 && std::abs(2 * b) == 1.0;
        CHECK(is_heisenberg_type(cfg).heisenberg_type == expected);
      }
    }
  }
}

TEST_CASE("homogeneous dimension") {
  CHECK(homogeneous_dimension(GroupConfig(1, {1.0})) == 4);
  CHECK(homogeneous_dimension(GroupConfig(2, {1.0, 1.0})) == 6);
  CHECK(homogeneous_dimension(GroupConfig(10, std::vector<double>(10, 1.0))) == 22);
}

TEST_CASE("metric and law names") {
  CHECK(parse_metric_mode("orthonormal") == MetricMode::Orthonormal);
  CHECK(parse_metric_mode("main-assumption") == MetricMode::MainAssumption);
  CHECK(parse_law_convention("paper") == LawConvention::PaperPrinted);
  CHECK_THROWS_AS(parse_metric_mode("riemannian"), ConfigError);
  CHECK_THROWS_AS(parse_law_convention("bch2"), ConfigError);
}
