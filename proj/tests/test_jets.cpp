#include "doctest.h"

#include <cmath>

#include "carnot/errors.hpp"
#include "carnot/fd_oracle.hpp"
#include "carnot/field.hpp"
#include "carnot/gauges.hpp"
#include "carnot/verify.hpp"
#include "test_support.hpp"

using namespace carnot;
using carnot::testing::random_point;
using carnot::testing::random_unit_gauge_point;

namespace {

FieldPtr coordinate(int a) {
  return make_field("coord", [a](const auto& c) { return c[static_cast<std::size_t>(a)] * 1.0; });
}

// Largest |a - b| relative to the largest entry of b.
double rel_err(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(b.cwiseAbs().maxCoeff(), 1e-300);
}

}  // namespace

TEST_CASE("jet of x1^2") {
  const FieldPtr f = make_field("x1^2", [](const auto& c) { return c[0] * c[0]; });
  const Jet2 j = eval_jet(*f, Point::from_coords({3, 0, 0}));
  CHECK(j.value == 9.0);
  CHECK(j.grad[0] == 6.0);
  CHECK(j.grad[1] == 0.0);
  CHECK(j.grad[2] == 0.0);
  CHECK(j.hess(0, 0) == 2.0);
  CHECK(j.hess.cwiseAbs().sum() == 2.0);
}

TEST_CASE("jet primitives against their derivatives") {
  const Jet2 x = Jet2::variable(0.7, 0, 1);
  const auto check = [](const Jet2& j, double v, double d1, double d2) {
    CHECK(j.value == doctest::Approx(v).epsilon(1e-14));
    CHECK(j.grad[0] == doctest::Approx(d1).epsilon(1e-14));
    CHECK(j.hess(0, 0) == doctest::Approx(d2).epsilon(1e-14));
  };
  check(sqrt(x), std::sqrt(0.7), 0.5 / std::sqrt(0.7), -0.25 * std::pow(0.7, -1.5));
  check(pow(x, 0.25), std::pow(0.7, 0.25), 0.25 * std::pow(0.7, -0.75), 0.25 * -0.75 * std::pow(0.7, -1.75));
  check(pow(x, -4.0), std::pow(0.7, -4), -4 * std::pow(0.7, -5), 20 * std::pow(0.7, -6));
  check(log(x), std::log(0.7), 1 / 0.7, -1 / 0.49);
  check(exp(x), std::exp(0.7), std::exp(0.7), std::exp(0.7));
  check(sin(x), std::sin(0.7), std::cos(0.7), -std::sin(0.7));
  check(1.0 / x, 1 / 0.7, -1 / 0.49, 2 / (0.7 * 0.49));
  check(x * x * x, 0.343, 3 * 0.49, 6 * 0.7);

  const Jet2 neg = Jet2::variable(-1.0, 0, 1);
  CHECK_THROWS_AS(log(neg), DomainError);
  CHECK_THROWS_AS(sqrt(neg), DomainError);
  CHECK_THROWS_AS(pow(neg, 0.5), DomainError);
  CHECK(pow(neg, 3.0).value == -1.0);
  CHECK_THROWS_AS(1.0 / Jet2::constant(0.0, 1), DomainError);
}

TEST_CASE("jet Hessians are exactly symmetric") {
  Xoshiro256 rng(2);
  const GroupConfig cfg(2, {1.0, 2.0});
  const FieldPtr fields[] = {rho_field(cfg), counterexample_norm(1.0), random_smooth_field(5, 9),
                             harmonic_profile(1.5, cfg)};
  for (const FieldPtr& f : fields) {
    for (int k = 0; k < 50; ++k) {
      const Jet2 j = eval_jet(*f, random_unit_gauge_point(cfg, rng));
      CHECK((j.hess - j.hess.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("singular points and domain errors") {
  const GroupConfig cfg(1, {1.0});
  CHECK_THROWS_AS(eval_jet(GaugeRho(cfg), Point::origin(cfg)), SingularPointError);
  const FieldPtr bad_log = make_field("log x1", [](const auto& c) {
    using std::log;
    return log(c[0]);
  });
  CHECK_THROWS_AS(eval_jet(*bad_log, Point::from_coords({-1, 0, 0})), DomainError);
  CHECK_THROWS_AS(fd_oracle(GaugeRho(cfg), Point::origin(cfg)), SingularPointError);
}

TEST_CASE("log rho vanishes on the unit gauge sphere") {
  Xoshiro256 rng(8);
  const GroupConfig cfg(2, {1.0, 2.0});
  const FieldPtr log_rho = make_field("log rho", [cfg](const auto& c) {
    using std::log;
    using std::pow;
    auto s = 2.0 * c[0] * c[0];
    s += 4.0 * c[1] * c[1] + 2.0 * c[2] * c[2] + 4.0 * c[3] * c[3];
    return log(pow(s * s + 16.0 * c[4] * c[4], 0.25));
  });
  for (int k = 0; k < 20; ++k) {
    CHECK(std::abs(eval_jet(*log_rho, random_unit_gauge_point(cfg, rng)).value) < 1e-15);
  }
}

TEST_CASE("apply_X examples") {
  const GroupConfig cfg(1, {1.0});
  const FieldPtr t = coordinate(2);
  const Point p = Point::from_coords({0.3, -1.7, 2.0});
  CHECK(apply_X(1, *t, p, cfg) == 1.7);
  CHECK(apply_X(2, *t, p, cfg) == 0.3);
  CHECK(apply_X(1, *coordinate(0), p, cfg) == 1.0);
  CHECK_THROWS_AS(apply_X(3, *t, p, cfg), IndexError);

  const GroupConfig classical(1, {0.5});
  CHECK(apply_X(1, GaugeRho(classical), Point::from_coords({1, 0, 0}), classical) == doctest::Approx(1.0));
}

TEST_CASE("apply_XX examples") {
  const GroupConfig cfg(1, {1.0});
  const FieldPtr t = coordinate(2);
  const Point p = Point::from_coords({0.4, 0.9, -0.2});
  CHECK(apply_XX(1, 2, *t, p, cfg) == 1.0);
  CHECK(apply_XX(2, 1, *t, p, cfg) == -1.0);

  const FieldPtr linear = make_field("linear", [](const auto& c) { return 2.0 * c[0] - 3.0 * c[1] + 1.0; });
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) CHECK(apply_XX(i, j, *linear, p, cfg) == 0.0);
  }

  const GroupConfig classical(1, {0.5});
  const FieldPtr rho_sq = make_field("rho^2", [](const auto& c) {
    using std::sqrt;
    auto s = c[0] * c[0] + c[1] * c[1];
    return sqrt(s * s + 16.0 * c[2] * c[2]);
  });
  CHECK(apply_XX(1, 1, *rho_sq, Point::from_coords({1, 0, 0}), classical) == doctest::Approx(2.0));
  const Jet2 fd = fd_oracle(*rho_sq, Point::from_coords({1, 0, 0}));
  CHECK(horizontal_derivatives(fd, Point::from_coords({1, 0, 0}), classical).second(0, 0) ==
        doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("commutators realize the bracket table") {
  Xoshiro256 rng(21);
  const GroupConfig cfg(3, {1.0, -0.5, 2.5});
  for (int k = 0; k < 30; ++k) {
    const FieldPtr f = random_smooth_field(cfg.dim(), rng());
    const Point p = random_point(cfg, rng);
    const Jet2 jet = eval_jet(*f, p);
    const HorizontalDerivatives d = horizontal_derivatives(jet, p, cfg);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const double expected = bracket(i + 1, j + 1, cfg).center * jet.grad[6];
        CHECK(d.second(i, j) - d.second(j, i) == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("Leibniz rule for X_j") {
  Xoshiro256 rng(4);
  const GroupConfig cfg(2, {1.0, 2.0});
  for (int k = 0; k < 20; ++k) {
    const FieldPtr f = random_smooth_field(5, rng());
    const FieldPtr g = random_smooth_field(5, rng());
    const FieldPtr fg = make_field("fg", [f, g](const auto& c) {
      using S = std::decay_t<decltype(c[0])>;
      const Point p = Point::from_coords([&] {
        std::vector<double> v;
        for (const auto& ci : c) {
          if constexpr (std::is_same_v<S, double>) {
            v.push_back(ci);
          } else {
            v.push_back(ci.value);
          }
        }
        return v;
      }());
      if constexpr (std::is_same_v<S, double>) {
        return f->value(p) * g->value(p);
      } else {
        return eval_jet(*f, p) * eval_jet(*g, p);
      }
    });
    const Point p = random_point(cfg, rng);
    for (int j = 1; j <= 4; ++j) {
      const double lhs = apply_X(j, *fg, p, cfg);
      const double rhs = apply_X(j, *f, p, cfg) * g->value(p) + f->value(p) * apply_X(j, *g, p, cfg);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
  }
}

TEST_CASE("finite-difference oracle") {
  const FieldPtr sq = make_field("x1^2", [](const auto& c) { return c[0] * c[0]; });
  const Jet2 fd = fd_oracle(*sq, Point::from_coords({3, 0, 0}), 1e-4);
  CHECK(std::abs(fd.grad[0] - 6.0) < 1e-7);
  CHECK(std::abs(fd.hess(0, 0) - 2.0) < 1e-5);

  SUBCASE("agrees with forward mode on rho at unit-gauge points") {
    Xoshiro256 rng(13);
    const GroupConfig cfg(2, {1.0, 2.0});
    const GaugeRho rho(cfg);
    for (int k = 0; k < 100; ++k) {
      const Point p = random_unit_gauge_point(cfg, rng);
      const Jet2 exact = eval_jet(rho, p);
      const Jet2 approx = fd_oracle(rho, p);
      CHECK(rel_err(approx.grad, exact.grad) < 1e-6);
      CHECK(rel_err(approx.hess, exact.hess) < 1e-6);
    }
  }
}
