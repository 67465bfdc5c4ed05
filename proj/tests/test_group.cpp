#include "doctest.h"

#include "carnot/errors.hpp"
#include "carnot/fd_oracle.hpp"
#include "carnot/field.hpp"
#include "carnot/gauges.hpp"
#include "carnot/verify.hpp"
#include "test_support.hpp"

using namespace carnot;
using carnot::testing::random_point;

namespace {

// Step-two BCH: log(exp X exp Y) = X + Y + [X, Y] / 2, computed with the
// algebra's bracket rather than the group law.
Point bch_product(const Point& p, const Point& q, const GroupConfig& cfg) {
  const AlgebraElement u{p.x, p.t};
  const AlgebraElement v{q.x, q.t};
  return {p.x + q.x, p.t + q.t + 0.5 * bracket(u, v, cfg).center};
}

void check_close(const Point& a, const Point& b, double tol) {
  REQUIRE(a.x.size() == b.x.size());
  CHECK((a.x - b.x).cwiseAbs().maxCoeff() <= tol);
  CHECK(std::abs(a.t - b.t) <= tol);
}

}  // namespace

TEST_CASE("multiply examples") {
  const GroupConfig bch(1, {1.0}, MetricMode::MainAssumption, LawConvention::BchDerived);
  const GroupConfig paper = bch.with_law(LawConvention::PaperPrinted);
  const Point a = Point::from_coords({1, 0, 0});
  const Point b = Point::from_coords({0, 1, 0});
  CHECK(multiply(a, b, bch) == Point::from_coords({1, 1, 1}));
  CHECK(multiply(a, b, paper) == Point::from_coords({1, 1, 2}));
  CHECK(multiply(a, Point::origin(bch), bch) == a);
  CHECK_THROWS_AS(multiply(a, Point::origin(2), bch), DimensionError);
}

TEST_CASE("BchDerived law equals the step-two BCH product") {
  Xoshiro256 rng(11);
  const GroupConfig cfg(3, {1.0, -0.5, 2.5});
  for (int k = 0; k < 200; ++k) {
    const Point p = random_point(cfg, rng, 3.0);
    const Point q = random_point(cfg, rng, 3.0);
    check_close(multiply(p, q, cfg), bch_product(p, q, cfg), 1e-13);
  }
}

TEST_CASE("inverse and dilation examples") {
  const GroupConfig cfg(1, {1.0});
  CHECK(inverse(Point::origin(cfg)) == Point::origin(cfg));
  CHECK(inverse(Point::from_coords({1, 2, 3})) == Point::from_coords({-1, -2, -3}));
  const Point e1 = Point::from_coords({1, 0, 0});
  CHECK(multiply(e1, inverse(e1), cfg) == Point::origin(cfg));
  CHECK(multiply(e1, inverse(e1), cfg.with_law(LawConvention::PaperPrinted)) == Point::origin(cfg));

  const Point p = Point::from_coords({1, 1, 1});
  CHECK(dilate(1.0, p) == p);
  CHECK(dilate(2.0, p) == Point::from_coords({2, 2, 4}));
  CHECK_THROWS_AS(dilate(0.0, p), ConfigError);
  CHECK_THROWS_AS(dilate(-1.0, p), ConfigError);
}

TEST_CASE("group axioms hold for both conventions (randomized)") {
  Xoshiro256 rng(5);
  for (LawConvention law : {LawConvention::BchDerived, LawConvention::PaperPrinted}) {
    const GroupConfig cfg(2, {1.0, 2.0}, MetricMode::MainAssumption, law);
    for (int k = 0; k < 500; ++k) {
      const Point p = random_point(cfg, rng, 2.0);
      const Point q = random_point(cfg, rng, 2.0);
      const Point r = random_point(cfg, rng, 2.0);
      const double s = rng.uniform(0.05, 10.0);
      check_close(multiply(multiply(p, q, cfg), r, cfg), multiply(p, multiply(q, r, cfg), cfg), 1e-13);
      check_close(inverse(multiply(p, q, cfg)), multiply(inverse(q), inverse(p), cfg), 1e-13);
      check_close(multiply(p, inverse(p), cfg), Point::origin(cfg), 1e-15);
      check_close(multiply(dilate(s, p), dilate(s, q), cfg), dilate(s, multiply(p, q, cfg)), 1e-12 * s * s);
    }
  }
}

TEST_CASE("left translation") {
  const GroupConfig cfg(1, {1.0});
  const FieldPtr rho = rho_field(cfg);
  Xoshiro256 rng(3);
  const Point p = random_point(cfg, rng);
  const Point q = random_point(cfg, rng);

  const FieldPtr same = left_translate(Point::origin(cfg), rho, cfg);
  CHECK(same->value(q) == rho->value(q));

  const FieldPtr moved = left_translate(p, rho, cfg);
  CHECK(moved->value(inverse(p)) == 0.0);
  CHECK(moved->singular_at(inverse(p)));
  CHECK_THROWS_AS(eval_jet(*moved, inverse(p)), SingularPointError);
}

TEST_CASE("X_j commutes with left translation under BchDerived (finite differences)") {
  Xoshiro256 rng(17);
  const GroupConfig cfg(1, {1.0});
  for (int k = 0; k < 20; ++k) {
    const FieldPtr f = random_smooth_field(cfg.dim(), rng());
    const Point p = random_point(cfg, rng);
    const Point q = random_point(cfg, rng);
    const FieldPtr translated = left_translate(p, f, cfg);
    const Point pq = multiply(p, q, cfg);
    const Eigen::VectorXd lhs = horizontal_first(fd_oracle(*translated, q), q, cfg);
    const Eigen::VectorXd rhs = horizontal_first(fd_oracle(*f, pq), pq, cfg);
    const Eigen::VectorXd exact = horizontal_first(eval_jet(*translated, q), q, cfg);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((lhs - exact).cwiseAbs().maxCoeff() < 1e-8);
  }
}
