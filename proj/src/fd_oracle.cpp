#include "carnot/fd_oracle.hpp"

#include <cmath>
#include <limits>

#include "carnot/errors.hpp"

namespace carnot {

namespace {

double sample(const ScalarField& f, const Point& p) {
  if (f.singular_at(p)) throw SingularPointError("finite-difference stencil touches the singular set");
  return f.value(p);
}

Point shifted(const Point& p, int a, double da, int b = -1, double db = 0.0) {
  Point q = p;
  const int h = static_cast<int>(q.x.size());
  auto bump = [&](int idx, double d) {
    if (idx == h) {
      q.t += d;
    } else {
      q.x[idx] += d;
    }
  };
  bump(a, da);
  if (b >= 0) bump(b, db);
  return q;
}

}  // namespace

Jet2 fd_oracle(const ScalarField& f, const Point& p, std::optional<double> h) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double base_grad = h.value_or(std::cbrt(eps));
  const double base_hess = h.value_or(std::pow(eps, 0.25));
  const int d = p.dim();

  Jet2 out = Jet2::constant(sample(f, p), d);
  Eigen::VectorXd hg(d), hh(d);
  for (int a = 0; a < d; ++a) {
    const double scale = std::max(1.0, std::abs(p.coord(a)));
    hg[a] = base_grad * scale;
    hh[a] = base_hess * scale;
  }

  for (int a = 0; a < d; ++a) {
    out.grad[a] = (sample(f, shifted(p, a, hg[a])) - sample(f, shifted(p, a, -hg[a]))) / (2.0 * hg[a]);
    out.hess(a, a) = (sample(f, shifted(p, a, hh[a])) - 2.0 * out.value + sample(f, shifted(p, a, -hh[a]))) /
                     (hh[a] * hh[a]);
    for (int b = 0; b < a; ++b) {
      const double pp = sample(f, shifted(p, a, hh[a], b, hh[b]));
      const double pm = sample(f, shifted(p, a, hh[a], b, -hh[b]));
      const double mp = sample(f, shifted(p, a, -hh[a], b, hh[b]));
      const double mm = sample(f, shifted(p, a, -hh[a], b, -hh[b]));
      out.hess(a, b) = (pp - pm - mp + mm) / (4.0 * hh[a] * hh[b]);
      out.hess(b, a) = out.hess(a, b);
    }
  }
  return out;
}

}  // namespace carnot
