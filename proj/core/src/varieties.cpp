#include "clusterdyn/varieties.hpp"

#include <algorithm>
#include <cmath>

namespace clusterdyn {

std::optional<Point4<Rational>> v_point_r1(const Rational& x1, const Rational& x2) {
  const Rational den = x1 * x2 - Rational(1);
  if (den.sign() <= 0 || x1.sign() <= 0 || x2.sign() <= 0) return std::nullopt;
  return Point4<Rational>{x1, x2, (x1 * x1 + x2) / den, x1};
}

std::optional<Point4<double>> v_point_float(int r, double x1, double x2,
                                            bool upper_branch) {
  if (r == 2) throw UndefinedForR2("phi_2 has no periodic points");
  const double a = std::pow(x1, 2 * r);
  const double b = std::pow(x1, r) * x2;
  const double x2r = std::pow(x2, r);
  auto f = [&](double t) { return std::pow(x2r + std::pow(t, r), r) + a - b * t; };

  // Locate the minimum of the convex function by golden-section search on a
  // bracket that ends where F is increasing.
  double hi = 1.0;
  while (f(2 * hi) < f(hi)) hi *= 2;
  hi *= 2;
  double lo = 0.0;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 200; ++it) {
    const double m1 = hi - g * (hi - lo);
    const double m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double tmin = (lo + hi) / 2;
  if (f(tmin) > 0) return std::nullopt;

  double a0 = 0.0;
  double a1 = tmin;
  if (upper_branch) {
    a0 = tmin;
    a1 = std::max(1.0, 2 * tmin);
    while (f(a1) <= 0) a1 *= 2;
  }
  // f(a0) and f(a1) have opposite signs.
  for (int it = 0; it < 200; ++it) {
    const double mid = (a0 + a1) / 2;
    if ((f(mid) > 0) == (f(a0) > 0)) {
      a0 = mid;
    } else {
      a1 = mid;
    }
  }
  const double x3 = (a0 + a1) / 2;
  return Point4<double>{x1, x2, x3, x1};
}

}  // namespace clusterdyn
