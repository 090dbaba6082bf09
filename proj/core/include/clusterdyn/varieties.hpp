#pragma once

#include <cmath>
#include <optional>
#include <type_traits>

#include "clusterdyn/maps.hpp"

namespace clusterdyn {

/// Names the variety C^r_(p,q) = {x3 = p x2, q x1 x4 = (1+p^r) x2^r}, which is
/// the fibre of reduce_pi over (p,q).
template <Scalar T>
struct VarietyLabel {
  int r = 1;
  T p{1};
  T q{1};

  friend bool operator==(const VarietyLabel&, const VarietyLabel&) = default;
};

enum class Chart {
  C11,  ///< coordinates (x1, x2) on C^r_(1,1)
  Cpq,  ///< coordinates (x1, x4) on C^r_(p,q)
};

template <Scalar T>
struct RestrictedPoint {
  Chart chart = Chart::C11;
  T u{1};
  T v{1};
};

/// Coordinates produced by an r-th root: exact inputs become PosReal.
template <Scalar T>
using RootScalar = std::conditional_t<ExactScalar<T>, PosReal, T>;

template <Scalar T>
VarietyLabel<T> label_of(int r, const Point4<T>& x) {
  const Point2<T> pq = reduce_pi(r, x);
  return {r, pq.x, pq.y};
}

template <Scalar T>
bool is_unit_label(const VarietyLabel<T>& lbl) {
  return scalar_equal(lbl.p, T(1)) && scalar_equal(lbl.q, T(1));
}

/// Exact membership for exact scalars; relative tolerance `rel_tol` otherwise.
template <Scalar T>
bool member(const VarietyLabel<T>& lbl, const Point4<T>& x, double rel_tol = 1e-9) {
  const int r = lbl.r;
  return scalar_equal(x.x3, lbl.p * x.x2, rel_tol) &&
         scalar_equal(lbl.q * x.x1 * x.x4, (T(1) + ipow(lbl.p, r)) * ipow(x.x2, r),
                      rel_tol);
}

/// lambda = (1+p^r)^2 (1+q^r)^r / (q^2 p^r), the value of l on C^r_(p,q).
template <Scalar T>
T lambda_of(const VarietyLabel<T>& lbl) {
  const int r = lbl.r;
  const T one(1);
  return ipow(one + ipow(lbl.p, r), 2) * ipow(one + ipow(lbl.q, r), r) /
         (ipow(lbl.q, 2) * ipow(lbl.p, r));
}

/// l(x) = (x1^r x4^r + (x2^r+x3^r)^r)^r / (x1^(r^2-2) x2^r x3^r x4^(r^2-2)).
template <Scalar T>
T l_function(int r, const Point4<T>& x) {
  const long e = static_cast<long>(r) * r - 2;
  const T s = ipow(x.x2, r) + ipow(x.x3, r);
  const T top = ipow(ipow(x.x1, r) * ipow(x.x4, r) + ipow(s, r), r);
  return top / (ipow(x.x1, e) * ipow(x.x2, r) * ipow(x.x3, r) * ipow(x.x4, e));
}

/// phi_r restricted to C^r_(1,1) in the (x1, x2) chart: (x2, 2 x2^r / x1).
template <Scalar T>
Point2<T> restricted_bar(int r, const Point2<T>& p) {
  return {p.y, T(2) * ipow(p.y, r) / p.x};
}

/// phi_r^(4) restricted to C^r_(p,q) in the (x1, x4) chart.
template <Scalar T>
Point2<T> restricted_tilde(int r, const T& lambda, const Point2<T>& p) {
  const long r2 = static_cast<long>(r) * r;
  return {lambda * ipow(p.y, r2 - 2) / p.x,
          ipow(lambda, r2 - 1) * ipow(p.y, (r2 - 3) * (r2 - 1)) / ipow(p.x, r2 - 2)};
}

/// (x1, x2) -> (x1, x2, x2, 2 x2^r / x1) on C^r_(1,1).
template <Scalar T>
Point4<T> embed_c11(int r, const Point2<T>& p) {
  return {p.x, p.y, p.y, T(2) * ipow(p.y, r) / p.x};
}

/// (x1, x4) -> point of C^r_(p,q); x2 = (q x1 x4 / (1+p^r))^(1/r).
template <Scalar T>
Point4<RootScalar<T>> embed_cpq(const VarietyLabel<T>& lbl, const Point2<T>& p) {
  using R = RootScalar<T>;
  const R x2 = nth_root(lbl.q * p.x * p.y / (T(1) + ipow(lbl.p, lbl.r)), lbl.r);
  return {convert<R>(p.x), x2, convert<R>(lbl.p) * x2, convert<R>(p.y)};
}

template <Scalar T>
Point4<RootScalar<T>> embed(const RestrictedPoint<T>& rp, const VarietyLabel<T>& lbl) {
  using R = RootScalar<T>;
  if (rp.chart == Chart::C11) {
    return convert_point<R>(embed_c11(lbl.r, Point2<T>{rp.u, rp.v}));
  }
  return embed_cpq(lbl, Point2<T>{rp.u, rp.v});
}

/// Chart coordinates of x: (x1, x2) on C11, (x1, x4) otherwise.
template <Scalar T>
RestrictedPoint<T> chart_coords(Chart chart, const Point4<T>& x) {
  if (chart == Chart::C11) return {chart, x.x1, x.x2};
  return {chart, x.x1, x.x4};
}

/// Membership in the period-4 variety
///   V = {x4 = x1, x1^r x2 x3 = x1^(2r) + (x2^r + x3^r)^r}.
/// Throws UndefinedForR2 for r = 2.
template <Scalar T>
bool on_V(int r, const Point4<T>& x, double rel_tol = 1e-9) {
  if (r == 2) throw UndefinedForR2("phi_2 has no periodic points, so V is undefined");
  return scalar_equal(x.x4, x.x1, rel_tol) &&
         scalar_equal(ipow(x.x1, r) * x.x2 * x.x3,
                      ipow(x.x1, 2 * r) + ipow(ipow(x.x2, r) + ipow(x.x3, r), r),
                      rel_tol);
}

/// The period-4 point of C^r_(p,q): x1 = x4 = lambda^(1/(4-r^2)).
template <Scalar T>
Point4<RootScalar<T>> v_point_from_label(const VarietyLabel<T>& lbl) {
  using R = RootScalar<T>;
  const int r = lbl.r;
  if (r == 2) throw UndefinedForR2("phi_2 has no periodic points");
  const long e = 4 - static_cast<long>(r) * r;
  const R lambda = convert<R>(lambda_of(lbl));
  R x1;
  if constexpr (std::same_as<R, PosReal>) {
    x1 = lambda.pow(Rational(1, e));
  } else {
    using std::pow;
    x1 = pow(lambda, R(1) / R(e));
  }
  const VarietyLabel<R> rl{r, convert<R>(lbl.p), convert<R>(lbl.q)};
  return embed_cpq(rl, Point2<R>{x1, x1});
}

/// Rational point of V for r = 1: x3 = (x1^2 + x2) / (x1 x2 - 1), x4 = x1.
/// Requires x1 x2 > 1.
std::optional<Point4<Rational>> v_point_r1(const Rational& x1, const Rational& x2);

/// Float point of V for r != 2, solving for x3 by bisection. The defining
/// function F(x3) = (x2^r + x3^r)^r + x1^(2r) - x1^r x2 x3 is convex with
/// F(0) > 0; `upper_branch` selects the larger root. Empty when F > 0.
std::optional<Point4<double>> v_point_float(int r, double x1, double x2,
                                            bool upper_branch = true);

}  // namespace clusterdyn
