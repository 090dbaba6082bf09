#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusterdyn/errors.hpp"
#include "clusterdyn/scalar.hpp"

namespace clusterdyn {

/// Point of the positive orthant R^4_+.
template <Scalar T>
struct Point4 {
  T x1, x2, x3, x4;

  friend bool operator==(const Point4&, const Point4&) = default;
};

/// Point of the positive quadrant R^2_+.
template <Scalar T>
struct Point2 {
  T x, y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

template <class To, class From>
Point4<To> convert_point(const Point4<From>& p) {
  return {convert<To>(p.x1), convert<To>(p.x2), convert<To>(p.x3), convert<To>(p.x4)};
}

template <class To, class From>
Point2<To> convert_point(const Point2<From>& p) {
  return {convert<To>(p.x), convert<To>(p.y)};
}

template <Scalar T>
bool is_positive(const T& v) {
  if constexpr (std::same_as<T, PosReal>) {
    return true;
  } else if constexpr (std::same_as<T, Rational>) {
    return v.sign() > 0;
  } else {
    return v > T(0);
  }
}

template <Scalar T>
void require_positive(const Point4<T>& p) {
  if (!is_positive(p.x1) || !is_positive(p.x2) || !is_positive(p.x3) ||
      !is_positive(p.x4)) {
    throw NonPositiveInput("point must lie in the positive orthant");
  }
}

template <Scalar T>
void require_positive(const Point2<T>& p) {
  if (!is_positive(p.x) || !is_positive(p.y)) {
    throw NonPositiveInput("point must lie in the positive quadrant");
  }
}

template <Scalar T>
bool approx_equal(const Point4<T>& a, const Point4<T>& b, double rel_tol = 1e-9) {
  return scalar_equal(a.x1, b.x1, rel_tol) && scalar_equal(a.x2, b.x2, rel_tol) &&
         scalar_equal(a.x3, b.x3, rel_tol) && scalar_equal(a.x4, b.x4, rel_tol);
}

template <Scalar T>
bool approx_equal(const Point2<T>& a, const Point2<T>& b, double rel_tol = 1e-9) {
  return scalar_equal(a.x, b.x, rel_tol) && scalar_equal(a.y, b.y, rel_tol);
}

template <Scalar T>
std::size_t bit_size(const Point4<T>& p) {
  return bit_size(p.x1) + bit_size(p.x2) + bit_size(p.x3) + bit_size(p.x4);
}

/// The cluster map
///   (x1,x2,x3,x4) -> (x3, x4, (x2^r+x3^r)/x1, (x1^r x4^r + (x2^r+x3^r)^r)/(x1^r x2)).
template <Scalar T>
Point4<T> phi(int r, const Point4<T>& p) {
  const T s = ipow(p.x2, r) + ipow(p.x3, r);
  const T x1r = ipow(p.x1, r);
  return {p.x3, p.x4, s / p.x1, (x1r * ipow(p.x4, r) + ipow(s, r)) / (x1r * p.x2)};
}

struct IterOptions {
  /// Largest bit size (numerator plus denominator, summed over the four
  /// coordinates) allowed for an exact iterate.
  std::size_t bit_budget = 1'000'000;
};

/// [p, phi(p), ..., phi^n(p)]. Exact scalars throw SizeExceeded once an
/// iterate exceeds the bit budget.
template <Scalar T>
std::vector<Point4<T>> phi_iter(int r, const Point4<T>& p, std::size_t n,
                                const IterOptions& opts = {}) {
  std::vector<Point4<T>> orbit;
  orbit.reserve(n + 1);
  orbit.push_back(p);
  for (std::size_t k = 0; k < n; ++k) {
    Point4<T> next = phi(r, orbit.back());
    if constexpr (ExactScalar<T>) {
      if (bit_size(next) > opts.bit_budget) {
        throw SizeExceeded("iterate " + std::to_string(k + 1) +
                           " exceeds the bit budget of " +
                           std::to_string(opts.bit_budget));
      }
    }
    orbit.push_back(std::move(next));
  }
  return orbit;
}

/// n-fold composition of phi_r.
template <Scalar T>
Point4<T> phi_power(int r, Point4<T> p, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) p = phi(r, p);
  return p;
}

/// Globally 4-periodic map (x,y) -> (y, 1/x).
template <Scalar T>
Point2<T> psi(const Point2<T>& p) {
  return {p.y, T(1) / p.x};
}

template <Scalar T>
Point2<T> psi_power(Point2<T> p, std::size_t n) {
  for (std::size_t k = 0; k < n % 4; ++k) p = psi(p);
  return p;
}

/// Reduced symplectic map (x,y) -> (y(x^r + (1+y^r)^r)/x^r, (1+y^r)/x).
template <Scalar T>
Point2<T> hat_phi(int r, const Point2<T>& p) {
  const T one_plus = T(1) + ipow(p.y, r);
  const T xr = ipow(p.x, r);
  return {p.y * (xr + ipow(one_plus, r)) / xr, one_plus / p.x};
}

/// Semiconjugacy onto the reduced map: (x1 x4 / x2^r, x3 / x2).
template <Scalar T>
Point2<T> reduce_Pi(int r, const Point4<T>& p) {
  return {p.x1 * p.x4 / ipow(p.x2, r), p.x3 / p.x2};
}

/// Semiconjugacy onto psi: (x3 / x2, (x2^r + x3^r) / (x1 x4)).
template <Scalar T>
Point2<T> reduce_pi(int r, const Point4<T>& p) {
  return {p.x3 / p.x2, (ipow(p.x2, r) + ipow(p.x3, r)) / (p.x1 * p.x4)};
}

/// Conjugacy h_r with h_r o hat_phi_r = psi o h_r: (y, (1+y^r)/x).
template <Scalar T>
Point2<T> conj_h(int r, const Point2<T>& p) {
  return {p.y, (T(1) + ipow(p.y, r)) / p.x};
}

template <Scalar T>
Point2<T> conj_h_inv(int r, const Point2<T>& p) {
  return {(T(1) + ipow(p.x, r)) / p.y, p.x};
}

}  // namespace clusterdyn
