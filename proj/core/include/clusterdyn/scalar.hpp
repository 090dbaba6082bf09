#pragma once

// Uniform helpers over the coordinate types used by the maps: Rational and
// PosReal (exact), and binary floating types (double, long double, or any
// boost.multiprecision float).

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>

#include "clusterdyn/errors.hpp"
#include "clusterdyn/posreal.hpp"
#include "clusterdyn/rational.hpp"

namespace clusterdyn {

template <class T>
concept ExactScalar = std::same_as<T, Rational> || std::same_as<T, PosReal>;

template <class T>
concept FloatScalar = !ExactScalar<T> && requires(T a, T b) {
  a + b;
  a * b;
  a / b;
  a < b;
};

template <class T>
concept Scalar = ExactScalar<T> || FloatScalar<T>;

template <Scalar T>
T ipow(const T& x, long e) {
  if constexpr (ExactScalar<T>) {
    return x.pow(e);
  } else {
    if (e < 0) return T(1) / ipow(x, -e);
    T result(1);
    T base = x;
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) result = result * base;
      base = base * base;
    }
    return result;
  }
}

/// r-th root; exact scalars become PosReal.
inline PosReal nth_root(const PosReal& x, long r) { return x.pow(Rational(1, r)); }
inline PosReal nth_root(const Rational& x, long r) {
  return PosReal::from_rational(x).pow(Rational(1, r));
}
template <FloatScalar T>
T nth_root(const T& x, long r) {
  using std::pow;
  return pow(x, T(1) / T(r));
}

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(const PosReal& x) { return x.to_double(); }
template <FloatScalar T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

/// Natural log rounded to double; exact inputs are evaluated with `bits` of
/// working precision.
inline double log_value(const Rational& x, long bits = 64) {
  return PosReal::from_rational(x).log_value(bits);
}
inline double log_value(const PosReal& x, long bits = 64) { return x.log_value(bits); }
template <FloatScalar T>
double log_value(const T& x, long = 64) {
  using std::log;
  return static_cast<double>(log(x));
}

/// Natural log of an exact scalar at `bits` of precision.
inline BigFloat log_float(const Rational& x, long bits) {
  if (x.sign() <= 0) throw NonPositiveInput("log of a nonpositive value");
  return log_rational(x, bits);
}
inline BigFloat log_float(const PosReal& x, long bits) { return x.log_float(bits); }

/// Working precision for quadratic forms in logs of exact scalars, so that
/// the only rounding error left is the final conversion to double.
inline long log_form_bits(long bits) { return bits < 256 ? 256 : bits; }

inline std::size_t bit_size(const Rational& x) { return x.bit_size(); }
inline std::size_t bit_size(const PosReal& x) { return x.bit_size(); }
template <FloatScalar T>
std::size_t bit_size(const T&) {
  return 0;
}

/// Exact equality for exact scalars; relative tolerance otherwise.
template <Scalar T>
bool scalar_equal(const T& a, const T& b, double rel_tol = 1e-9) {
  if constexpr (ExactScalar<T>) {
    return a == b;
  } else {
    using std::abs;
    const T scale = abs(a) < abs(b) ? abs(b) : abs(a);
    return !(abs(a - b) > T(rel_tol) * scale);
  }
}

inline std::string scalar_to_string(const Rational& x) { return x.to_string(); }
inline std::string scalar_to_string(const PosReal& x) { return x.to_string(); }

template <FloatScalar To>
To from_bigfloat(const BigFloat& x) {
  if constexpr (std::is_floating_point_v<To>) {
    return static_cast<To>(mpfr_get_ld(x.get(), MPFR_RNDN));
  } else {
    return To(x.to_string(45));
  }
}

/// Scalar conversion between coordinate types.
template <class To, class From>
To convert(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, PosReal> && std::is_same_v<From, Rational>) {
    return PosReal::from_rational(x);
  } else if constexpr (std::is_same_v<From, Rational> && FloatScalar<To>) {
    return from_bigfloat<To>(BigFloat(x, 128));
  } else if constexpr (std::is_same_v<From, PosReal> && FloatScalar<To>) {
    return from_bigfloat<To>(x.to_float(128));
  } else {
    static_assert(FloatScalar<To> && FloatScalar<From>, "unsupported conversion");
    return static_cast<To>(x);
  }
}

}  // namespace clusterdyn
