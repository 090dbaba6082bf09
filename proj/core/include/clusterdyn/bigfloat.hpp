#pragma once

#include <mpfr.h>

#include <string>

#include "clusterdyn/rational.hpp"

namespace clusterdyn {

/// Floating evaluation precision and comparison tolerance.
struct Precision {
  long bits = 53;
  double tol = 1e-9;

  Precision() = default;
  explicit Precision(long b, double t = 1e-9);
};

/// Owning wrapper around an mpfr_t with a fixed precision.
class BigFloat {
 public:
  explicit BigFloat(long bits = 53);
  BigFloat(double v, long bits);
  BigFloat(const Rational& q, long bits, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  /// Throws Overflow when the value does not fit in a double.
  double to_double() const;
  std::string to_string(int digits = 20) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

 private:
  mpfr_t v_;
};

BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// log(exp(a) + exp(b)) without forming the exponentials.
BigFloat log_add_exp(const BigFloat& a, const BigFloat& b);

/// log of a positive rational, correctly rounded.
BigFloat log_rational(const Rational& q, long bits);

/// Closed interval with outward-rounded endpoints.
class Interval {
 public:
  Interval(BigFloat lo, BigFloat hi);
  static Interval point(const Rational& q, long bits);
  /// Enclosure of log(q) for q > 0.
  static Interval log_of(const Rational& q, long bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  long bits() const { return lo_.bits(); }

  /// -1 / +1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval scaled(const Rational& q) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

}  // namespace clusterdyn
