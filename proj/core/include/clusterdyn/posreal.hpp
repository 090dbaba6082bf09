#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "clusterdyn/bigfloat.hpp"
#include "clusterdyn/rational.hpp"

namespace clusterdyn {

/// Exact positive real of the form prod_p p^(q_p) with rational exponents.
///
/// Stored as a positive rational coefficient times a radical part
/// prod b^e whose bases are pairwise coprime integers > 1, none a perfect
/// power, with exponents strictly between 0 and 1. Bases are kept coprime by
/// gcd refinement, so no operation ever factors an integer. Under these
/// invariants a nonempty radical is irrational, which makes is_one and
/// is_rational exact; two values are equal iff their quotient is 1.
class PosReal {
 public:
  using ExponentMap = std::map<BigInt, Rational>;

  /// The value 1.
  PosReal() : coeff_(1) {}
  explicit PosReal(long n);

  /// Throws NonPositiveInput if q <= 0.
  static PosReal from_rational(const Rational& q);
  /// Keys must be integers > 1 (primes in the usual case).
  static PosReal from_exponents(const ExponentMap& exps);
  /// Inverse of to_string: factors "b" or "b^(e)" / "b^e" joined by '*',
  /// with b a positive rational and e a rational. Throws ParseError.
  static PosReal parse(std::string_view text);

  /// Full prime-exponent vector. Factors every base and the coefficient, so
  /// it is meant for small values only.
  ExponentMap exponents() const;

  const Rational& coefficient() const { return coeff_; }
  const ExponentMap& radical() const { return radical_; }

  bool is_one() const { return radical_.empty() && coeff_ == Rational(1); }
  bool is_rational() const { return radical_.empty(); }
  std::optional<Rational> to_rational() const;

  PosReal pow(const Rational& e) const;
  PosReal pow(long e) const { return pow(Rational(e)); }
  PosReal inverse() const { return pow(-1L); }

  /// Less/Equal/Greater against 1, refining interval precision from 64 bits
  /// by doubling up to 16384 bits. Throws PrecisionExhausted past the cap.
  std::strong_ordering cmp_one() const;

  /// Enclosure of log(value).
  Interval log_interval(long bits) const;
  /// log(value) at `bits` of precision.
  BigFloat log_float(long bits) const;
  /// log(value) rounded to a double.
  double log_value(long bits = 64) const;

  /// Relative error at most 2^(1-bits).
  BigFloat to_float(long bits) const;
  /// Throws Overflow outside the double range.
  double to_double() const;

  /// Sum of two values with rational ratio; NotRepresentable otherwise.
  friend PosReal operator+(const PosReal& a, const PosReal& b);
  friend PosReal operator*(const PosReal& a, const PosReal& b);
  friend PosReal operator/(const PosReal& a, const PosReal& b);
  PosReal& operator*=(const PosReal& o) { return *this = *this * o; }
  PosReal& operator/=(const PosReal& o) { return *this = *this / o; }
  PosReal& operator+=(const PosReal& o) { return *this = *this + o; }

  friend bool operator==(const PosReal& a, const PosReal& b);
  friend std::strong_ordering operator<=>(const PosReal& a, const PosReal& b) {
    return (a / b).cmp_one();
  }

  /// e.g. "3/2", "2^(1/3)", "5*3^(2/3)".
  std::string to_string() const;
  /// Bits of the coefficient plus the bits of every radical term.
  std::size_t bit_size() const;

 private:
  PosReal(Rational coeff, ExponentMap radical);
  void normalize();

  Rational coeff_;
  ExponentMap radical_;
};

}  // namespace clusterdyn
