#include "clusterdyn/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "clusterdyn/errors.hpp"

namespace clusterdyn {

Precision::Precision(long b, double t) : bits(b), tol(t) {
  if (bits < 53) throw Error("precision must be at least 53 bits");
  if (!(tol >= 0.0)) throw Error("tolerance must be nonnegative");
}

BigFloat::BigFloat(long bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long bits) : BigFloat(bits) {
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, long bits, mpfr_rnd_t rnd)
    : BigFloat(bits) {
  mpfr_set_q(v_, q.raw().get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(o.bits()) {
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

double BigFloat::to_double() const {
  const double d = mpfr_get_d(v_, MPFR_RNDN);
  if (std::isinf(d) && mpfr_number_p(v_)) {
    throw Overflow("value exceeds double range");
  }
  return d;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {

long max_bits(const BigFloat& a, const BigFloat& b) {
  return std::max(a.bits(), b.bits());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_bits(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_bits(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_bits(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_bits(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(bits());
  mpfr_neg(r.get(), v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.bits());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.bits());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.bits());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat log_add_exp(const BigFloat& a, const BigFloat& b) {
  const BigFloat& hi = a < b ? b : a;
  const BigFloat& lo = a < b ? a : b;
  BigFloat d = lo - hi;
  BigFloat e(d.bits());
  mpfr_exp(e.get(), d.get(), MPFR_RNDN);
  BigFloat l(d.bits());
  mpfr_log1p(l.get(), e.get(), MPFR_RNDN);
  return hi + l;
}

BigFloat log_rational(const Rational& q, long bits) {
  if (q.sign() <= 0) throw NonPositiveInput("log of a non-positive rational");
  // Extra guard bits so that the conversion error does not dominate.
  BigFloat x(q, bits + 32);
  BigFloat r(bits);
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Interval::Interval(BigFloat lo, BigFloat hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::point(const Rational& q, long bits) {
  return Interval(BigFloat(q, bits, MPFR_RNDD), BigFloat(q, bits, MPFR_RNDU));
}

Interval Interval::log_of(const Rational& q, long bits) {
  if (q.sign() <= 0) throw NonPositiveInput("log of a non-positive rational");
  BigFloat qlo(q, bits, MPFR_RNDD);
  BigFloat qhi(q, bits, MPFR_RNDU);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_log(lo.get(), qlo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), qhi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

int Interval::certain_sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
  const long bits = std::max(a.bits(), b.bits());
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const long bits = std::max(a.bits(), b.bits());
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  const long bits = std::max(a.bits(), b.bits());
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  BigFloat lo(bits);
  BigFloat hi(bits);
  BigFloat t(bits);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::scaled(const Rational& q) const {
  return *this * Interval::point(q, bits());
}

}  // namespace clusterdyn
