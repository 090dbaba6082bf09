#include "clusterdyn/rational.hpp"

#include <cctype>

#include "clusterdyn/errors.hpp"

namespace clusterdyn {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParseError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("malformed number: " + std::string(whole));
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') ++i;
  if (i == s.size()) throw ParseError("malformed number: " + std::string(whole));
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("malformed number: " + std::string(whole));
    }
  }
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(s.substr(0, slash), text),
                    parse_integer(s.substr(slash + 1), text));
  }

  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_integer(s.substr(e + 1), text).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    digits = std::string(s.substr(0, dot)) + std::string(frac);
    exp10 -= static_cast<long>(frac.size());
    if (digits == "-" || digits == "+" || digits.empty()) {
      throw ParseError("malformed number: " + std::string(text));
    }
  } else {
    digits = std::string(s);
  }
  Rational q(parse_integer(digits, text));
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(
                                             exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? q / Rational(ten_pow) : q * Rational(ten_pow);
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const { return v_.get_str(10); }

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (e < 0) return inverse().pow(-e);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return Rational(v_.get_den(), v_.get_num());
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational floor(const Rational& q) { return Rational(floor_div(q.num(), q.den())); }

}  // namespace clusterdyn
