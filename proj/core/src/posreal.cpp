#include "clusterdyn/posreal.hpp"

#include <utility>
#include <vector>

#include "clusterdyn/errors.hpp"
#include "clusterdyn/primes.hpp"

namespace clusterdyn {

namespace {

constexpr long kFirstBits = 64;
constexpr long kMaxBits = 16384;

Rational integer_power(const BigInt& p, const BigInt& e) {
  return Rational(p).pow(e.get_si());
}

// Largest k with n = t^k; replaces n by t.
long strip_power(BigInt& n) {
  long total = 1;
  while (mpz_perfect_power_p(n.get_mpz_t()) && n > 1) {
    const auto bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    BigInt t;
    bool found = false;
    for (long k = 2; k <= bits && !found; ++k) {
      if (mpz_root(t.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) != 0) {
        n = t;
        total *= k;
        found = true;
      }
    }
    if (!found) break;
  }
  return total;
}

// Rewrites prod b^e over a pairwise coprime set of bases, none of which is a
// perfect power, by splitting off common divisors (gcd refinement).
void refine_bases(PosReal::ExponentMap& rad) {
  std::vector<std::pair<BigInt, Rational>> work(rad.begin(), rad.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), work[i].first.get_mpz_t(), work[j].first.get_mpz_t());
        if (g == 1) continue;
        const Rational e = work[i].second + work[j].second;
        work[i].first /= g;
        work[j].first /= g;
        work.emplace_back(g, e);
        changed = true;
      }
    }
    std::erase_if(work, [](const auto& be) { return be.first == 1 || be.second.is_zero(); });
  }
  rad.clear();
  for (auto& [b, e] : work) {
    BigInt base = b;
    const long k = strip_power(base);
    rad[base] += e * Rational(k);
  }
  std::erase_if(rad, [](const auto& be) { return be.second.is_zero(); });
}

}  // namespace

PosReal::PosReal(long n) : coeff_(n) {
  if (n <= 0) throw NonPositiveInput("PosReal requires a positive value");
}

PosReal::PosReal(Rational coeff, ExponentMap radical)
    : coeff_(std::move(coeff)), radical_(std::move(radical)) {
  normalize();
}

PosReal PosReal::from_rational(const Rational& q) {
  if (q.sign() <= 0) throw NonPositiveInput("PosReal requires q > 0, got " + q.to_string());
  return PosReal(q, {});
}

PosReal PosReal::from_exponents(const ExponentMap& exps) {
  for (const auto& [b, e] : exps) {
    if (b < 2) throw Error("PosReal bases must be integers > 1");
  }
  return PosReal(Rational(1), exps);
}

PosReal PosReal::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty PosReal");
  PosReal out;
  while (!text.empty()) {
    const std::size_t star = text.find('*');
    std::string_view factor = text.substr(0, star);
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (star != std::string_view::npos && text.empty()) throw ParseError("trailing '*'");

    const std::size_t caret = factor.find('^');
    try {
      const Rational base = Rational::parse(factor.substr(0, caret));
      if (base.sign() <= 0) throw ParseError("PosReal factor must be positive");
      Rational e(1);
      if (caret != std::string_view::npos) {
        std::string_view es = factor.substr(caret + 1);
        if (es.size() >= 2 && es.front() == '(' && es.back() == ')') {
          es = es.substr(1, es.size() - 2);
        }
        e = Rational::parse(es);
      }
      out *= from_rational(base).pow(e);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError("bad PosReal factor '" + std::string(factor) + "': " + ex.what());
    }
  }
  return out;
}

void PosReal::normalize() {
  refine_bases(radical_);
  for (auto it = radical_.begin(); it != radical_.end();) {
    Rational& e = it->second;
    const BigInt whole = floor_div(e.num(), e.den());
    if (whole != 0) {
      coeff_ *= integer_power(it->first, whole);
      e -= Rational(whole);
    }
    it = e.is_zero() ? radical_.erase(it) : std::next(it);
  }
}

PosReal::ExponentMap PosReal::exponents() const {
  ExponentMap out;
  for (const auto& [b, f] : radical_) {
    for (const auto& [p, k] : factor(b)) out[p] += f * Rational(k);
  }
  for (const auto& [p, k] : factor(coeff_.num())) out[p] += Rational(k);
  for (const auto& [p, k] : factor(coeff_.den())) out[p] -= Rational(k);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

std::optional<Rational> PosReal::to_rational() const {
  if (!radical_.empty()) return std::nullopt;
  return coeff_;
}

PosReal PosReal::pow(const Rational& e) const {
  if (e.is_zero()) return PosReal();
  if (e.is_integer()) {
    ExponentMap rad = radical_;
    for (auto& [b, f] : rad) f *= e;
    return PosReal(coeff_.pow(e.num().get_si()), std::move(rad));
  }
  ExponentMap rad = radical_;
  if (coeff_.num() != 1) rad[coeff_.num()] += Rational(1);
  if (coeff_.den() != 1) rad[coeff_.den()] -= Rational(1);
  refine_bases(rad);
  for (auto& [b, f] : rad) f *= e;
  return PosReal(Rational(1), std::move(rad));
}

PosReal operator*(const PosReal& a, const PosReal& b) {
  PosReal::ExponentMap rad = a.radical_;
  for (const auto& [p, f] : b.radical_) rad[p] += f;
  return PosReal(a.coeff_ * b.coeff_, std::move(rad));
}

PosReal operator/(const PosReal& a, const PosReal& b) {
  return a * b.inverse();
}

PosReal operator+(const PosReal& a, const PosReal& b) {
  const PosReal ratio = a / b;
  if (!ratio.is_rational()) {
    throw NotRepresentable("sum of " + a.to_string() + " and " + b.to_string() +
                           " is not a product of rational powers");
  }
  return b * PosReal(ratio.coeff_ + Rational(1), {});
}

bool operator==(const PosReal& a, const PosReal& b) {
  if (a.coeff_ == b.coeff_ && a.radical_ == b.radical_) return true;
  return (a / b).is_one();
}

Interval PosReal::log_interval(long bits) const {
  Interval acc = Interval::log_of(coeff_, bits);
  for (const auto& [p, f] : radical_) {
    acc = acc + Interval::log_of(Rational(p), bits).scaled(f);
  }
  return acc;
}

BigFloat PosReal::log_float(long bits) const {
  BigFloat acc = log_rational(coeff_, bits);
  for (const auto& [p, f] : radical_) {
    acc = acc + log_rational(Rational(p), bits) * BigFloat(f, bits);
  }
  return acc;
}

double PosReal::log_value(long bits) const { return log_float(bits).to_double(); }

std::strong_ordering PosReal::cmp_one() const {
  if (is_one()) return std::strong_ordering::equal;
  if (radical_.empty()) return coeff_ <=> Rational(1);
  for (long bits = kFirstBits; bits <= kMaxBits; bits *= 2) {
    const int s = log_interval(bits).certain_sign();
    if (s > 0) return std::strong_ordering::greater;
    if (s < 0) return std::strong_ordering::less;
  }
  throw PrecisionExhausted("cannot compare " + to_string() + " with 1");
}

BigFloat PosReal::to_float(long bits) const {
  const long work = bits + 64;
  BigFloat acc(coeff_, work);
  for (const auto& [p, f] : radical_) {
    // 0 < f < 1, so the exponent stays small and exp() keeps full precision.
    acc = acc * exp(log_rational(Rational(p), work) * BigFloat(f, work));
  }
  BigFloat out(bits);
  mpfr_set(out.get(), acc.get(), MPFR_RNDN);
  return out;
}

double PosReal::to_double() const { return to_float(53).to_double(); }

std::string PosReal::to_string() const {
  std::string s;
  if (coeff_ != Rational(1) || radical_.empty()) s = coeff_.to_string();
  for (const auto& [p, f] : radical_) {
    if (!s.empty()) s += "*";
    s += p.get_str() + "^(" + f.to_string() + ")";
  }
  return s;
}

std::size_t PosReal::bit_size() const {
  std::size_t n = coeff_.bit_size();
  for (const auto& [p, f] : radical_) {
    n += mpz_sizeinbase(p.get_mpz_t(), 2) + f.bit_size();
  }
  return n;
}

}  // namespace clusterdyn
