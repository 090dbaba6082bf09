#include "clusterdyn/primes.hpp"

#include <algorithm>
#include <array>

#include "clusterdyn/errors.hpp"

namespace clusterdyn {

namespace {

constexpr std::array<unsigned long, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                   19, 23, 29, 31, 37, 41};
constexpr unsigned long kTrialLimit = 1 << 16;

bool strong_probable_prime(const BigInt& n, unsigned long base) {
  BigInt d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  BigInt x;
  BigInt a(base);
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant; returns a nontrivial factor of composite odd n.
BigInt rho_factor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2;
    BigInt x;
    BigInt q = 1;
    BigInt g = 1;
    BigInt ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          BigInt diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        BigInt diff = x - ys;
        BigInt ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned long p : kBases) {
    if (!strong_probable_prime(n, p)) return false;
  }
  return true;
}

std::map<BigInt, long> factor(const BigInt& n) {
  if (n < 1) throw NonPositiveInput("factor: argument must be positive");
  std::map<BigInt, long> out;
  BigInt m = n;
  for (unsigned long p = 2; p < kTrialLimit && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[BigInt(p)];
    }
    if (m < BigInt(p) * p) break;
  }
  if (m > 1) factor_into(m, out);
  return out;
}

}  // namespace clusterdyn
