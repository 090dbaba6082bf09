#include <gtest/gtest.h>

#include "clusterdyn/posreal.hpp"
#include "clusterdyn/primes.hpp"
#include "clusterdyn/random.hpp"

using namespace clusterdyn;

namespace {

PosReal pr(long n, long d = 1) { return PosReal::from_rational(Rational(n, d)); }

PosReal::ExponentMap exps(std::initializer_list<std::pair<long, Rational>> l) {
  PosReal::ExponentMap m;
  for (const auto& [p, e] : l) m[BigInt(p)] = e;
  return m;
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational::parse("3e-2"), Rational(3, 100));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, CanonicalForm) {
  const Rational q(BigInt(10), BigInt(-4));
  EXPECT_EQ(q.num(), -5);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(0, 7).den(), 1);
  EXPECT_EQ(q.to_string(), "-5/2");
}

TEST(Rational, ArithmeticAndFloor) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(floor(Rational(-7, 2)), Rational(-4));
  EXPECT_EQ(floor(Rational(7, 2)), Rational(3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Primes, SmallAndLarge) {
  EXPECT_TRUE(is_prime(BigInt(2)));
  EXPECT_FALSE(is_prime(BigInt(1)));
  EXPECT_FALSE(is_prime(BigInt(561)));  // Carmichael
  EXPECT_TRUE(is_prime(BigInt("1000000007")));
  const auto f = factor(BigInt("600851475143"));
  EXPECT_EQ(f, (std::map<BigInt, long>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}}));
  const auto g = factor(BigInt(1000000007) * BigInt(998244353));
  EXPECT_EQ(g.size(), 2u);
}

TEST(PosReal, FromRationalExamples) {
  EXPECT_TRUE(pr(1).exponents().empty());
  EXPECT_EQ(pr(12).exponents(), exps({{2, 2}, {3, 1}}));
  EXPECT_EQ(pr(9, 2).exponents(), exps({{3, 2}, {2, -1}}));
  EXPECT_THROW(PosReal::from_rational(Rational(0)), NonPositiveInput);
  EXPECT_THROW(PosReal::from_rational(Rational(-3, 2)), NonPositiveInput);
}

TEST(PosReal, PowExamples) {
  // 2^(1/(2-3)) = 1/2, the fixed-point coordinate at r = 3.
  EXPECT_EQ(PosReal(2).pow(Rational(1, 2 - 3)).exponents(), exps({{2, -1}}));
  EXPECT_TRUE(PosReal().pow(Rational(7, 3)).is_one());
  EXPECT_EQ(pr(9, 2).pow(Rational(1, 3)).exponents(),
            exps({{3, Rational(2, 3)}, {2, Rational(-1, 3)}}));
}

TEST(PosReal, CmpOneExamples) {
  EXPECT_EQ(PosReal().cmp_one(), std::strong_ordering::equal);
  EXPECT_EQ(PosReal(2).cmp_one(), std::strong_ordering::greater);
  EXPECT_EQ(PosReal::from_exponents(exps({{2, 3}, {3, -2}})).cmp_one(),
            std::strong_ordering::less);
  // 2^(1/2) * 3^(-1/3): log = 0.3466 - 0.3662 < 0.
  EXPECT_EQ((PosReal(2).pow(Rational(1, 2)) / PosReal(3).pow(Rational(1, 3))).cmp_one(),
            std::strong_ordering::less);
}

TEST(PosReal, ToFloatExamples) {
  EXPECT_EQ(PosReal().to_double(), 1.0);
  EXPECT_EQ(PosReal(2).to_double(), 2.0);
  EXPECT_EQ(PosReal::from_exponents(exps({{3, 2}, {2, -1}})).to_double(), 4.5);
  EXPECT_NEAR(PosReal(2).pow(Rational(1, 2)).to_double(), std::sqrt(2.0), 1e-16);
  EXPECT_THROW(PosReal(10).pow(400L).to_double(), Overflow);
}

TEST(PosReal, NonPrimeBasesAreCanonicalUpToValue) {
  const PosReal a = PosReal(12).pow(Rational(1, 2));
  const PosReal b = PosReal(2) * PosReal(3).pow(Rational(1, 2));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(PosReal(4).pow(Rational(1, 2)).is_rational());
  EXPECT_EQ(PosReal(4).pow(Rational(1, 2)), PosReal(2));
  EXPECT_FALSE((PosReal(6).pow(Rational(1, 2)) * PosReal(2).pow(Rational(1, 2))).is_rational());
  EXPECT_EQ(PosReal(6).pow(Rational(1, 2)) * PosReal(2).pow(Rational(1, 2)),
            PosReal(2) * PosReal(3).pow(Rational(1, 2)));
}

TEST(PosReal, SumWhenRatioIsRational) {
  const PosReal c = PosReal(3).pow(Rational(1, 3));
  EXPECT_EQ(c + c, PosReal(2) * c);
  EXPECT_EQ(PosReal(1) + PosReal(2), PosReal(3));
  EXPECT_THROW(PosReal(2) + c, NotRepresentable);
}

TEST(PosReal, ParseRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const PosReal x = PosReal::from_rational(random_rational(rng, 50, 50))
                          .pow(Rational(std::uniform_int_distribution<long>(-5, 5)(rng),
                                        std::uniform_int_distribution<long>(1, 6)(rng)));
    EXPECT_EQ(PosReal::parse(x.to_string()), x) << x.to_string();
  }
  EXPECT_EQ(PosReal::parse("5*3^(2/3)"), PosReal(5) * PosReal(3).pow(Rational(2, 3)));
  EXPECT_EQ(PosReal::parse("2^-1"), pr(1, 2));
  EXPECT_THROW(PosReal::parse("0"), ParseError);
  EXPECT_THROW(PosReal::parse("2*"), ParseError);
  EXPECT_THROW(PosReal::parse("x^2"), ParseError);
}

TEST(PosRealProperty, RationalRoundTripThroughFloat) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Rational q = random_rational(rng, 1000, 1000);
    EXPECT_NEAR(PosReal::from_rational(q).to_double(), q.to_double(),
                1e-15 * q.to_double());
  }
}

TEST(PosRealProperty, GroupLaws) {
  Rng rng(2);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  auto random_posreal = [&] {
    return PosReal::from_rational(random_rational(rng, 30, 30)).pow(Rational(num(rng), den(rng)));
  };
  for (int i = 0; i < 100; ++i) {
    const PosReal a = random_posreal(), b = random_posreal(), c = random_posreal();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.pow(-1L)).is_one());
    const Rational e(num(rng), den(rng)), f(num(rng), den(rng));
    EXPECT_EQ(a.pow(e).pow(f), a.pow(e * f));
  }
}

TEST(PosRealProperty, CmpOneAgreesWithHighPrecisionFloat) {
  // The reference value is built directly with MPFR pow from the same
  // random ingredients, bypassing PosReal's log machinery.
  Rng rng(3);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational b1 = random_rational(rng, 20, 20), b2 = random_rational(rng, 20, 20);
    const Rational e1(num(rng), den(rng)), e2(num(rng), den(rng));
    const PosReal x = PosReal::from_rational(b1).pow(e1) * PosReal::from_rational(b2).pow(e2);

    mpfr_t v, t, e;
    mpfr_inits2(256, v, t, e, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(v, b1.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(e, e1.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_pow(v, v, e, MPFR_RNDN);
    mpfr_set_q(t, b2.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(e, e2.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_pow(t, t, e, MPFR_RNDN);
    mpfr_mul(v, v, t, MPFR_RNDN);
    mpfr_sub_ui(v, v, 1, MPFR_RNDN);
    const bool clearly_nonzero = mpfr_cmpabs(v, BigFloat(1e-60, 256).get()) > 0;
    const int sign = mpfr_sgn(v);
    mpfr_clears(v, t, e, static_cast<mpfr_ptr>(nullptr));

    if (x.is_one()) continue;
    ASSERT_TRUE(clearly_nonzero);
    ++checked;
    EXPECT_EQ(x.cmp_one() > 0, sign > 0);
  }
  EXPECT_GT(checked, 900);
}

TEST(BigFloat, LogAddExpAndIntervals) {
  const BigFloat a(1000.0, 128), b(999.0, 128);
  EXPECT_NEAR(log_add_exp(a, b).to_double(), 1000 + std::log1p(std::exp(-1.0)), 1e-12);
  const Interval li = Interval::log_of(Rational(3), 64);
  const BigFloat l3 = log_rational(Rational(3), 200);
  EXPECT_FALSE(l3 < li.lo());
  EXPECT_FALSE(li.hi() < l3);
  EXPECT_EQ(li.certain_sign(), 1);
  EXPECT_THROW(Precision(32), Error);
}
