#pragma once

#include <cstdint>
#include <random>

#include "clusterdyn/gamma.hpp"
#include "clusterdyn/maps.hpp"

namespace clusterdyn {

using Rng = std::mt19937_64;

/// Uniform rational n/d with d in [1, max_den] and n/d in (0, max_value].
inline Rational random_rational(Rng& rng, long max_value = 10, long max_den = 10) {
  const long d = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long n = std::uniform_int_distribution<long>(1, max_value * d)(rng);
  return Rational(n, d);
}

inline Point4<Rational> random_point4(Rng& rng, long max_value = 10, long max_den = 10) {
  return {random_rational(rng, max_value, max_den), random_rational(rng, max_value, max_den),
          random_rational(rng, max_value, max_den), random_rational(rng, max_value, max_den)};
}

inline Point2<Rational> random_point2(Rng& rng, long max_value = 10, long max_den = 10) {
  return {random_rational(rng, max_value, max_den), random_rational(rng, max_value, max_den)};
}

/// Gamma element with entries in [-bound, bound] and rational scales drawn by
/// random_rational.
inline GammaElement random_gamma(Rng& rng, long bound = 5) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  while (true) {
    const long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c != 1) continue;
    return GammaElement(a, b, c, d, PosReal::from_rational(random_rational(rng)),
                        PosReal::from_rational(random_rational(rng)));
  }
}

}  // namespace clusterdyn
