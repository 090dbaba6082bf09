#pragma once

#include <map>

#include "clusterdyn/rational.hpp"

namespace clusterdyn {

/// Strong Miller-Rabin test over the first thirteen prime bases. This is
/// deterministic below 3.3e24 and a strong probable-prime test above.
bool is_prime(const BigInt& n);

/// Prime factorization of n >= 1 (trial division, then Pollard-Brent rho).
std::map<BigInt, long> factor(const BigInt& n);

}  // namespace clusterdyn
