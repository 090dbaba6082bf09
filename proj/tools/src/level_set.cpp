#include "clusterdyn/cli/level_set.hpp"

#include <cmath>
#include <string>

#include "clusterdyn/errors.hpp"

namespace clusterdyn::cli {

std::vector<LevelSetPoint> level_set(long k, double value, std::size_t n, double range) {
  if (n == 0) throw Error("level_set needs at least one sample");
  if (!(range > 0)) throw Error("level_set range must be positive");
  const double kk = static_cast<double>(k);
  const double a = kk * kk - 4.0;  // discriminant is a u^2 + 4 value
  auto empty = [&] {
    return EmptyLevelSet("I_" + std::to_string(k) + " never takes the value " +
                         std::to_string(value));
  };

  // Sample u on [lo, hi]; when `mirror` is set, every other sample is taken
  // from [-hi, -lo] instead.
  double lo = -range;
  double hi = range;
  bool mirror = false;
  if (a < 0) {
    if (value < 0) throw empty();
    lo = -std::sqrt(4 * value / -a);
    hi = -lo;
  } else if (a == 0) {
    if (value < 0) throw empty();
  } else if (value < 0) {
    lo = std::sqrt(-4 * value / a);
    hi = lo + range;
    mirror = true;
  }

  std::vector<LevelSetPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t slot = mirror ? i / 2 : i;
    const std::size_t slots = mirror ? (n + 1) / 2 : n;
    const double t = slots == 1 ? 0.5 : static_cast<double>(slot) / static_cast<double>(slots - 1);
    double u = lo + t * (hi - lo);
    if (mirror && i % 2 == 1) u = -u;
    const double disc = std::max(0.0, a * u * u + 4 * value);
    const double sign = ((mirror ? i / 2 : i) % 2 == 0) ? 1.0 : -1.0;
    out.push_back({u, (kk * u + sign * std::sqrt(disc)) / 2});
  }
  return out;
}

}  // namespace clusterdyn::cli
