#pragma once

#include <cstddef>
#include <vector>

namespace clusterdyn::cli {

struct LevelSetPoint {
  double u;  ///< log x
  double v;  ///< log y
};

/// n points of {I_k = value} in log coordinates, from the quadratic
///   v^2 - k u v + (u^2 - value) = 0
/// solved for v at evenly spaced u, alternating the two roots. Unbounded
/// branches are sampled over |u| <= range beyond their start. Throws
/// EmptyLevelSet when the level set has no real points.
std::vector<LevelSetPoint> level_set(long k, double value, std::size_t n, double range = 3.0);

}  // namespace clusterdyn::cli
