#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterdyn/bigfloat.hpp"
#include "clusterdyn/gamma.hpp"
#include "clusterdyn/varieties.hpp"

namespace clusterdyn {

/// Orbit fate of a point of R^4_+ under phi_r.
struct OrbitClass4 {
  enum class Kind {
    Fixed,
    Periodic,
    ConvergesToF,
    ConvergesTo4Cycle,
    ConvergesToOrigin,
    Diverges,
    Undecidable,
  };
  Kind kind = Kind::Undecidable;
  int period = 0;  ///< minimal period for Fixed (1) and Periodic

  friend bool operator==(const OrbitClass4&, const OrbitClass4&) = default;
};

std::string to_string(const OrbitClass4& c);
/// Inverse of to_string; throws ParseError.
OrbitClass4 parse_orbit_class(const std::string& s);

/// F = (2,2,2,2) for r = 1, none for r = 2, (2^(1/(2-r)), ...) for r > 2.
std::optional<Point4<PosReal>> fixed_point(int r);

/// phi_r on C^r_(1,1) as a Gamma element: (y, 2 y^r / x).
GammaElement restricted_bar_element(int r);
/// phi_r^(4) on C^r_(p,q) as a Gamma element, with lambda = l on the variety.
GammaElement restricted_tilde_element(int r, const PosReal& lambda);

/// Point of R^4_+ stored as natural logs of its coordinates at a fixed
/// precision, so that long orbits neither overflow nor underflow.
struct LogPoint4 {
  std::array<BigFloat, 4> L;
};

LogPoint4 to_log_point(const Point4<Rational>& x, long bits);
LogPoint4 to_log_point(const Point4<PosReal>& x, long bits);
/// phi_r evaluated with log-sum-exp.
LogPoint4 phi_log(int r, const LogPoint4& x);
double J_bar_log(int r, const LogPoint4& x);
double J_tilde_log(int r, const LogPoint4& x);
/// log l(x).
BigFloat l_function_log(int r, const LogPoint4& x);

/// First integral of the restricted map on C^r_(1,1), in the (z1, z2) chart:
///   log^2 z1 - r log z1 log z2 + log^2 z2 - log 2 log(z1 z2).
template <Scalar T>
double J_bar(int r, const Point2<T>& z, const Precision& prec = {}) {
  if constexpr (ExactScalar<T>) {
    const long bits = log_form_bits(prec.bits);
    LogPoint4 x{{log_float(z.x, bits), log_float(z.y, bits), BigFloat(0.0, bits),
                 BigFloat(0.0, bits)}};
    return J_bar_log(r, x);
  }
  const double u = log_value(z.x, prec.bits);
  const double v = log_value(z.y, prec.bits);
  return u * u - r * u * v + v * v - std::log(2.0) * (u + v);
}

/// First integral of phi_r^(4) on each C^r_(p,q):
///   log^2(z1 z4) - r^2 log z1 log z4 - log l(z) log(z1 z4).
template <Scalar T>
double J_tilde(int r, const Point4<T>& z, const Precision& prec = {}) {
  if constexpr (ExactScalar<T>) {
    const long bits = log_form_bits(prec.bits);
    return J_tilde_log(r, LogPoint4{{log_float(z.x1, bits), log_float(z.x2, bits),
                                     log_float(z.x3, bits), log_float(z.x4, bits)}});
  }
  const double u = log_value(z.x1, prec.bits);
  const double v = log_value(z.x4, prec.bits);
  const double l = log_value(l_function(r, z), prec.bits);
  return (u + v) * (u + v) - static_cast<double>(r) * r * u * v - l * (u + v);
}

/// Orbit classification from the restricted maps and their normal forms.
OrbitClass4 classify(int r, const Point4<PosReal>& x);
OrbitClass4 classify(int r, const Point4<Rational>& x);

struct BruteForceOptions {
  std::size_t max_steps = 10000;
  double escape = 1e8;
  double capture = 1e-8;
  /// Bit budget for the exact recurrence check over the first 12 steps.
  std::size_t bit_budget = 1 << 16;
};

/// Independent oracle for classify: exact recurrence within 12 steps, then
/// double-precision iteration in log coordinates. Diverges once every
/// coordinate exceeds `escape`, ConvergesToOrigin once every coordinate is
/// below 1/escape, ConvergesToF / ConvergesTo4Cycle once the log-distance
/// to F / to the period-4 point of the current variety drops below
/// `capture`; Undecidable after max_steps.
OrbitClass4 brute_force_classify(int r, const Point4<Rational>& x,
                                 const BruteForceOptions& opts = {});
OrbitClass4 brute_force_classify(int r, const Point4<PosReal>& x,
                                 const BruteForceOptions& opts = {});

struct OrbitRecord {
  int r = 1;
  Point4<PosReal> start;
  OrbitClass4 cls;
  /// The conserved quantity along the recorded orbit: J_bar on C^r_(1,1),
  /// J_tilde at every fourth iterate elsewhere; empty for r <= 2.
  std::vector<double> J_values;
  /// Labels of the first four iterates.
  std::vector<VarietyLabel<PosReal>> variety_labels;

  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct RecordOptions {
  std::size_t j_samples = 6;
  long bits = 1024;
  std::size_t bit_budget = 1'000'000;
};

OrbitRecord make_orbit_record(int r, const Point4<PosReal>& x, const RecordOptions& opts = {});

}  // namespace clusterdyn
