#pragma once

#include <array>
#include <cstdint>

#include "clusterdyn/bigfloat.hpp"
#include "clusterdyn/maps.hpp"

namespace clusterdyn {

using Matrix4d = std::array<std::array<double, 4>, 4>;
using Matrix4q = std::array<std::array<Rational, 4>, 4>;

/// Skew-symmetric integer matrix of a 4-node quiver.
class ExchangeMatrix {
 public:
  using Entries = std::array<std::array<long, 4>, 4>;

  ExchangeMatrix() = default;
  /// Throws Error unless the entries are skew-symmetric.
  explicit ExchangeMatrix(const Entries& entries);

  long operator()(int i, int j) const { return b_[i][j]; }
  const Entries& entries() const { return b_; }
  int rank() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  Entries b_{};
};

/// Recovers B_r from the requirement that phi_r preserves the presymplectic
/// form sum b_ij/(x_i x_j) dx_i ^ dx_j. The invariance is linear in the six
/// upper-triangular entries and is solved exactly over Q at `num_points`
/// seeded random points with coordinates n/d, n,d in [1,10]. The solution
/// line is scaled to coprime integers with the first nonzero entry of
/// (b12, b13, b14, b23, b24, b34) positive.
ExchangeMatrix derive_b_matrix(int r, std::uint64_t seed = 0, int num_points = 6);

/// Entry (i,j) is b_ij / (x_i x_j).
Matrix4d omega_at(const ExchangeMatrix& b, const Point4<double>& x,
                  const Precision& prec = {});
Matrix4d omega_at(const ExchangeMatrix& b, const Point4<Rational>& x,
                  const Precision& prec = {});

/// Exact Jacobian of phi_r; row i holds the partials of output i.
Matrix4q phi_jacobian(int r, const Point4<Rational>& x);
Matrix4d phi_jacobian(int r, const Point4<double>& x);

/// Max-norm of J^T Omega(phi_r(x)) J - Omega(x).
double check_presymplectic(int r, const ExchangeMatrix& b, const Point4<Rational>& x,
                           const Precision& prec = {});

}  // namespace clusterdyn
