#include "clusterdyn/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace clusterdyn {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <Scalar T>
std::array<std::array<T, 4>, 4> jacobian(int r, const Point4<T>& x) {
  const T zero(0);
  const T s = ipow(x.x2, r) + ipow(x.x3, r);
  const T x1r = ipow(x.x1, r);
  const T rr(r);
  std::array<std::array<T, 4>, 4> j{{{zero, zero, T(1), zero},
                                     {zero, zero, zero, T(1)},
                                     {zero, zero, zero, zero},
                                     {zero, zero, zero, zero}}};
  // third output: s / x1
  j[2][0] = -s / (x.x1 * x.x1);
  j[2][1] = rr * ipow(x.x2, r - 1) / x.x1;
  j[2][2] = rr * ipow(x.x3, r - 1) / x.x1;
  // fourth output: x4^r / x2 + s^r / (x1^r x2)
  const T sr = ipow(s, r);
  const T ds = rr * ipow(s, r - 1);
  j[3][0] = -rr * sr / (x1r * x.x1 * x.x2);
  j[3][1] = -ipow(x.x4, r) / (x.x2 * x.x2) +
            (ds * rr * ipow(x.x2, r - 1) * x.x2 - sr) / (x1r * x.x2 * x.x2);
  j[3][2] = ds * rr * ipow(x.x3, r - 1) / (x1r * x.x2);
  j[3][3] = rr * ipow(x.x4, r - 1) / x.x2;
  return j;
}

const Rational& coord(const Point4<Rational>& p, int i) {
  switch (i) {
    case 0: return p.x1;
    case 1: return p.x2;
    case 2: return p.x3;
    default: return p.x4;
  }
}

double coord(const Point4<double>& p, int i) {
  switch (i) {
    case 0: return p.x1;
    case 1: return p.x2;
    case 2: return p.x3;
    default: return p.x4;
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][col].is_zero()) continue;
      const Rational f = m[k][col];
      for (int c = 0; c < cols; ++c) m[k][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(const Entries& entries) : b_(entries) {
  for (int i = 0; i < 4; ++i) {
    if (b_[i][i] != 0) throw Error("exchange matrix must have a zero diagonal");
    for (int j = 0; j < 4; ++j) {
      if (b_[i][j] != -b_[j][i]) throw Error("exchange matrix must be skew-symmetric");
    }
  }
}

int ExchangeMatrix::rank() const {
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = Rational(b_[i][j]);
  }
  return static_cast<int>(rref(m, 4).size());
}

Matrix4q phi_jacobian(int r, const Point4<Rational>& x) {
  require_positive(x);
  return jacobian(r, x);
}

Matrix4d phi_jacobian(int r, const Point4<double>& x) {
  require_positive(x);
  return jacobian(r, x);
}

ExchangeMatrix derive_b_matrix(int r, std::uint64_t seed, int num_points) {
  if (r < 1) throw Error("r must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 10);
  auto draw = [&] {
    const long n = dist(rng);
    const long d = dist(rng);
    return Rational(n) / Rational(d);
  };

  std::vector<std::vector<Rational>> rows;
  for (int s = 0; s < std::max(num_points, 6); ++s) {
    const Point4<Rational> x{draw(), draw(), draw(), draw()};
    const Point4<Rational> y = phi(r, x);
    const Matrix4q j = jacobian(r, x);
    for (const auto& [i, jj] : kPairs) {
      std::vector<Rational> row(6);
      for (std::size_t u = 0; u < kPairs.size(); ++u) {
        const auto [k, l] = kPairs[u];
        Rational c = (j[k][i] * j[l][jj] - j[l][i] * j[k][jj]) /
                     (coord(y, k) * coord(y, l));
        if (k == i && l == jj) c -= Rational(1) / (coord(x, i) * coord(x, jj));
        row[u] = c;
      }
      rows.push_back(std::move(row));
    }
  }

  const std::vector<int> pivots = rref(rows, 6);
  if (pivots.size() != 5) {
    throw DegenerateSystem("solution space has dimension " +
                           std::to_string(6 - pivots.size()) + ", expected 1");
  }
  int free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;

  std::array<Rational, 6> sol;
  sol[free_col] = Rational(1);
  for (std::size_t k = 0; k < pivots.size(); ++k) sol[pivots[k]] = -rows[k][free_col];

  BigInt lcm = 1;
  for (const auto& v : sol) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
  std::array<BigInt, 6> ints;
  BigInt g = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    ints[k] = (sol[k] * Rational(lcm)).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[k].get_mpz_t());
  }
  int sign = 0;
  for (const auto& v : ints) {
    if (v != 0) {
      sign = sgn(v);
      break;
    }
  }
  ExchangeMatrix::Entries e{};
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    const long v = BigInt(ints[k] / g * sign).get_si();
    e[i][j] = v;
    e[j][i] = -v;
  }
  return ExchangeMatrix(e);
}

Matrix4d omega_at(const ExchangeMatrix& b, const Point4<double>& x, const Precision&) {
  Matrix4d w{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = i == j ? 0.0 : static_cast<double>(b(i, j)) / (coord(x, i) * coord(x, j));
    }
  }
  return w;
}

Matrix4d omega_at(const ExchangeMatrix& b, const Point4<Rational>& x,
                  const Precision& prec) {
  require_positive(x);
  Matrix4d w{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      w[i][j] = BigFloat(Rational(b(i, j)) / (coord(x, i) * coord(x, j)), prec.bits)
                    .to_double();
    }
  }
  return w;
}

double check_presymplectic(int r, const ExchangeMatrix& b, const Point4<Rational>& x,
                           const Precision& prec) {
  const Matrix4q jq = phi_jacobian(r, x);
  Matrix4d j{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) j[i][k] = jq[i][k].to_double();
  }
  const Matrix4d outer = omega_at(b, phi(r, x), prec);
  const Matrix4d inner = omega_at(b, x, prec);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int jj = 0; jj < 4; ++jj) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) acc += j[k][i] * outer[k][l] * j[l][jj];
      }
      worst = std::max(worst, std::abs(acc - inner[i][jj]));
    }
  }
  return worst;
}

}  // namespace clusterdyn
