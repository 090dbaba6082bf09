#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "clusterdyn/bigfloat.hpp"
#include "clusterdyn/maps.hpp"

namespace clusterdyn {

/// Monomial map (x,y) -> (alpha x^a y^b, beta x^c y^d) with rational
/// exponents and an invertible exponent matrix. Conjugators produced by the
/// normal-form reduction live here; their exponent matrix need not be
/// unimodular.
class MonomialMap {
 public:
  /// Exponent matrix in row order (a, b, c, d).
  using Exponents = std::array<Rational, 4>;

  MonomialMap() : m_{Rational(1), Rational(0), Rational(0), Rational(1)} {}
  MonomialMap(Exponents m, PosReal alpha, PosReal beta);

  const Exponents& exponents() const { return m_; }
  const PosReal& alpha() const { return alpha_; }
  const PosReal& beta() const { return beta_; }
  Rational det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Point2<PosReal> apply(const Point2<PosReal>& p) const;
  Point2<double> apply(const Point2<double>& p) const;

  MonomialMap inverse() const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  Exponents m_;
  PosReal alpha_;
  PosReal beta_;
};

/// f o g.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// Element of G: integer exponents with ad - bc = +-1.
class GElement {
 public:
  GElement() = default;
  /// Throws Error unless ad - bc = +-1.
  GElement(long a, long b, long c, long d, PosReal alpha, PosReal beta);

  long a() const { return a_; }
  long b() const { return b_; }
  long c() const { return c_; }
  long d() const { return d_; }
  long det() const { return a_ * d_ - b_ * c_; }
  long trace() const { return a_ + d_; }
  const PosReal& alpha() const { return alpha_; }
  const PosReal& beta() const { return beta_; }

  MonomialMap to_map() const;
  static GElement from_map(const MonomialMap& m);

  Point2<PosReal> apply(const Point2<PosReal>& p) const { return to_map().apply(p); }
  Point2<double> apply(const Point2<double>& p) const { return to_map().apply(p); }

  friend bool operator==(const GElement&, const GElement&) = default;

 private:
  long a_ = 1, b_ = 0, c_ = 0, d_ = 1;
  PosReal alpha_;
  PosReal beta_;
};

/// Element of Gamma: a G element with ad - bc = 1.
class GammaElement : public GElement {
 public:
  GammaElement() = default;
  /// Throws Error unless ad - bc = 1.
  GammaElement(long a, long b, long c, long d, PosReal alpha, PosReal beta);
  explicit GammaElement(const GElement& g);
};

GElement compose(const GElement& f, const GElement& g);
GElement inverse(const GElement& f);
GammaElement compose(const GammaElement& f, const GammaElement& g);
GammaElement inverse(const GammaElement& f);

/// Image of f under (x,y) -> (log x, log y): the affine map u -> M u + v.
struct AffineLog {
  std::array<long, 4> m{};  ///< row order
  std::array<double, 2> v{};
};

AffineLog to_affine_log(const GElement& f, long bits = 64);
/// (M, v) . (N, w) = (MN, v + M w).
AffineLog semidirect_product(const AffineLog& f, const AffineLog& g);

/// f_k(x,y) = (y, y^k / x), k != 2.
struct Fk {
  long k = 0;
  friend bool operator==(const Fk&, const Fk&) = default;
};
/// f_{2,xi}(x,y) = (y, xi y^2 / x).
struct F2xi {
  PosReal xi;
  friend bool operator==(const F2xi&, const F2xi&) = default;
};
/// (alpha x, beta y).
struct TorusPlus {
  PosReal alpha, beta;
  friend bool operator==(const TorusPlus&, const TorusPlus&) = default;
};
/// (alpha / x, beta / y).
struct TorusMinus {
  PosReal alpha, beta;
  friend bool operator==(const TorusMinus&, const TorusMinus&) = default;
};

using NormalForm = std::variant<Fk, F2xi, TorusPlus, TorusMinus>;

GammaElement to_gamma(const NormalForm& nf);
std::string variant_name(const NormalForm& nf);

struct NormalFormResult {
  NormalForm form;
  /// Satisfies conjugator o f = form o conjugator.
  MonomialMap conjugator;
};

/// Conjugates f to f_{a+d} (trace != 2), f_{2,xi} (trace 2), or leaves the
/// diagonal maps b = c = 0 as torus maps.
NormalFormResult normal_form(const GammaElement& f);

/// The xi invariant: alpha^c / beta^(a-1) if c != 0, beta^b if c == 0.
PosReal xi_invariant(const GammaElement& f);

template <Scalar T>
Point2<T> fk(long k, const Point2<T>& p) {
  return {p.y, ipow(p.y, k) / p.x};
}

template <Scalar T>
Point2<T> f2xi(const T& xi, const Point2<T>& p) {
  return {p.y, xi * p.y * p.y / p.x};
}

/// xi^(n(n-1)/2) (y/x)^n (x, xi^n y).
template <Scalar T>
Point2<T> f2xi_closed(const T& xi, long n, const Point2<T>& p) {
  const T lead = ipow(xi, n * (n - 1) / 2) * ipow(p.y / p.x, n);
  return {lead * p.x, lead * ipow(xi, n) * p.y};
}

/// I_k(x,y) = log^2 x - k log x log y + log^2 y.
template <Scalar T>
double first_integral_Ik(long k, const Point2<T>& p, const Precision& prec = {}) {
  if constexpr (ExactScalar<T>) {
    const long bits = log_form_bits(prec.bits);
    const BigFloat u = log_float(p.x, bits);
    const BigFloat v = log_float(p.y, bits);
    const BigFloat kk(static_cast<double>(k), bits);
    return (u * u - kk * u * v + v * v).to_double();
  }
  const double u = log_value(p.x, prec.bits);
  const double v = log_value(p.y, prec.bits);
  return u * u - static_cast<double>(k) * u * v + v * v;
}

/// Exact sign of I_k at a PosReal point, or nullopt when interval refinement
/// up to 16384 bits cannot separate the value from 0.
std::optional<int> first_integral_sign(long k, const Point2<PosReal>& p);

struct AsymptoticClass {
  enum class Kind {
    Periodic,
    ConvergesToFixed,
    ConvergesToOrigin,
    Diverges,
    LineOfFixedPoints,
    ExactBoundaryUndecidable,
  };
  Kind kind = Kind::Periodic;
  int period = 0;  ///< minimal period when kind == Periodic

  friend bool operator==(const AsymptoticClass&, const AsymptoticClass&) = default;
};

std::string to_string(const AsymptoticClass& c);

/// Fate of the f_k orbit of p for k in {-1, 0, 1} or k > 2. The fixed point
/// (1,1) is Periodic{1} for k <= 1 and ConvergesToFixed for k > 2, where it
/// is the trivial member of the stable set. Throws UnsupportedK for k <= -2 and k = 2.
AsymptoticClass classify_fk(long k, const Point2<PosReal>& p);

/// Fate of the f_{2,xi} orbit of p.
AsymptoticClass classify_f2xi(const PosReal& xi, const Point2<PosReal>& p);

/// Checks R o f o R (p) = f^{-1}(p) for R(x,y) = (y,x).
bool reversing_check(const GammaElement& f, const Point2<PosReal>& p);

}  // namespace clusterdyn
