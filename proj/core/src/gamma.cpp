#include "clusterdyn/gamma.hpp"

#include <cmath>
#include <utility>

namespace clusterdyn {

namespace {

constexpr long kFirstBits = 64;
constexpr long kMaxBits = 16384;

const MonomialMap& swap_map() {
  static const MonomialMap sigma(
      {Rational(0), Rational(1), Rational(1), Rational(0)}, PosReal(), PosReal());
  return sigma;
}

// Conjugation for c != 0: pi(x,y) = (y^a x^-c, beta^a alpha^-c y) takes f to
// g(x,y) = (y, K y^(a+d) / x) with K = beta (beta^a alpha^-c)^(1-(a+d)); a
// uniform scaling by K^(1/(a+d-2)) then takes g to f_(a+d).
NormalFormResult reduce_c_nonzero(long a, long c, long d, const PosReal& alpha,
                                  const PosReal& beta) {
  const MonomialMap::Exponents pi_exps{Rational(-c), Rational(a), Rational(0), Rational(1)};
  const PosReal shift = beta.pow(a) * alpha.pow(-c);
  const long trace = a + d;
  if (trace == 2) {
    return {F2xi{alpha.pow(c) / beta.pow(a - 1)}, MonomialMap(pi_exps, PosReal(), shift)};
  }
  const PosReal k_const = beta * shift.pow(1 - trace);
  const PosReal s = k_const.pow(Rational(1, trace - 2));
  return {Fk{trace}, MonomialMap(pi_exps, s, s * shift)};
}

Point2<PosReal> swap(const Point2<PosReal>& p) { return {p.y, p.x}; }

}  // namespace

MonomialMap::MonomialMap(Exponents m, PosReal alpha, PosReal beta)
    : m_(std::move(m)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (det().is_zero()) throw Error("monomial map must have an invertible exponent matrix");
}

Point2<PosReal> MonomialMap::apply(const Point2<PosReal>& p) const {
  return {alpha_ * p.x.pow(m_[0]) * p.y.pow(m_[1]),
          beta_ * p.x.pow(m_[2]) * p.y.pow(m_[3])};
}

Point2<double> MonomialMap::apply(const Point2<double>& p) const {
  return {alpha_.to_double() * std::pow(p.x, m_[0].to_double()) *
              std::pow(p.y, m_[1].to_double()),
          beta_.to_double() * std::pow(p.x, m_[2].to_double()) *
              std::pow(p.y, m_[3].to_double())};
}

MonomialMap MonomialMap::inverse() const {
  const Rational dt = det();
  const Exponents inv{m_[3] / dt, -m_[1] / dt, -m_[2] / dt, m_[0] / dt};
  return MonomialMap(inv, alpha_.pow(-inv[0]) * beta_.pow(-inv[1]),
                     alpha_.pow(-inv[2]) * beta_.pow(-inv[3]));
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  const auto& mf = f.exponents();
  const auto& mg = g.exponents();
  const MonomialMap::Exponents m{mf[0] * mg[0] + mf[1] * mg[2], mf[0] * mg[1] + mf[1] * mg[3],
                                 mf[2] * mg[0] + mf[3] * mg[2], mf[2] * mg[1] + mf[3] * mg[3]};
  return MonomialMap(m, f.alpha() * g.alpha().pow(mf[0]) * g.beta().pow(mf[1]),
                     f.beta() * g.alpha().pow(mf[2]) * g.beta().pow(mf[3]));
}

GElement::GElement(long a, long b, long c, long d, PosReal alpha, PosReal beta)
    : a_(a), b_(b), c_(c), d_(d), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  const long dt = a * d - b * c;
  if (dt != 1 && dt != -1) {
    throw Error("G element requires ad - bc = +-1, got " + std::to_string(dt));
  }
}

MonomialMap GElement::to_map() const {
  return MonomialMap({Rational(a_), Rational(b_), Rational(c_), Rational(d_)}, alpha_, beta_);
}

GElement GElement::from_map(const MonomialMap& m) {
  const auto& e = m.exponents();
  for (const auto& v : e) {
    if (!v.is_integer()) throw Error("exponent matrix is not integral");
  }
  return GElement(e[0].num().get_si(), e[1].num().get_si(), e[2].num().get_si(),
                  e[3].num().get_si(), m.alpha(), m.beta());
}

GammaElement::GammaElement(long a, long b, long c, long d, PosReal alpha, PosReal beta)
    : GElement(a, b, c, d, std::move(alpha), std::move(beta)) {
  if (det() != 1) throw Error("Gamma element requires ad - bc = 1");
}

GammaElement::GammaElement(const GElement& g)
    : GammaElement(g.a(), g.b(), g.c(), g.d(), g.alpha(), g.beta()) {}

GElement compose(const GElement& f, const GElement& g) {
  return GElement::from_map(compose(f.to_map(), g.to_map()));
}

GElement inverse(const GElement& f) { return GElement::from_map(f.to_map().inverse()); }

GammaElement compose(const GammaElement& f, const GammaElement& g) {
  return GammaElement(compose(static_cast<const GElement&>(f), static_cast<const GElement&>(g)));
}

GammaElement inverse(const GammaElement& f) {
  return GammaElement(inverse(static_cast<const GElement&>(f)));
}

AffineLog to_affine_log(const GElement& f, long bits) {
  return {{f.a(), f.b(), f.c(), f.d()},
          {f.alpha().log_value(bits), f.beta().log_value(bits)}};
}

AffineLog semidirect_product(const AffineLog& f, const AffineLog& g) {
  const auto& m = f.m;
  const auto& n = g.m;
  AffineLog out;
  out.m = {m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3], m[2] * n[0] + m[3] * n[2],
           m[2] * n[1] + m[3] * n[3]};
  out.v = {f.v[0] + static_cast<double>(m[0]) * g.v[0] + static_cast<double>(m[1]) * g.v[1],
           f.v[1] + static_cast<double>(m[2]) * g.v[0] + static_cast<double>(m[3]) * g.v[1]};
  return out;
}

GammaElement to_gamma(const NormalForm& nf) {
  return std::visit(
      [](const auto& v) -> GammaElement {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Fk>) {
          return GammaElement(0, 1, -1, v.k, PosReal(), PosReal());
        } else if constexpr (std::is_same_v<V, F2xi>) {
          return GammaElement(0, 1, -1, 2, PosReal(), v.xi);
        } else if constexpr (std::is_same_v<V, TorusPlus>) {
          return GammaElement(1, 0, 0, 1, v.alpha, v.beta);
        } else {
          return GammaElement(-1, 0, 0, -1, v.alpha, v.beta);
        }
      },
      nf);
}

std::string variant_name(const NormalForm& nf) {
  switch (nf.index()) {
    case 0: return "Fk";
    case 1: return "F2xi";
    case 2: return "TorusPlus";
    default: return "TorusMinus";
  }
}

PosReal xi_invariant(const GammaElement& f) {
  if (f.c() != 0) return f.alpha().pow(f.c()) / f.beta().pow(f.a() - 1);
  return f.beta().pow(f.b());
}

NormalFormResult normal_form(const GammaElement& f) {
  if (f.b() == 0 && f.c() == 0) {
    if (f.a() == 1) return {TorusPlus{f.alpha(), f.beta()}, MonomialMap()};
    return {TorusMinus{f.alpha(), f.beta()}, MonomialMap()};
  }
  if (f.c() != 0) return reduce_c_nonzero(f.a(), f.c(), f.d(), f.alpha(), f.beta());
  // c == 0, b != 0: sigma f sigma = (beta x^d, alpha x^b y^a) has c' = b.
  NormalFormResult res = reduce_c_nonzero(f.d(), f.b(), f.a(), f.beta(), f.alpha());
  res.conjugator = compose(res.conjugator, swap_map());
  return res;
}

std::optional<int> first_integral_sign(long k, const Point2<PosReal>& p) {
  // With rational log-exponents, I_k vanishes only at (1,1) when k > 2 (the
  // null directions have irrational slope) and everywhere else it is
  // bounded away from 0, so refinement terminates in practice.
  if (p.x.is_one() && p.y.is_one()) return 0;
  for (long bits = kFirstBits; bits <= kMaxBits; bits *= 2) {
    const Interval u = p.x.log_interval(bits);
    const Interval v = p.y.log_interval(bits);
    const Interval value = u * u - (u * v).scaled(Rational(k)) + v * v;
    if (const int s = value.certain_sign(); s != 0) return s;
  }
  return std::nullopt;
}

std::string to_string(const AsymptoticClass& c) {
  using K = AsymptoticClass::Kind;
  switch (c.kind) {
    case K::Periodic: return "Periodic{" + std::to_string(c.period) + "}";
    case K::ConvergesToFixed: return "ConvergesToFixed";
    case K::ConvergesToOrigin: return "ConvergesToOrigin";
    case K::Diverges: return "Diverges";
    case K::LineOfFixedPoints: return "LineOfFixedPoints";
    case K::ExactBoundaryUndecidable: return "ExactBoundaryUndecidable";
  }
  return "?";
}

AsymptoticClass classify_fk(long k, const Point2<PosReal>& p) {
  using K = AsymptoticClass::Kind;
  if (k <= -2 || k == 2) {
    throw UnsupportedK("classify_fk supports k in {-1,0,1} and k > 2, got " +
                       std::to_string(k));
  }
  const bool at_fixed = p.x.is_one() && p.y.is_one();
  if (at_fixed) return k > 2 ? AsymptoticClass{K::ConvergesToFixed, 0} : AsymptoticClass{K::Periodic, 1};
  if (k == -1) return {K::Periodic, 3};
  if (k == 0) return {K::Periodic, 4};
  if (k == 1) return {K::Periodic, 6};

  try {
    const std::optional<int> s = first_integral_sign(k, p);
    if (!s) return {K::ExactBoundaryUndecidable, 0};
    const auto cx = p.x.cmp_one();
    const auto cxy = (p.x / p.y).cmp_one();
    const bool x_lt_1 = cx < 0;
    const bool x_gt_1 = cx > 0;
    const bool x_lt_y = cxy < 0;
    const bool x_gt_y = cxy > 0;
    if (*s == 0 && ((x_lt_1 && x_lt_y) || (x_gt_1 && x_gt_y))) {
      return {K::ConvergesToFixed, 0};
    }
    if ((*s < 0 && x_lt_1) || (*s == 0 && x_lt_1 && x_gt_y) || (*s > 0 && x_gt_y)) {
      return {K::ConvergesToOrigin, 0};
    }
    return {K::Diverges, 0};
  } catch (const PrecisionExhausted&) {
    return {K::ExactBoundaryUndecidable, 0};
  }
}

AsymptoticClass classify_f2xi(const PosReal& xi, const Point2<PosReal>& p) {
  using K = AsymptoticClass::Kind;
  try {
    const auto c = xi.cmp_one();
    if (c < 0) return {K::ConvergesToOrigin, 0};
    if (c > 0) return {K::Diverges, 0};
    const auto cyx = (p.y / p.x).cmp_one();
    if (cyx == 0) return {K::LineOfFixedPoints, 0};
    return {cyx < 0 ? K::ConvergesToOrigin : K::Diverges, 0};
  } catch (const PrecisionExhausted&) {
    return {K::ExactBoundaryUndecidable, 0};
  }
}

bool reversing_check(const GammaElement& f, const Point2<PosReal>& p) {
  return swap(f.apply(swap(p))) == inverse(f).apply(p);
}

}  // namespace clusterdyn
