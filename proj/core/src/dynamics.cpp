#include "clusterdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace clusterdyn {

namespace {

using Kind = OrbitClass4::Kind;
using AKind = AsymptoticClass::Kind;

constexpr std::array<std::pair<Kind, const char*>, 7> kKindNames = {{
    {Kind::Fixed, "Fixed"},
    {Kind::Periodic, "Periodic"},
    {Kind::ConvergesToF, "ConvergesToF"},
    {Kind::ConvergesTo4Cycle, "ConvergesTo4Cycle"},
    {Kind::ConvergesToOrigin, "ConvergesToOrigin"},
    {Kind::Diverges, "Diverges"},
    {Kind::Undecidable, "Undecidable"},
}};

// Pulls a normal-form verdict back to phi_r. `on_c11` selects whether the
// restricted map is phi_r itself (fixed point = F) or phi_r^(4) (fixed
// point = period-4 point of phi_r).
OrbitClass4 pull_back(const AsymptoticClass& a, bool on_c11) {
  switch (a.kind) {
    case AKind::Periodic:
      if (a.period == 1) return on_c11 ? OrbitClass4{Kind::Fixed, 1} : OrbitClass4{Kind::Periodic, 4};
      return {Kind::Periodic, on_c11 ? a.period : 4 * a.period};
    case AKind::ConvergesToFixed:
      return {on_c11 ? Kind::ConvergesToF : Kind::ConvergesTo4Cycle, 0};
    case AKind::ConvergesToOrigin:
      return {Kind::ConvergesToOrigin, 0};
    case AKind::Diverges:
      return {Kind::Diverges, 0};
    case AKind::LineOfFixedPoints:
    case AKind::ExactBoundaryUndecidable:
      break;
  }
  return {Kind::Undecidable, 0};
}

AsymptoticClass classify_normal_form(const NormalFormResult& nf, const Point2<PosReal>& chart) {
  const Point2<PosReal> image = nf.conjugator.apply(chart);
  if (image.x.is_one() && image.y.is_one()) return {AKind::Periodic, 1};
  if (const auto* f = std::get_if<Fk>(&nf.form)) return classify_fk(f->k, image);
  if (const auto* f = std::get_if<F2xi>(&nf.form)) return classify_f2xi(f->xi, image);
  return {AKind::ExactBoundaryUndecidable, 0};
}

double lse(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

using LogD = std::array<double, 4>;

LogD phi_log_double(int r, const LogD& L) {
  const double s = lse(r * L[1], r * L[2]);
  const double x4 = lse(r * (L[0] + L[3]), r * s) - r * L[0] - L[1];
  return {L[2], L[3], s - L[0], x4};
}

template <ExactScalar T>
std::optional<int> exact_period(int r, const Point4<T>& x, std::size_t budget) {
  Point4<T> p = x;
  for (int m = 1; m <= 12; ++m) {
    p = phi(r, p);
    if (p == x) return m;
    if (bit_size(p) > budget) return std::nullopt;
  }
  return std::nullopt;
}

template <ExactScalar T>
OrbitClass4 brute_force_impl(int r, const Point4<T>& x, const BruteForceOptions& opts) {
  require_positive(x);
  if (const auto m = exact_period(r, x, opts.bit_budget)) {
    return *m == 1 ? OrbitClass4{Kind::Fixed, 1} : OrbitClass4{Kind::Periodic, *m};
  }

  LogD L = {log_value(x.x1), log_value(x.x2), log_value(x.x3), log_value(x.x4)};
  const double esc = std::log(opts.escape);
  const bool has_f = r != 2;
  const double log_f = has_f ? std::log(2.0) / (2 - r) : 0.0;
  const double rr = static_cast<double>(r) * r;

  for (std::size_t n = 0; n <= opts.max_steps; ++n) {
    for (double v : L) {
      if (!std::isfinite(v)) return {Kind::Undecidable, 0};
    }
    const double lo = *std::min_element(L.begin(), L.end());
    const double hi = *std::max_element(L.begin(), L.end());
    if (lo > esc) return {Kind::Diverges, 0};
    if (hi < -esc) return {Kind::ConvergesToOrigin, 0};
    if (has_f) {
      double dist = 0;
      for (double v : L) dist = std::max(dist, std::abs(v - log_f));
      if (dist < opts.capture) return {Kind::ConvergesToF, 0};
    }
    if (r > 2) {
      // Period-4 point of the variety through the current iterate.
      const double lp = L[2] - L[1];
      const double lq = lse(r * L[1], r * L[2]) - L[0] - L[3];
      const double ll = 2 * lse(0, r * lp) + r * lse(0, r * lq) - 2 * lq - r * lp;
      const double lz = ll / (4 - rr);
      const double lx2 = (lq + 2 * lz - lse(0, r * lp)) / r;
      const LogD target = {lz, lx2, lp + lx2, lz};
      double dist = 0;
      for (int i = 0; i < 4; ++i) dist = std::max(dist, std::abs(L[i] - target[i]));
      if (dist < opts.capture && (std::abs(lp) > 1e-12 || std::abs(lq) > 1e-12)) {
        return {Kind::ConvergesTo4Cycle, 0};
      }
    }
    L = phi_log_double(r, L);
  }
  return {Kind::Undecidable, 0};
}

}  // namespace

std::string to_string(const OrbitClass4& c) {
  for (const auto& [k, name] : kKindNames) {
    if (k == c.kind) {
      return c.kind == Kind::Periodic ? std::string(name) + "{" + std::to_string(c.period) + "}"
                                      : std::string(name);
    }
  }
  return "?";
}

OrbitClass4 parse_orbit_class(const std::string& s) {
  if (s.rfind("Periodic{", 0) == 0 && s.back() == '}') {
    return {Kind::Periodic, std::stoi(s.substr(9, s.size() - 10))};
  }
  for (const auto& [k, name] : kKindNames) {
    if (s == name) return {k, k == Kind::Fixed ? 1 : 0};
  }
  throw ParseError("unknown orbit class: " + s);
}

std::optional<Point4<PosReal>> fixed_point(int r) {
  if (r < 1) throw Error("r must be positive");
  if (r == 2) return std::nullopt;
  const PosReal c = PosReal(2).pow(Rational(1, 2 - r));
  return Point4<PosReal>{c, c, c, c};
}

GammaElement restricted_bar_element(int r) {
  return GammaElement(0, 1, -1, r, PosReal(), PosReal(2));
}

GammaElement restricted_tilde_element(int r, const PosReal& lambda) {
  const long r2 = static_cast<long>(r) * r;
  return GammaElement(-1, r2 - 2, -(r2 - 2), (r2 - 3) * (r2 - 1), lambda, lambda.pow(r2 - 1));
}

LogPoint4 to_log_point(const Point4<Rational>& x, long bits) {
  return {{log_rational(x.x1, bits), log_rational(x.x2, bits), log_rational(x.x3, bits),
           log_rational(x.x4, bits)}};
}

LogPoint4 to_log_point(const Point4<PosReal>& x, long bits) {
  return {{x.x1.log_float(bits), x.x2.log_float(bits), x.x3.log_float(bits),
           x.x4.log_float(bits)}};
}

LogPoint4 phi_log(int r, const LogPoint4& x) {
  const auto& L = x.L;
  const long bits = L[0].bits();
  const BigFloat rr(static_cast<double>(r), bits);
  const BigFloat s = log_add_exp(rr * L[1], rr * L[2]);
  const BigFloat x4 = log_add_exp(rr * (L[0] + L[3]), rr * s) - rr * L[0] - L[1];
  return {{L[2], L[3], s - L[0], x4}};
}

BigFloat l_function_log(int r, const LogPoint4& x) {
  const auto& L = x.L;
  const long bits = L[0].bits();
  const BigFloat rr(static_cast<double>(r), bits);
  const BigFloat e(static_cast<double>(r) * r - 2, bits);
  const BigFloat s = log_add_exp(rr * L[1], rr * L[2]);
  const BigFloat top = rr * log_add_exp(rr * (L[0] + L[3]), rr * s);
  return top - e * (L[0] + L[3]) - rr * (L[1] + L[2]);
}

double J_bar_log(int r, const LogPoint4& x) {
  const auto& u = x.L[0];
  const auto& v = x.L[1];
  const long bits = u.bits();
  const BigFloat rr(static_cast<double>(r), bits);
  const BigFloat ln2 = log_rational(Rational(2), bits);
  return (u * u - rr * u * v + v * v - ln2 * (u + v)).to_double();
}

double J_tilde_log(int r, const LogPoint4& x) {
  const auto& u = x.L[0];
  const auto& v = x.L[3];
  const long bits = u.bits();
  const BigFloat r2(static_cast<double>(r) * r, bits);
  const BigFloat w = u + v;
  return (w * w - r2 * u * v - l_function_log(r, x) * w).to_double();
}

OrbitClass4 classify(int r, const Point4<PosReal>& x) {
  if (r < 1) throw Error("r must be positive");
  require_positive(x);

  if (r == 1) {
    if (x == *fixed_point(1)) return {Kind::Fixed, 1};
    if (on_V(1, x)) return {Kind::Periodic, 4};
    if (member(VarietyLabel<PosReal>{1, PosReal(1), PosReal(1)}, x)) return {Kind::Periodic, 6};
    return {Kind::Periodic, 12};
  }

  const VarietyLabel<PosReal> lbl = label_of(r, x);
  if (is_unit_label(lbl)) {
    const NormalFormResult nf = normal_form(restricted_bar_element(r));
    return pull_back(classify_normal_form(nf, {x.x1, x.x2}), true);
  }
  const PosReal lambda = lambda_of(lbl);
  const NormalFormResult nf = normal_form(restricted_tilde_element(r, lambda));
  return pull_back(classify_normal_form(nf, {x.x1, x.x4}), false);
}

OrbitClass4 classify(int r, const Point4<Rational>& x) {
  require_positive(x);
  return classify(r, convert_point<PosReal>(x));
}

OrbitClass4 brute_force_classify(int r, const Point4<Rational>& x, const BruteForceOptions& opts) {
  return brute_force_impl(r, x, opts);
}

OrbitClass4 brute_force_classify(int r, const Point4<PosReal>& x, const BruteForceOptions& opts) {
  return brute_force_impl(r, x, opts);
}

OrbitRecord make_orbit_record(int r, const Point4<PosReal>& x, const RecordOptions& opts) {
  OrbitRecord rec;
  rec.r = r;
  rec.start = x;
  rec.cls = classify(r, x);

  try {
    const auto orbit = phi_iter(r, x, 3, IterOptions{opts.bit_budget});
    for (const auto& p : orbit) rec.variety_labels.push_back(label_of(r, p));
  } catch (const SizeExceeded&) {
    // Labels of later iterates are left out rather than approximated.
  } catch (const NotRepresentable&) {
  }

  if (r > 2) {
    const bool c11 = is_unit_label(label_of(r, x));
    LogPoint4 p = to_log_point(x, opts.bits);
    for (std::size_t n = 0; n < opts.j_samples; ++n) {
      if (c11) {
        rec.J_values.push_back(J_bar_log(r, p));
        p = phi_log(r, p);
      } else {
        rec.J_values.push_back(J_tilde_log(r, p));
        for (int k = 0; k < 4; ++k) p = phi_log(r, p);
      }
    }
  }
  return rec;
}

}  // namespace clusterdyn
