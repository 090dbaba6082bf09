// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "clusterdyn/dynamics.hpp"
#include "clusterdyn/quiver.hpp"
#include "clusterdyn/random.hpp"
#include "oracles.hpp"

using namespace clusterdyn;

namespace {

using Q4 = Point4<Rational>;
using Q2 = Point2<Rational>;
using P4 = Point4<PosReal>;
using P2 = Point2<PosReal>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    if (!notes_.empty()) os << "; " << notes_;
    for (const auto& f : failures_) os << "\n      failed: " << f;
    return {failed_ == 0 && checks_ > 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

P2 to_p2(const Q2& q) { return convert_point<PosReal>(q); }

// 1. phi_1^(12) = id exactly on 100 random points, under 5 s.
Outcome global_periodicity() {
  Checker c;
  Rng rng(101);
  const auto t0 = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const Q4 x = random_point4(rng);
    c.expect(phi_power(1, x, 12) == x, "phi_1^12(x) != x");
  }
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "runtime " + std::to_string(t) + " s");
  c.note("runtime " + std::to_string(t) + " s");
  return c.outcome();
}

// 2. Minimal periods 1, 4, 6, 12 with no earlier return.
Outcome minimal_periods() {
  Checker c;
  const std::vector<std::pair<Q4, int>> cases{
      {{2, 2, 2, 2}, 1}, {{2, 1, 5, 2}, 4}, {{1, 1, 1, 2}, 6}, {{1, 1, 1, 1}, 12}};
  for (const auto& [x, period] : cases) {
    Q4 p = x;
    int first = 0;
    for (int m = 1; m <= period; ++m) {
      p = phi(1, p);
      if (p == x && first == 0) first = m;
    }
    c.expect(first == period, "period of point " + std::to_string(period));
    c.expect(classify(1, x).period == period, "classify period " + std::to_string(period));
  }
  return c.outcome();
}

// 3. phi_r(F) = F exactly for r = 3, 4, 5.
Outcome fixed_points() {
  Checker c;
  for (int r : {3, 4, 5}) {
    const auto f = fixed_point(r);
    c.expect(f.has_value() && phi(r, *f) == *f, "phi_r(F) = F at r=" + std::to_string(r));
    c.expect(f && f->x1 == PosReal(2).pow(Rational(1, 2 - r)), "F coordinate at r=" + std::to_string(r));
  }
  return c.outcome();
}

// 4. Reduction chain, exact, 100 points each, r = 1..5.
Outcome reduction_chain() {
  Checker c;
  Rng rng(104);
  for (int r = 1; r <= 5; ++r) {
    const std::string tag = " r=" + std::to_string(r);
    for (int i = 0; i < 100; ++i) {
      const Q4 x = random_point4(rng);
      const Q4 y = phi(r, x);
      c.expect(reduce_pi(r, y) == psi(reduce_pi(r, x)), "pi o phi" + tag);
      c.expect(reduce_Pi(r, y) == hat_phi(r, reduce_Pi(r, x)), "Pi o phi" + tag);
      const Q2 z = random_point2(rng);
      c.expect(conj_h(r, hat_phi(r, z)) == psi(conj_h(r, z)), "h o hat_phi" + tag);
    }
  }
  return c.outcome();
}

// Arithmetic modulo a prime below 2^63.
struct ModP {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t of(const Rational& q) const {
    mpz_class n = q.num() % mpz_class(std::to_string(p));
    if (n < 0) n += mpz_class(std::to_string(p));
    mpz_class d = q.den() % mpz_class(std::to_string(p));
    return mul(std::stoull(n.get_str()), inv(std::stoull(d.get_str())));
  }
};

// Labels along a 20-step phi_r orbit reduced mod p. Returns false when a
// denominator vanishes mod p (the prime is then skipped).
bool labels_mod_p(const ModP& m, int r, const Q4& x0, Checker& c) {
  std::array<std::uint64_t, 4> x{m.of(x0.x1), m.of(x0.x2), m.of(x0.x3), m.of(x0.x4)};
  auto label = [&](const std::array<std::uint64_t, 4>& v) {
    const std::uint64_t s = m.add(m.pow(v[1], r), m.pow(v[2], r));
    return std::pair{m.mul(v[2], m.inv(v[1])), m.mul(s, m.inv(m.mul(v[0], v[3])))};
  };
  auto ok = [](const std::array<std::uint64_t, 4>& v) {
    return v[0] && v[1] && v[2] && v[3];
  };
  if (!ok(x)) return false;
  const auto l0 = label(x);
  auto prev = l0;
  for (int n = 1; n <= 20; ++n) {
    const std::uint64_t s = m.add(m.pow(x[1], r), m.pow(x[2], r));
    const std::uint64_t x1r = m.pow(x[0], r);
    const std::array<std::uint64_t, 4> y{
        x[2], x[3], m.mul(s, m.inv(x[0])),
        m.mul(m.add(m.mul(x1r, m.pow(x[3], r)), m.pow(s, r)), m.inv(m.mul(x1r, x[1])))};
    if (!ok(y)) return false;
    const auto l = label(y);
    c.expect(l.first == prev.second && l.second == m.inv(prev.first), "mod-p circulation");
    if (n % 4 == 0) {
      c.expect(y[2] == m.mul(l0.first, y[1]) &&
                   m.mul(l0.second, m.mul(y[0], y[3])) ==
                       m.mul(m.add(1, m.pow(l0.first, r)), m.pow(y[1], r)),
               "mod-p invariance");
    }
    prev = l;
    x = y;
  }
  return true;
}

template <ExactScalar T>
void check_label_cycle(int r, const Point4<T>& x0, int steps, Checker& c, const std::string& tag) {
  const VarietyLabel<T> l0 = label_of(r, x0);
  VarietyLabel<T> prev = l0;
  Point4<T> x = x0;
  for (int n = 1; n <= steps; ++n) {
    x = phi(r, x);
    const VarietyLabel<T> l = label_of(r, x);
    c.expect(l.p == prev.q && l.q == prev.p.inverse(), "circulation " + tag);
    if (n % 4 == 0) c.expect(member(l0, x), "C_(p,q) invariance " + tag);
    prev = l;
  }
}

// 5. Variety labels along 20-step orbits and invariance under phi_r^(4).
Outcome variety_circulation() {
  Checker c;
  Rng rng(105);
  for (int r : {1, 2}) {
    for (int i = 0; i < 50; ++i) {
      check_label_cycle(r, random_point4(rng), 20, c, "r=" + std::to_string(r));
    }
  }
  const std::array<ModP, 3> primes{{{2305843009213693951ULL}, {1000000007ULL}, {998244353ULL}}};
  for (int r : {3, 4, 5}) {
    const std::string tag = "r=" + std::to_string(r);
    check_label_cycle(r, *fixed_point(r), 20, c, tag + " F");
    for (int i = 0; i < 5; ++i) {
      const auto lbl = label_of(r, random_point4(rng, 3, 3));
      const auto v = v_point_from_label(
          VarietyLabel<PosReal>{r, convert<PosReal>(lbl.p), convert<PosReal>(lbl.q)});
      check_label_cycle(r, v, 20, c, tag + " V");
    }
    std::size_t min_steps = 20;
    int mod_orbits = 0;
    for (int i = 0; i < 50; ++i) {
      const Q4 x = random_point4(rng);
      std::size_t steps = 0;
      Q4 y = x;
      while (steps < 20) {
        const Q4 next = phi(r, y);
        if (bit_size(next) > (1u << 18)) break;
        y = next;
        ++steps;
      }
      min_steps = std::min(min_steps, steps);
      check_label_cycle(r, x, static_cast<int>(steps), c, tag + " exact");
      for (const auto& m : primes) mod_orbits += labels_mod_p(m, r, x, c) ? 1 : 0;
    }
    c.note(tag + ": F and 5 period-4 points exact over 20 steps; 50 generic points exact over >= " +
           std::to_string(min_steps) + " steps and over 20 steps in " + std::to_string(mod_orbits) +
           " prime fields");
  }
  return c.outcome();
}

// 6. Restricted maps commute with the embeddings; l = lambda.
Outcome restricted_commutation() {
  Checker c;
  Rng rng(106);
  for (int r = 1; r <= 5; ++r) {
    const std::string tag = " r=" + std::to_string(r);
    for (int i = 0; i < 50; ++i) {
      const Q2 z = random_point2(rng);
      c.expect(embed_c11(r, restricted_bar(r, z)) == phi(r, embed_c11(r, z)), "bar" + tag);

      // A generic chart point of a generic variety; x2 is an r-th root.
      const VarietyLabel<PosReal> lbl{r, PosReal::from_rational(random_rational(rng)),
                                      PosReal::from_rational(random_rational(rng))};
      const P2 w = to_p2(random_point2(rng));
      const P4 x = embed_cpq(lbl, w);
      const PosReal lam = lambda_of(lbl);
      c.expect(embed_cpq(lbl, restricted_tilde(r, lam, w)) == phi_power(r, x, 4), "tilde" + tag);
      c.expect(l_function(r, x) == lam, "l = lambda" + tag);
    }
  }
  return c.outcome();
}

// 7. Normal forms.
Outcome normal_forms() {
  Checker c;
  Rng rng(107);
  for (int i = 0; i < 200; ++i) {
    const GammaElement f = random_gamma(rng);
    const NormalFormResult nf = normal_form(f);
    const GammaElement g = to_gamma(nf.form);
    for (int j = 0; j < 3; ++j) {
      const P2 p = to_p2(random_point2(rng));
      c.expect(nf.conjugator.apply(f.apply(p)) == g.apply(nf.conjugator.apply(p)),
               "conjugator intertwines");
    }
  }
  const PosReal lam = PosReal::from_rational(Rational(37, 5)).pow(Rational(1, 2));
  const auto bar2 = normal_form(restricted_bar_element(2));
  c.expect(bar2.form == NormalForm(F2xi{PosReal(2)}), "bar phi_2 -> f_{2,2}");
  const auto tilde2 = normal_form(restricted_tilde_element(2, lam));
  c.expect(tilde2.form == NormalForm(F2xi{lam.pow(4L)}), "tilde phi_2 -> f_{2,lambda^4}");
  for (long r : {1L, 3L, 4L, 5L}) {
    const std::string tag = " r=" + std::to_string(r);
    c.expect(normal_form(restricted_bar_element(static_cast<int>(r))).form == NormalForm(Fk{r}),
             "bar phi_r -> f_r" + tag);
    const long k = (r * r - 2) * (r * r - 2) - 2;
    const auto nf = normal_form(restricted_tilde_element(static_cast<int>(r), lam));
    c.expect(nf.form == NormalForm(Fk{k}), "tilde phi_r -> f_k" + tag);
    const P2 p = to_p2(random_point2(rng));
    c.expect(nf.conjugator.apply(restricted_tilde_element(static_cast<int>(r), lam).apply(p)) ==
                 to_gamma(nf.form).apply(nf.conjugator.apply(p)),
             "tilde conjugator" + tag);
  }
  return c.outcome();
}

// 8. Normal-form dynamics.
Outcome normal_form_dynamics() {
  Checker c;
  Rng rng(108);
  for (int i = 0; i < 100; ++i) {
    const P2 p = to_p2(random_point2(rng));
    for (const auto& [k, m] : {std::pair{-1L, 3}, std::pair{0L, 4}, std::pair{1L, 6}}) {
      P2 q = p;
      for (int n = 0; n < m; ++n) q = fk(k, q);
      c.expect(q == p, "f_k global period k=" + std::to_string(k));
    }
  }
  for (int i = 0; i < 10; ++i) {
    const PosReal xi = PosReal::from_rational(random_rational(rng, 4, 4));
    const P2 p0 = to_p2(random_point2(rng));
    P2 p = p0;
    for (long n = 0; n <= 20; ++n) {
      c.expect(f2xi_closed(xi, n, p0) == p, "f_{2,xi} closed form n=" + std::to_string(n));
      p = f2xi(xi, p);
    }
  }
  for (long k : {3L, 7L, 14L, 47L}) {
    int agree = 0, undecided = 0;
    const int n = 500;
    for (int i = 0; i < n; ++i) {
      const Q2 q = random_point2(rng);
      const AsymptoticClass cls = classify_fk(k, to_p2(q));
      const oracle::Fate fate = oracle::fk_fate(k, q.x.to_double(), q.y.to_double());
      if (fate == oracle::Fate::Undecided) {
        ++undecided;
        continue;
      }
      using AK = AsymptoticClass::Kind;
      const AK want = fate == oracle::Fate::Fixed    ? AK::ConvergesToFixed
                      : fate == oracle::Fate::Origin ? AK::ConvergesToOrigin
                                                     : AK::Diverges;
      const bool same = cls.kind == want;
      agree += same ? 1 : 0;
      c.expect(same, "classify_fk vs oracle k=" + std::to_string(k));
    }
    c.expect(undecided * 100 < n, "undecidable share k=" + std::to_string(k));
    c.note("k=" + std::to_string(k) + ": " + std::to_string(agree) + "/" +
           std::to_string(n - undecided) + " agree");
  }
  return c.outcome();
}

// 9. First integrals.
Outcome first_integrals() {
  Checker c;
  Rng rng(109);
  double worst_i = 0, worst_bar = 0, worst_tilde = 0;
  for (long k : {3L, 7L, 14L, 47L}) {
    for (int i = 0; i < 50; ++i) {
      const P2 p = to_p2(random_point2(rng));
      const double d = std::abs(first_integral_Ik(k, fk(k, p)) - first_integral_Ik(k, p));
      worst_i = std::max(worst_i, d);
      c.expect(d < 1e-12, "I_k conservation k=" + std::to_string(k));
    }
  }
  for (int r : {3, 5}) {
    const std::string tag = " r=" + std::to_string(r);
    for (int i = 0; i < 50; ++i) {
      const Q2 z = random_point2(rng);
      const double d = std::abs(J_bar(r, restricted_bar(r, z)) - J_bar(r, z));
      worst_bar = std::max(worst_bar, d);
      c.expect(d < 1e-10, "J_bar conservation" + tag);
    }
    for (int i = 0; i < 10; ++i) {
      const Q4 x = random_point4(rng);
      LogPoint4 p = to_log_point(x, 2048);
      const double j0 = J_tilde_log(r, p);
      c.expect(std::abs(J_tilde(r, x) - j0) < 1e-10, "J_tilde exact vs log form" + tag);
      for (int n = 0; n < 50; ++n) {
        for (int s = 0; s < 4; ++s) p = phi_log(r, p);
        const double d = std::abs(J_tilde_log(r, p) - j0);
        worst_tilde = std::max(worst_tilde, d);
        c.expect(d < 1e-10, "J_tilde conservation" + tag);
      }
    }
  }
  std::ostringstream os;
  os << "max drift I_k " << worst_i << ", J_bar " << worst_bar << ", J_tilde " << worst_tilde;
  c.note(os.str());
  return c.outcome();
}

// 10. Presymplectic invariance of the derived B_r.
Outcome presymplectic() {
  Checker c;
  Rng rng(110);
  double worst = 0;
  for (int r = 1; r <= 5; ++r) {
    const std::string tag = " r=" + std::to_string(r);
    const ExchangeMatrix b = derive_b_matrix(r);
    bool skew = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) skew = skew && b(i, j) == -b(j, i);
    }
    c.expect(skew, "skew" + tag);
    c.expect(b.rank() == 2, "rank 2" + tag);
    for (int i = 0; i < 100; ++i) {
      const double res = check_presymplectic(r, b, random_point4(rng));
      worst = std::max(worst, res);
      c.expect(res < 1e-10, "pullback residual" + tag);
    }
  }
  std::ostringstream os;
  os << "max residual " << worst;
  c.note(os.str());
  return c.outcome();
}

// 11. phi_2 drives every coordinate past 1e6 in float mode.
Outcome r2_divergence() {
  Checker c;
  Rng rng(111);
  const std::size_t max_steps = 10000;
  std::size_t worst = 0;
  for (int i = 0; i < 100; ++i) {
    Point4<double> x = convert_point<double>(random_point4(rng));
    std::size_t n = 0;
    auto escaped = [](const Point4<double>& p) {
      return p.x1 > 1e6 && p.x2 > 1e6 && p.x3 > 1e6 && p.x4 > 1e6;
    };
    while (!escaped(x) && n < max_steps) {
      x = phi(2, x);
      ++n;
    }
    worst = std::max(worst, n);
    c.expect(escaped(x), "escape within max_steps");
  }
  c.note("slowest escape after " + std::to_string(worst) + " steps");
  return c.outcome();
}

// 12. classify agrees with the brute-force oracle.
Outcome end_to_end() {
  Checker c;
  const auto t0 = Clock::now();
  std::vector<std::string> summary;
  for (int r : {1, 2, 3, 5}) {
    Rng rng(1200 + r);
    std::vector<Q4> pts;
    // Half from (0,10]^4, half from (0,1]^4 so that both escape routes occur.
    for (int i = 0; i < 500; ++i) pts.push_back(random_point4(rng, i % 2 == 0 ? 10 : 1, 10));

    const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<std::vector<std::pair<OrbitClass4, OrbitClass4>>>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        std::vector<std::pair<OrbitClass4, OrbitClass4>> out;
        for (std::size_t i = w; i < pts.size(); i += workers) {
          out.emplace_back(classify(r, pts[i]), brute_force_classify(r, pts[i]));
        }
        return out;
      }));
    }
    int compared = 0, undecidable = 0, agree = 0;
    std::map<std::string, int> census;
    for (auto& j : jobs) {
      for (const auto& [cls, ref] : j.get()) {
        if (cls.kind == OrbitClass4::Kind::Undecidable ||
            ref.kind == OrbitClass4::Kind::Undecidable) {
          ++undecidable;
          continue;
        }
        ++compared;
        ++census[to_string(cls)];
        agree += cls == ref ? 1 : 0;
        c.expect(cls == ref, "r=" + std::to_string(r) + ": " + to_string(cls) + " vs " +
                                 to_string(ref));
      }
    }
    std::string s = "r=" + std::to_string(r) + " " + std::to_string(agree) + "/" +
                    std::to_string(compared) + " (";
    for (const auto& [name, count] : census) s += name + ":" + std::to_string(count) + " ";
    s.back() = ')';
    if (undecidable) s += " undecidable " + std::to_string(undecidable);
    summary.push_back(s);
  }
  const double t = seconds_since(t0);
  c.expect(t < 120.0, "runtime " + std::to_string(t) + " s");
  for (const auto& s : summary) c.note(s);
  c.note("runtime " + std::to_string(t) + " s");
  return c.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"global periodicity of phi_1", global_periodicity},
      {"minimal periods for r = 1", minimal_periods},
      {"fixed points for r = 3, 4, 5", fixed_points},
      {"reduction chain", reduction_chain},
      {"variety invariance and circulation", variety_circulation},
      {"restricted-map commutation", restricted_commutation},
      {"normal forms", normal_forms},
      {"normal-form dynamics", normal_form_dynamics},
      {"first integrals", first_integrals},
      {"presymplectic invariance", presymplectic},
      {"r = 2 divergence", r2_divergence},
      {"end-to-end classifier", end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s [%.2f s]\n      %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
