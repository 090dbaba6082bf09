#include "clusterdyn/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "clusterdyn/random.hpp"

namespace clusterdyn::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  void check(std::string name, bool ok, std::string detail = {}) {
    result_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

PosReal faulted(const PosReal& lambda, const VerifyOptions& opts) {
  return opts.fault == Fault::LambdaSign ? lambda.inverse() : lambda;
}

template <class F>
int count_failures(int n, F&& pred) {
  int bad = 0;
  for (int i = 0; i < n; ++i) bad += pred() ? 0 : 1;
  return bad;
}

std::string failures(int bad, int n) {
  return std::to_string(n - bad) + "/" + std::to_string(n) + " points";
}

SuiteResult periodicity(const VerifyOptions& opts) {
  Recorder rec("periodicity");
  Rng rng(opts.seed);
  const int n = opts.samples;

  int bad = count_failures(n, [&] {
    const auto p = random_point2(rng);
    return psi_power(p, 4) == p;
  });
  rec.check("psi^4 = id", bad == 0, failures(bad, n));

  bad = count_failures(n, [&] {
    const auto p = random_point4(rng);
    return phi_power(1, p, 12) == p;
  });
  rec.check("phi_1^12 = id", bad == 0, failures(bad, n));

  for (const auto& [k, m] : std::map<long, int>{{-1, 3}, {0, 4}, {1, 6}}) {
    bad = count_failures(n, [&, k = k, m = m] {
      const auto p = random_point2(rng);
      auto q = p;
      for (int i = 0; i < m; ++i) q = fk(k, q);
      return q == p;
    });
    rec.check("f_" + std::to_string(k) + "^" + std::to_string(m) + " = id", bad == 0,
              failures(bad, n));
  }

  const std::vector<std::pair<Point4<Rational>, int>> reference = {
      {{2, 2, 2, 2}, 1}, {{2, 1, 5, 2}, 4}, {{1, 1, 1, 2}, 6}, {{1, 1, 1, 1}, 12}};
  for (const auto& [p, period] : reference) {
    int found = 0;
    auto q = p;
    for (int m = 1; m <= 12 && found == 0; ++m) {
      q = phi(1, q);
      if (q == p) found = m;
    }
    rec.check("minimal period of (" + p.x1.to_string() + "," + p.x2.to_string() + "," +
                  p.x3.to_string() + "," + p.x4.to_string() + ")",
              found == period, "found " + std::to_string(found));
  }
  return rec.take();
}

SuiteResult semiconjugacy(const VerifyOptions& opts) {
  Recorder rec("semiconjugacy");
  Rng rng(opts.seed);
  const int n = opts.samples;
  for (int r = 1; r <= 5; ++r) {
    const std::string rs = " (r=" + std::to_string(r) + ")";
    int bad = count_failures(n, [&] {
      const auto x = random_point4(rng);
      return reduce_pi(r, phi(r, x)) == psi(reduce_pi(r, x));
    });
    rec.check("pi o phi = psi o pi" + rs, bad == 0, failures(bad, n));
    bad = count_failures(n, [&] {
      const auto x = random_point4(rng);
      return reduce_Pi(r, phi(r, x)) == hat_phi(r, reduce_Pi(r, x));
    });
    rec.check("Pi o phi = hat_phi o Pi" + rs, bad == 0, failures(bad, n));
    bad = count_failures(n, [&] {
      const auto z = random_point2(rng);
      return conj_h(r, hat_phi(r, z)) == psi(conj_h(r, z)) && conj_h_inv(r, conj_h(r, z)) == z;
    });
    rec.check("h o hat_phi = psi o h" + rs, bad == 0, failures(bad, n));
    bad = count_failures(n, [&] {
      const auto x = random_point4(rng);
      return conj_h(r, reduce_Pi(r, x)) == reduce_pi(r, x);
    });
    rec.check("pi = h o Pi" + rs, bad == 0, failures(bad, n));
  }
  return rec.take();
}

SuiteResult presymplectic(const VerifyOptions& opts) {
  Recorder rec("presymplectic");
  Rng rng(opts.seed);
  for (int r = 1; r <= 5; ++r) {
    const std::string rs = " (r=" + std::to_string(r) + ")";
    const ExchangeMatrix b = derive_b_matrix(r, opts.seed);
    rec.check("B rank 2" + rs, b.rank() == 2, "rank " + std::to_string(b.rank()));
    double worst = 0;
    for (int i = 0; i < opts.samples; ++i) {
      worst = std::max(worst, check_presymplectic(r, b, random_point4(rng)));
    }
    rec.check("pullback residual < 1e-10" + rs, worst < 1e-10, "max residual " + fmt(worst));
  }
  auto e = derive_b_matrix(1, opts.seed).entries();
  e[0][1] = -e[0][1];
  e[1][0] = -e[1][0];
  const double bad = check_presymplectic(1, ExchangeMatrix(e), {1, 2, 3, 4});
  rec.check("flipped b12 is rejected", bad > 0.01, "residual " + fmt(bad));
  return rec.take();
}

SuiteResult normalform(const VerifyOptions& opts) {
  Recorder rec("normalform");
  Rng rng(opts.seed);
  const int n = opts.samples;

  int bad = count_failures(n, [&] {
    const GammaElement f = random_gamma(rng);
    const NormalFormResult nf = normal_form(f);
    return compose(nf.conjugator, f.to_map()) ==
           compose(to_gamma(nf.form).to_map(), nf.conjugator);
  });
  rec.check("conjugator o f = NF o conjugator", bad == 0, failures(bad, n));

  rec.check("bar phi_2 -> f_{2,2}",
            normal_form(restricted_bar_element(2)).form == NormalForm(F2xi{PosReal(2)}));
  const PosReal lam2 = PosReal::from_rational(lambda_of(VarietyLabel<Rational>{2, 2, Rational(1, 3)}));
  rec.check("tilde phi_2 -> f_{2,lambda^4}",
            normal_form(restricted_tilde_element(2, faulted(lam2, opts))).form ==
                NormalForm(F2xi{lam2.pow(4L)}));
  for (int r = 3; r <= 5; ++r) {
    const long r2 = static_cast<long>(r) * r;
    rec.check("bar phi_" + std::to_string(r) + " -> f_" + std::to_string(r),
              normal_form(restricted_bar_element(r)).form == NormalForm(Fk{r}));
    const long k = (r2 - 2) * (r2 - 2) - 2;
    rec.check("tilde phi_" + std::to_string(r) + " -> f_" + std::to_string(k),
              normal_form(restricted_tilde_element(r, lam2)).form == NormalForm(Fk{k}));
  }

  for (int r = 1; r <= 3; ++r) {
    const std::string rs = " (r=" + std::to_string(r) + ")";
    bad = count_failures(n, [&] {
      const auto z = random_point2(rng, 4, 4);
      return embed_c11(r, restricted_bar(r, z)) == phi(r, embed_c11(r, z));
    });
    rec.check("embed o bar phi = phi o embed" + rs, bad == 0, failures(bad, n));

    int bad_l = 0;
    bad = count_failures(n, [&] {
      const VarietyLabel<Rational> lbl{r, random_rational(rng, 4, 4), random_rational(rng, 4, 4)};
      const auto z = random_point2(rng, 4, 4);
      const PosReal lam = faulted(PosReal::from_rational(lambda_of(lbl)), opts);
      const auto x = embed_cpq(lbl, z);
      if (l_function(r, x) != lam) ++bad_l;
      const auto image = restricted_tilde(r, lam, convert_point<PosReal>(z));
      const VarietyLabel<PosReal> plbl{r, PosReal::from_rational(lbl.p),
                                       PosReal::from_rational(lbl.q)};
      return embed_cpq(plbl, image) == phi_power(r, x, 4);
    });
    rec.check("embed o tilde phi = phi^4 o embed" + rs, bad == 0, failures(bad, n));
    rec.check("l = lambda on C_(p,q)" + rs, bad_l == 0, failures(bad_l, n));
  }
  return rec.take();
}

SuiteResult integrals(const VerifyOptions& opts) {
  Recorder rec("integrals");
  Rng rng(opts.seed);
  const int n = opts.samples;

  for (long k : {3L, 7L, 14L, 47L}) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const auto p = random_point2(rng);
      worst = std::max(worst, std::abs(first_integral_Ik(k, fk(k, p), {}) -
                                       first_integral_Ik(k, p, {})));
    }
    rec.check("I_" + std::to_string(k) + " o f_k = I_k", worst < 1e-12, "max drift " + fmt(worst));
  }

  for (int r : {3, 5}) {
    const std::string rs = " (r=" + std::to_string(r) + ")";
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const auto z = random_point2(rng);
      worst = std::max(worst, std::abs(J_bar(r, restricted_bar(r, z)) - J_bar(r, z)));
    }
    rec.check("J_bar o bar phi = J_bar" + rs, worst < 1e-10, "max drift " + fmt(worst));

    worst = 0;
    for (int i = 0; i < std::min(n, 5); ++i) {
      LogPoint4 x = to_log_point(random_point4(rng), 2048);
      const double j0 = J_tilde_log(r, x);
      for (int step = 0; step < 50; ++step) {
        for (int s = 0; s < 4; ++s) x = phi_log(r, x);
        worst = std::max(worst, std::abs(J_tilde_log(r, x) - j0));
      }
    }
    rec.check("J_tilde conserved by phi^4 over 50 steps" + rs, worst < 1e-10,
              "max drift " + fmt(worst));
  }
  return rec.take();
}

const std::map<std::string, std::function<SuiteResult(const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(const VerifyOptions&)>> r = {
      {"periodicity", periodicity}, {"semiconjugacy", semiconjugacy},
      {"presymplectic", presymplectic}, {"normalform", normalform},
      {"integrals", integrals},
  };
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"periodicity", "semiconjugacy", "presymplectic",
                                                 "normalform", "integrals"};
  return names;
}

std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(registry().at(name)(opts));
    return out;
  }
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error("unknown verify suite: " + suite);
  out.push_back(it->second(opts));
  return out;
}

json to_json(const std::vector<SuiteResult>& results) {
  json suites = json::array();
  bool all = true;
  for (const auto& s : results) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    suites.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", checks}});
    all = all && s.passed();
  }
  return {{"passed", all}, {"suites", suites}};
}

}  // namespace clusterdyn::cli
