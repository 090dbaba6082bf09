#include "clusterdyn/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "clusterdyn/cli/io.hpp"
#include "clusterdyn/cli/level_set.hpp"
#include "clusterdyn/cli/verify.hpp"
#include "clusterdyn/quad.hpp"
#include "clusterdyn/random.hpp"

namespace clusterdyn::cli {

namespace {

struct Config {
  std::string mode = "float";
  long bits = 53;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  std::size_t max_steps = 10000;
  double escape = 1e8;
  double bit_budget = 1e6;
};

/// Thrown for argument combinations that CLI11 cannot validate itself.
struct UsageError : Error {
  using Error::Error;
};

struct Output {
  explicit Output(const Config& cfg, std::ostream& fallback) : os(&fallback) {
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw UsageError("cannot open output file " + cfg.out);
      os = &file;
    }
  }
  std::ofstream file;
  std::ostream* os;
};

std::string choose_format(const Config& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void check_config(const Config& cfg) {
  if (cfg.mode != "exact" && cfg.mode != "float") throw UsageError("--mode must be exact or float");
  if (cfg.bits < 53) throw UsageError("--bits must be at least 53");
  if (!(cfg.tol >= 0)) throw UsageError("--tol must be nonnegative");
  if (cfg.max_steps == 0 || !(cfg.escape > 1) || !(cfg.bit_budget >= 1)) {
    throw UsageError("--max-steps, --escape and --bit-budget must be positive (escape > 1)");
  }
}

// ---- orbit -----------------------------------------------------------------

template <Scalar T>
void emit_orbit(std::ostream& os, const std::string& format, int r,
                const std::vector<Point4<T>>& orbit) {
  if (format == "csv") {
    write_orbit_csv(os, orbit);
    return;
  }
  std::stringstream csv;
  write_orbit_csv(csv, orbit);
  json rows = json::array();
  std::string line;
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    json row = json::array();
    std::stringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  os << json{{"r", r}, {"orbit", rows}}.dump(2) << '\n';
}

template <FloatScalar T>
void orbit_float(std::ostream& os, const std::string& format, int r, const Point4<Rational>& p,
                 std::size_t steps) {
  emit_orbit(os, format, r, phi_iter(r, convert_point<T>(p), steps));
}

int cmd_orbit(const Config& cfg, int r, const std::string& point, std::size_t steps,
              std::ostream& out) {
  Output o(cfg, out);
  const std::string format = choose_format(cfg, "csv");
  const IterOptions iter{static_cast<std::size_t>(cfg.bit_budget)};
  if (cfg.mode == "exact") {
    if (point.find('^') != std::string::npos) {
      emit_orbit(*o.os, format, r, phi_iter(r, parse_point4_posreal(point), steps, iter));
    } else {
      emit_orbit(*o.os, format, r, phi_iter(r, parse_point4(point), steps, iter));
    }
    return kOk;
  }
  const Point4<Rational> p = parse_point4(point);
  if (cfg.bits <= 53) {
    orbit_float<double>(*o.os, format, r, p, steps);
  } else if (cfg.bits <= 64) {
    orbit_float<long double>(*o.os, format, r, p, steps);
  } else if (cfg.bits <= 113) {
    orbit_float<Quad>(*o.os, format, r, p, steps);
  } else {
    throw UsageError("float mode supports at most 113 bits");
  }
  return kOk;
}

// ---- classify / sweep -------------------------------------------------------

BruteForceOptions oracle_options(const Config& cfg) {
  BruteForceOptions b;
  b.max_steps = cfg.max_steps;
  b.escape = cfg.escape;
  return b;
}

bool agree(const OrbitClass4& a, const OrbitClass4& b) {
  return a.kind == OrbitClass4::Kind::Undecidable || b.kind == OrbitClass4::Kind::Undecidable ||
         a == b;
}

int cmd_classify(const Config& cfg, int r, const std::string& point, bool oracle,
                 std::ostream& out) {
  Output o(cfg, out);
  const std::string format = choose_format(cfg, "json");
  const Point4<PosReal> x = parse_point4_posreal(point);
  RecordOptions ro;
  ro.bit_budget = static_cast<std::size_t>(cfg.bit_budget);
  const OrbitRecord rec = make_orbit_record(r, x, ro);
  std::optional<OrbitClass4> oc;
  if (oracle) oc = brute_force_classify(r, x, oracle_options(cfg));

  if (format == "csv") {
    *o.os << "r,x1,x2,x3,x4,class" << (oc ? ",oracle" : "") << '\n';
    *o.os << r << ',' << x.x1.to_string() << ',' << x.x2.to_string() << ','
          << x.x3.to_string() << ',' << x.x4.to_string() << ',' << to_string(rec.cls);
    if (oc) *o.os << ',' << to_string(*oc);
    *o.os << '\n';
  } else {
    json j = to_json(rec);
    if (oc) {
      j["oracle"] = to_string(*oc);
      j["agree"] = agree(rec.cls, *oc);
    }
    *o.os << j.dump(2) << '\n';
  }
  return oc && !agree(rec.cls, *oc) ? kVerificationFailure : kOk;
}

struct Axis {
  Rational lo, hi;
  long n = 1;
};

Axis parse_axis(std::string_view s) {
  const std::size_t c1 = s.find(':');
  const std::size_t c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw UsageError("grid axis must be lo:hi:n");
  Axis a{Rational::parse(s.substr(0, c1)), Rational::parse(s.substr(c1 + 1, c2 - c1 - 1)),
         std::stol(std::string(s.substr(c2 + 1)))};
  if (a.n < 1 || a.lo.sign() <= 0 || a.hi < a.lo) {
    throw UsageError("grid axis needs 0 < lo <= hi and n >= 1");
  }
  return a;
}

/// "lo:hi:n" for all four coordinates, or four such axes joined by ','.
std::vector<Point4<Rational>> parse_grid(const std::string& spec) {
  std::vector<Axis> axes;
  std::string_view s = spec;
  while (true) {
    const std::size_t c = s.find(',');
    axes.push_back(parse_axis(s.substr(0, c)));
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  if (axes.size() == 1) axes.assign(4, axes[0]);
  if (axes.size() != 4) throw UsageError("grid needs one axis or four axes");

  auto value = [](const Axis& a, long i) {
    return a.n == 1 ? a.lo : a.lo + (a.hi - a.lo) * Rational(i, a.n - 1);
  };
  std::vector<Point4<Rational>> pts;
  for (long i = 0; i < axes[0].n; ++i)
    for (long j = 0; j < axes[1].n; ++j)
      for (long k = 0; k < axes[2].n; ++k)
        for (long l = 0; l < axes[3].n; ++l)
          pts.push_back({value(axes[0], i), value(axes[1], j), value(axes[2], k),
                         value(axes[3], l)});
  return pts;
}

int cmd_sweep(const Config& cfg, int r, const std::string& grid, bool oracle, int threads,
              std::ostream& out) {
  Output o(cfg, out);
  const std::string format = choose_format(cfg, "csv");
  const auto pts = parse_grid(grid);
  struct Row {
    std::string cls, oracle;
  };
  std::vector<Row> rows(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      try {
        rows[i].cls = to_string(classify(r, pts[i]));
      } catch (const Error&) {
        rows[i].cls = "Error";
      }
      if (oracle) rows[i].oracle = to_string(brute_force_classify(r, pts[i], oracle_options(cfg)));
    }
  };
  const int n = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool disagree = false;
  for (std::size_t i = 0; i < pts.size() && oracle; ++i) {
    disagree = disagree || !agree(parse_orbit_class(rows[i].cls == "Error" ? "Undecidable" : rows[i].cls),
                                  parse_orbit_class(rows[i].oracle));
  }
  if (format == "csv") {
    *o.os << "index,x1,x2,x3,x4,class" << (oracle ? ",oracle" : "") << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      *o.os << i << ',' << p.x1.to_string() << ',' << p.x2.to_string() << ','
            << p.x3.to_string() << ',' << p.x4.to_string() << ',' << rows[i].cls;
      if (oracle) *o.os << ',' << rows[i].oracle;
      *o.os << '\n';
    }
  } else {
    json arr = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      json row = {{"index", i},
                  {"point", {p.x1.to_string(), p.x2.to_string(), p.x3.to_string(),
                             p.x4.to_string()}},
                  {"class", rows[i].cls}};
      if (oracle) row["oracle"] = rows[i].oracle;
      arr.push_back(row);
    }
    *o.os << json{{"r", r}, {"results", arr}}.dump(2) << '\n';
  }
  return disagree ? kVerificationFailure : kOk;
}

// ---- normal-form / level-set / bmatrix / variety ---------------------------

int cmd_normal_form(const Config& cfg, long a, long b, long c, long d, const std::string& alpha,
                    const std::string& beta, std::ostream& out) {
  Output o(cfg, out);
  const GammaElement f(a, b, c, d, PosReal::parse(alpha), PosReal::parse(beta));
  json j = to_json(normal_form(f));
  j["xi_invariant"] = xi_invariant(f).to_string();
  j["trace"] = f.trace();
  *o.os << j.dump(2) << '\n';
  return kOk;
}

int cmd_level_set(const Config& cfg, long k, double value, std::size_t samples, double range,
                  std::ostream& out) {
  Output o(cfg, out);
  const std::string format = choose_format(cfg, "csv");
  const auto pts = level_set(k, value, samples, range);
  const double tol = std::max(cfg.tol, 1e-9);
  for (const auto& p : pts) {
    const double resid = p.u * p.u - static_cast<double>(k) * p.u * p.v + p.v * p.v - value;
    if (std::abs(resid) > tol * std::max(1.0, std::abs(value))) {
      throw Error("level-set residual " + format_double(resid) + " exceeds tolerance");
    }
  }
  if (format == "csv") {
    *o.os << "i,x,y,log_x,log_y\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      *o.os << i << ',' << format_double(std::exp(pts[i].u)) << ','
            << format_double(std::exp(pts[i].v)) << ',' << format_double(pts[i].u) << ','
            << format_double(pts[i].v) << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& p : pts) {
      arr.push_back({{"x", std::exp(p.u)}, {"y", std::exp(p.v)}, {"log_x", p.u}, {"log_y", p.v}});
    }
    *o.os << json{{"k", k}, {"value", value}, {"points", arr}}.dump(2) << '\n';
  }
  return kOk;
}

int cmd_bmatrix(const Config& cfg, int r, std::ostream& out) {
  Output o(cfg, out);
  const ExchangeMatrix b = derive_b_matrix(r, cfg.seed);
  const ExchangeMatrix b1 = derive_b_matrix(1, cfg.seed);

  std::optional<long> factor;
  for (long m : {1L, -1L, 2L, -2L, 3L, -3L, static_cast<long>(r), -static_cast<long>(r)}) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j) ok = b(i, j) == m * b1(i, j);
    if (ok) {
      factor = m;
      break;
    }
  }
  Rng rng(cfg.seed + 1);
  double worst = 0;
  for (int i = 0; i < 20; ++i) worst = std::max(worst, check_presymplectic(r, b, random_point4(rng)));

  json j = {{"r", r},
            {"B", to_json(b)},
            {"rank", b.rank()},
            {"max_residual", worst},
            {"proportional_to_b1", factor.has_value()}};
  if (factor) j["factor"] = *factor;
  *o.os << j.dump(2) << '\n';
  return kOk;
}

int cmd_variety(const Config& cfg, int r, const std::string& point, const std::string& action,
                const std::string& p, const std::string& q, std::ostream& out) {
  Output o(cfg, out);
  const Point4<PosReal> x = parse_point4_posreal(point);
  require_positive(x);
  json j = {{"r", r}, {"action", action}};
  if (action == "label") {
    const auto lbl = label_of(r, x);
    j["p"] = lbl.p.to_string();
    j["q"] = lbl.q.to_string();
  } else if (action == "member") {
    if (p.empty() || q.empty()) throw UsageError("member needs --p and --q");
    j["member"] = member(VarietyLabel<PosReal>{r, PosReal::parse(p), PosReal::parse(q)}, x);
  } else if (action == "lambda") {
    const PosReal lam = lambda_of(label_of(r, x));
    j["lambda"] = lam.to_string();
    j["lambda_float"] = lam.to_double();
    j["l"] = l_function(r, x).to_string();
  } else if (action == "on-v") {
    j["on_v"] = on_V(r, x);
  } else {
    throw UsageError("unknown variety action: " + action);
  }
  *o.os << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& suite, const std::string& fault, int samples,
               std::ostream& out) {
  VerifyOptions vo;
  vo.seed = cfg.seed;
  vo.samples = samples;
  if (fault == "lambda-sign") {
    vo.fault = Fault::LambdaSign;
  } else if (fault != "none") {
    throw UsageError("unknown fault: " + fault);
  }
  if (suite != "all" &&
      std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw UsageError("unknown verify suite: " + suite);
  }
  const auto results = run_verify(suite, vo);
  bool all = true;
  for (const auto& s : results) {
    for (const auto& c : s.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << s.suite << ": " << c.name;
      if (!c.detail.empty()) out << " [" << c.detail << ']';
      out << '\n';
    }
    all = all && s.passed();
  }
  const json summary = to_json(results);
  if (cfg.out.empty()) {
    out << summary.dump(2) << '\n';
  } else {
    Output o(cfg, out);
    *o.os << summary.dump(2) << '\n';
  }
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and floating orbit computations for the cluster maps phi_r", "clusterdyn"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--bits", cfg.bits, "float precision in bits (53, 64 or 113 in float mode)");
  app.add_option("--tol", cfg.tol, "comparison tolerance");
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-steps", cfg.max_steps, "oracle iteration limit");
  app.add_option("--escape", cfg.escape, "oracle escape radius");
  app.add_option("--bit-budget", cfg.bit_budget, "bit budget for exact iteration");

  int r = 1;
  std::string point;
  std::size_t steps = 12;
  auto* orbit = app.add_subcommand("orbit", "iterate phi_r");
  orbit->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  orbit->add_option("--point", point, "a,b,c,d")->required();
  orbit->add_option("--steps", steps);

  bool oracle = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify the orbit of a point");
  classify_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--point", point, "a,b,c,d (rationals or forms like 2^(1/3))")
      ->required();
  classify_cmd->add_flag("--oracle", oracle, "also run the brute-force oracle");

  std::string grid;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "classify a grid of points");
  sweep->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--grid", grid, "lo:hi:n, or four such axes separated by ','")->required();
  sweep->add_flag("--oracle", oracle);
  sweep->add_option("--threads", threads);

  long a = 1, b = 0, c = 0, d = 1;
  std::string alpha = "1", beta = "1";
  auto* nf = app.add_subcommand("normal-form", "normal form of a Gamma element");
  nf->add_option("--a", a)->required();
  nf->add_option("--b", b)->required();
  nf->add_option("--c", c)->required();
  nf->add_option("--d", d)->required();
  nf->add_option("--alpha", alpha);
  nf->add_option("--beta", beta);

  long k = 3;
  double value = 0;
  std::size_t samples = 100;
  double range = 3.0;
  auto* ls = app.add_subcommand("level-set", "sample a level set of I_k");
  ls->add_option("--k", k)->required();
  ls->add_option("--value", value)->required();
  ls->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ls->add_option("--range", range, "log-range for unbounded branches")
      ->check(CLI::PositiveNumber);

  auto* bm = app.add_subcommand("bmatrix", "derive the exchange matrix B_r");
  bm->add_option("--r", r)->required()->check(CLI::PositiveNumber);

  std::string action, p, q;
  auto* var = app.add_subcommand("variety", "invariant varieties");
  var->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  var->add_option("--point", point)->required();
  var->add_option("--p", p);
  var->add_option("--q", q);
  var->add_option("action", action, "label | member | lambda | on-v")
      ->required()
      ->check(CLI::IsMember({"label", "member", "lambda", "on-v"}));

  std::string suite = "all";
  std::string fault = "none";
  int verify_samples = 20;
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("suite", suite)->check(CLI::IsMember(
      {"all", "periodicity", "semiconjugacy", "presymplectic", "normalform", "integrals"}));
  ver->add_option("--samples", verify_samples)->check(CLI::PositiveNumber);
  ver->add_option("--inject-fault", fault, "none | lambda-sign")
      ->check(CLI::IsMember({"none", "lambda-sign"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    check_config(cfg);
    if (orbit->parsed()) return cmd_orbit(cfg, r, point, steps, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, r, point, oracle, out);
    if (sweep->parsed()) return cmd_sweep(cfg, r, grid, oracle, threads, out);
    if (nf->parsed()) return cmd_normal_form(cfg, a, b, c, d, alpha, beta, out);
    if (ls->parsed()) return cmd_level_set(cfg, k, value, samples, range, out);
    if (bm->parsed()) return cmd_bmatrix(cfg, r, out);
    if (var->parsed()) return cmd_variety(cfg, r, point, action, p, q, out);
    if (ver->parsed()) return cmd_verify(cfg, suite, fault, verify_samples, out);
  } catch (const SizeExceeded& e) {
    err << "resource exhausted: " << e.what() << '\n';
    return kResourceExhausted;
  } catch (const PrecisionExhausted& e) {
    err << "resource exhausted: " << e.what() << '\n';
    return kResourceExhausted;
  } catch (const Overflow& e) {
    err << "resource exhausted: " << e.what() << '\n';
    return kResourceExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace clusterdyn::cli
