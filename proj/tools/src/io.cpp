#include "clusterdyn/cli/io.hpp"

#include <charconv>
#include <ios>
#include <ostream>

#include "clusterdyn/quad.hpp"

namespace clusterdyn::cli {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t c = text.find(',');
    parts.push_back(text.substr(0, c));
    if (c == std::string_view::npos) break;
    text.remove_prefix(c + 1);
  }
  if (parts.size() != 4) {
    throw ParseError("expected 4 comma-separated coordinates, got " +
                     std::to_string(parts.size()));
  }
  return parts;
}

template <class T>
void write_scalar(std::ostream& os, const T& v) {
  if constexpr (ExactScalar<T>) {
    os << v.to_string();
  } else if constexpr (std::is_floating_point_v<T>) {
    char buf[128];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    os << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
  } else {
    os << v.str(0, std::ios_base::fmtflags{});
  }
}

json label_to_json(const VarietyLabel<PosReal>& l) {
  return {{"r", l.r}, {"p", l.p.to_string()}, {"q", l.q.to_string()}};
}

}  // namespace

Point4<Rational> parse_point4(std::string_view text) {
  const auto parts = split_commas(text);
  Point4<Rational> p{Rational::parse(parts[0]), Rational::parse(parts[1]),
                     Rational::parse(parts[2]), Rational::parse(parts[3])};
  require_positive(p);
  return p;
}

Point4<PosReal> parse_point4_posreal(std::string_view text) {
  const auto parts = split_commas(text);
  return {PosReal::parse(parts[0]), PosReal::parse(parts[1]), PosReal::parse(parts[2]),
          PosReal::parse(parts[3])};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json to_json(const OrbitRecord& rec) {
  json labels = json::array();
  for (const auto& l : rec.variety_labels) labels.push_back(label_to_json(l));
  return {
      {"r", rec.r},
      {"start",
       {rec.start.x1.to_string(), rec.start.x2.to_string(), rec.start.x3.to_string(),
        rec.start.x4.to_string()}},
      {"class", to_string(rec.cls)},
      {"J_values", rec.J_values},
      {"variety_labels", labels},
  };
}

OrbitRecord orbit_record_from_json(const json& j) {
  try {
    OrbitRecord rec;
    rec.r = j.at("r").get<int>();
    const auto& s = j.at("start");
    if (!s.is_array() || s.size() != 4) throw ParseError("start must have 4 entries");
    rec.start = {PosReal::parse(s[0].get<std::string>()), PosReal::parse(s[1].get<std::string>()),
                 PosReal::parse(s[2].get<std::string>()), PosReal::parse(s[3].get<std::string>())};
    rec.cls = parse_orbit_class(j.at("class").get<std::string>());
    rec.J_values = j.at("J_values").get<std::vector<double>>();
    for (const auto& l : j.at("variety_labels")) {
      rec.variety_labels.push_back({l.at("r").get<int>(), PosReal::parse(l.at("p").get<std::string>()),
                                    PosReal::parse(l.at("q").get<std::string>())});
    }
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed orbit record: ") + e.what());
  }
}

json to_json(const ExchangeMatrix& b) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(b(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const MonomialMap& m) {
  const auto& e = m.exponents();
  return {{"exponents", {e[0].to_string(), e[1].to_string(), e[2].to_string(), e[3].to_string()}},
          {"alpha", m.alpha().to_string()},
          {"beta", m.beta().to_string()}};
}

json to_json(const NormalFormResult& nf) {
  json out = {{"variant", variant_name(nf.form)}, {"conjugator", to_json(nf.conjugator)}};
  std::visit(
      [&out](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Fk>) {
          out["k"] = v.k;
        } else if constexpr (std::is_same_v<V, F2xi>) {
          out["xi"] = v.xi.to_string();
        } else {
          out["alpha"] = v.alpha.to_string();
          out["beta"] = v.beta.to_string();
        }
      },
      nf.form);
  return out;
}

template <Scalar T>
void write_orbit_csv(std::ostream& os, const std::vector<Point4<T>>& orbit) {
  os << "n,x1,x2,x3,x4\n";
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const auto& p = orbit[n];
    os << n << ',';
    write_scalar(os, p.x1);
    os << ',';
    write_scalar(os, p.x2);
    os << ',';
    write_scalar(os, p.x3);
    os << ',';
    write_scalar(os, p.x4);
    os << '\n';
  }
}

template void write_orbit_csv(std::ostream&, const std::vector<Point4<Rational>>&);
template void write_orbit_csv(std::ostream&, const std::vector<Point4<PosReal>>&);
template void write_orbit_csv(std::ostream&, const std::vector<Point4<double>>&);
template void write_orbit_csv(std::ostream&, const std::vector<Point4<long double>>&);
template void write_orbit_csv(std::ostream&, const std::vector<Point4<Quad>>&);

}  // namespace clusterdyn::cli
