#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "clusterdyn/dynamics.hpp"
#include "clusterdyn/gamma.hpp"
#include "clusterdyn/quiver.hpp"

namespace clusterdyn::cli {

using nlohmann::json;

/// "a,b,c,d" with rational coordinates ("3/2", "0.5").
Point4<Rational> parse_point4(std::string_view text);
/// Same, but each coordinate may also be a PosReal such as "2^(-1)".
Point4<PosReal> parse_point4_posreal(std::string_view text);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

json to_json(const OrbitRecord& rec);
OrbitRecord orbit_record_from_json(const json& j);

json to_json(const ExchangeMatrix& b);
json to_json(const MonomialMap& m);
json to_json(const NormalFormResult& nf);

template <Scalar T>
void write_orbit_csv(std::ostream& os, const std::vector<Point4<T>>& orbit);

}  // namespace clusterdyn::cli
