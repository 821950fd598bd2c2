#pragma once

// JSON ingestion and emission for Seifert data, spectral modes and
// holomorphic counts. Rationals travel as "p/q" strings (plain integers are
// accepted on input).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crsf/error.hpp"
#include "crsf/exactq.hpp"
#include "crsf/seifert.hpp"
#include "crsf/spectrum.hpp"

namespace crsf::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Schema, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Schema, "'" + path + "': " + e.what());
  }
}

inline Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(Errc::Schema, "field '" + field + "' must be a \"p/q\" string or an integer");
}

inline std::int64_t int_from_json(const json& obj, const std::string& field) {
  if (!obj.contains(field)) throw Error(Errc::Schema, "missing field '" + field + "'");
  const json& j = obj.at(field);
  if (!j.is_number_integer()) throw Error(Errc::Schema, "field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

/// {"genus": int | "chi_orb": "p/q", "degree": "p/q", "cone_points": [{"alpha", "rho", "beta"}]}
inline SeifertData seifert_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::Schema, "Seifert data must be a JSON object");
  if (!j.contains("degree")) throw Error(Errc::Schema, "missing field 'degree'");
  const bool has_genus = j.contains("genus"), has_chi = j.contains("chi_orb");
  if (has_genus == has_chi) throw Error(Errc::Schema, "exactly one of 'genus' and 'chi_orb' is required");
  std::vector<ConePoint> cones;
  if (j.contains("cone_points")) {
    const json& list = j.at("cone_points");
    if (!list.is_array()) throw Error(Errc::Schema, "'cone_points' must be an array");
    for (const auto& c : list) {
      if (!c.is_object()) throw Error(Errc::Schema, "cone point must be an object");
      cones.push_back(ConePoint{int_from_json(c, "alpha"), int_from_json(c, "rho"), int_from_json(c, "beta")});
    }
  }
  const Rational degree = rational_from_json(j.at("degree"), "degree");
  if (has_genus) return from_genus(int_from_json(j, "genus"), degree, std::move(cones));
  return from_chi(rational_from_json(j.at("chi_orb"), "chi_orb"), degree, std::move(cones));
}

inline json seifert_to_json(const SeifertData& data) {
  json cones = json::array();
  for (const auto& c : data.cone_points) cones.push_back({{"alpha", c.alpha}, {"rho", c.rho}, {"beta", c.beta}});
  return json{{"chi_orb", data.chi_orb.str()}, {"degree", data.degree.str()}, {"cone_points", cones}};
}

inline Scalar scalar_from_json(const json& j, const std::string& field) {
  if (j.is_number_float()) return j.get<double>();
  return rational_from_json(j, field);
}

/// [{"k": "p/q" | float, "n": int, "mult": int}, ...]
inline std::vector<SpectralMode> modes_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::Schema, "mode file must hold a JSON array");
  std::vector<SpectralMode> out;
  out.reserve(j.size());
  for (const auto& m : j) {
    if (!m.is_object() || !m.contains("k")) throw Error(Errc::Schema, "mode needs 'k', 'n' and 'mult'");
    out.push_back(SpectralMode{scalar_from_json(m.at("k"), "k"), int_from_json(m, "n"), int_from_json(m, "mult")});
  }
  return out;
}

inline json modes_to_json(const std::vector<SpectralMode>& modes) {
  json out = json::array();
  for (const auto& m : modes) {
    json k = m.k.is_exact() ? json(m.k.exact().str()) : json(m.k.to_double());
    out.push_back({{"k", k}, {"n", m.n}, {"mult", m.mult}});
  }
  return out;
}

/// {"h0": {"n": m, ...}, "h2": {"n": m, ...}}
inline HoloCounts holo_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::Schema, "holomorphic counts must be a JSON object");
  HoloCounts out;
  auto read_map = [&](const char* key, std::map<std::int64_t, std::int64_t>& dst) {
    if (!j.contains(key)) return;
    const json& m = j.at(key);
    if (!m.is_object()) throw Error(Errc::Schema, std::string("'") + key + "' must be an object");
    for (const auto& [n, count] : m.items()) {
      if (!count.is_number_integer()) throw Error(Errc::Schema, std::string("counts in '") + key + "' must be integers");
      try {
        std::size_t used = 0;
        const long long idx = std::stoll(n, &used);
        if (used != n.size()) throw std::invalid_argument(n);
        dst[idx] = count.get<std::int64_t>();
      } catch (const std::logic_error&) {
        throw Error(Errc::Schema, std::string("key '") + n + "' in '" + key + "' is not an integer");
      }
    }
  };
  read_map("h0", out.h0);
  read_map("h2", out.h2);
  validate(out);
  return out;
}

inline json holo_to_json(const HoloCounts& holo) {
  json h0 = json::object(), h2 = json::object();
  for (const auto& [n, m] : holo.h0) h0[std::to_string(n)] = m;
  for (const auto& [n, m] : holo.h2) h2[std::to_string(n)] = m;
  return json{{"h0", h0}, {"h2", h2}};
}

/// CSV rows value,mult,family,origin.
inline std::string lines_to_csv(const LineSet& lines) {
  std::ostringstream os;
  os << "value,mult,family,origin\n";
  for (const auto& l : lines) os << l.value.str() << ',' << l.mult << ',' << to_string(l.family) << ',' << l.origin << '\n';
  return os.str();
}

}  // namespace crsf::io
