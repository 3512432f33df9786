#pragma once

// Configuration documents (JSON) and vector-system text files.
//
// Configuration document:
//   {
//     "d": 2,
//     "mode": "full",
//     "classes": [
//       [["1", "0"], ["-1", "1"], ["-1", "-1"]],
//       ...
//     ],
//     "provenance": {"generator": "random", "seed": 1}
//   }
// Coordinates are strings holding an integer or a fraction "a/b" (JSON
// integers are accepted on input). "provenance" is optional.
//
// System file: a header line "d=<n>" followed by one vector per line, entries
// one-based and space separated. Blank lines and lines starting with '#' are
// ignored.

#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cdepth/configuration.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

namespace detail {

inline std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

inline Rat coordinate_from_json(const nlohmann::ordered_json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(BigInt(v.dump()));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, where + ": " + e.what());
  }
  throw Error(ErrorKind::parse, where + ": coordinate must be a string or an integer");
}

}  // namespace detail

inline std::string serialize_configuration(const Configuration& config) {
  std::ostringstream out;
  out << "{\n  \"d\": " << config.dim() << ",\n  \"mode\": \"" << to_string(config.mode()) << "\",\n  \"classes\": [\n";
  for (std::size_t c = 0; c < config.colours(); ++c) {
    out << "    [";
    for (std::size_t s = 0; s < config.class_size(); ++s) {
      out << (s ? ", [" : "[");
      const Coords& p = config.point(c, s);
      for (std::size_t k = 0; k < p.size(); ++k) out << (k ? ", " : "") << detail::json_string(to_string(p[k]));
      out << "]";
    }
    out << "]" << (c + 1 < config.colours() ? "," : "") << "\n";
  }
  out << "  ]";
  if (!config.provenance().empty()) out << ",\n  \"provenance\": " << config.provenance().dump();
  out << "\n}\n";
  return out.str();
}

inline Configuration configuration_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::parse, "document root must be an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<long long>() < 1)
    throw Error(ErrorKind::parse, "d: expected a positive integer");
  const auto d = static_cast<std::size_t>(doc["d"].get<long long>());
  CoreMode mode = CoreMode::full;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw Error(ErrorKind::parse, "mode: expected \"full\" or \"diamond\"");
    mode = parse_core_mode(doc["mode"].get<std::string>());
  }
  if (!doc.contains("classes") || !doc["classes"].is_array()) throw Error(ErrorKind::parse, "classes: expected an array");
  std::vector<std::vector<Coords>> classes;
  const auto& cls = doc["classes"];
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const std::string cw = "classes[" + std::to_string(c) + "]";
    if (!cls[c].is_array()) throw Error(ErrorKind::parse, cw + ": expected an array of points");
    std::vector<Coords> pts;
    for (std::size_t s = 0; s < cls[c].size(); ++s) {
      const std::string pw = cw + "[" + std::to_string(s) + "]";
      const auto& pj = cls[c][s];
      if (!pj.is_array()) throw Error(ErrorKind::parse, pw + ": expected an array of coordinates");
      Coords p;
      for (std::size_t k = 0; k < pj.size(); ++k)
        p.push_back(detail::coordinate_from_json(pj[k], pw + "[" + std::to_string(k) + "]"));
      if (p.size() != d)
        throw Error(ErrorKind::parse, pw + ": expected " + std::to_string(d) + " coordinates, got " +
                                          std::to_string(p.size()));
      pts.push_back(std::move(p));
    }
    classes.push_back(std::move(pts));
  }
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
  if (doc.contains("provenance")) provenance = doc["provenance"];
  return Configuration::create(d, std::move(classes), mode, std::move(provenance));
}

/// Parses and validates a configuration document. Rejections carry the first
/// violated invariant and, for syntax problems, its location.
inline Configuration parse_configuration(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return configuration_from_json(doc);
}

inline std::string serialize_system(const VectorSystem& system) {
  std::string out = "d=" + std::to_string(system.dim()) + "\n";
  for (const IndexVector& v : system.vectors()) {
    for (std::size_t q = 0; q < v.size(); ++q) out += (q ? " " : "") + std::to_string(v[q] + 1);
    out += "\n";
  }
  return out;
}

inline VectorSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> d;
  std::vector<IndexVector> vectors;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!d) {
      if (line.compare(first, 2, "d=") != 0) throw Error(ErrorKind::parse, where + ": expected header \"d=<n>\"");
      try {
        std::size_t used = 0;
        const long long v = std::stoll(line.substr(first + 2), &used);
        if (v < 1) throw std::invalid_argument("d");
        d = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, where + ": malformed header");
      }
      continue;
    }
    std::istringstream row(line);
    IndexVector v;
    std::string tok;
    while (row >> tok) {
      long long x = 0;
      try {
        std::size_t used = 0;
        x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse, where + ": malformed entry '" + tok + "'");
      }
      if (x < 1 || x > static_cast<long long>(*d + 1))
        throw Error(ErrorKind::parse, where + ": entry " + tok + " outside 1.." + std::to_string(*d + 1));
      v.entries.push_back(static_cast<int>(x - 1));
    }
    if (v.size() != *d + 1)
      throw Error(ErrorKind::parse, where + ": expected " + std::to_string(*d + 1) + " entries");
    vectors.push_back(std::move(v));
  }
  if (!d) throw Error(ErrorKind::parse, "missing header \"d=<n>\"");
  return VectorSystem(*d, std::move(vectors));
}

}  // namespace cdepth
