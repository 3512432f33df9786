#pragma once

// Text renderings of every report type. JSON and CSV are meant for scripts
// and keep their field order fixed; the human form is a plain table.
// Indices are one-based in every format.

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdepth/bounds.hpp"
#include "cdepth/depth.hpp"
#include "cdepth/octahedron.hpp"
#include "cdepth/proof_trace.hpp"
#include "cdepth/search.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

enum class Format { human, json, csv };

inline Format parse_format(std::string_view s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw Error(ErrorKind::invalid_argument, "unknown format '" + std::string(s) + "'");
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson json_of(const IndexVector& v) {
  ojson a = ojson::array();
  for (int e : v.entries) a.push_back(e + 1);
  return a;
}

inline ojson json_of(const std::vector<IndexVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(json_of(v));
  return a;
}

/// Missing colour is null.
inline ojson json_of(const Transversal& t) {
  ojson a = ojson::array();
  for (int e : t.choice) a.push_back(e < 0 ? ojson(nullptr) : ojson(e + 1));
  return a;
}

inline ojson json_of(const VectorSystem& s) { return json_of(s.vectors()); }

inline std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Two-column CSV of a flat JSON object; arrays are written as JSON text.
inline std::string field_csv(const ojson& doc) {
  std::string out = "field,value\n";
  for (const auto& [k, v] : doc.items()) out += k + "," + csv_quote(v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

inline std::string vector_csv(std::size_t d, const std::vector<IndexVector>& vs) {
  std::string out = "simplex";
  for (std::size_t q = 1; q <= d + 1; ++q) out += ",colour_" + std::to_string(q);
  out += "\n";
  for (std::size_t r = 0; r < vs.size(); ++r) {
    out += std::to_string(r + 1);
    for (int e : vs[r].entries) out += "," + std::to_string(e + 1);
    out += "\n";
  }
  return out;
}

inline std::string join(const std::vector<IndexVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + to_string(v);
  return out.empty() ? "-" : out;
}

inline std::string one_based(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k] + 1);
  return out + "}";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const DepthReport& r) {
  detail::ojson doc;
  doc["d"] = r.d;
  doc["depth"] = r.depth;
  doc["simplices"] = detail::json_of(r.simplices);
  doc["coverage"] = r.cov;
  return doc;
}

inline std::string render(const DepthReport& r, Format f) {
  if (f == Format::json) return detail::dump(to_json(r));
  if (f == Format::csv) return detail::vector_csv(r.d, r.simplices);
  std::ostringstream out;
  out << "d         " << r.d << "\n";
  out << "depth     " << r.depth << "\n";
  out << "simplices\n";
  for (std::size_t k = 0; k < r.simplices.size(); ++k) out << "  " << k + 1 << "\t" << to_string(r.simplices[k]) << "\n";
  out << "antipode coverage (row: colour, column: point)\n";
  for (std::size_t i = 0; i < r.cov.size(); ++i) {
    out << "  " << i + 1 << " |";
    for (auto c : r.cov[i]) out << " " << c;
    out << "\n";
  }
  return out.str();
}

inline nlohmann::ordered_json to_json(const ProofTrace& t) {
  using detail::json_of;
  detail::ojson doc;
  doc["d"] = t.d;
  doc["requested_colour"] = t.requested_colour + 1;
  doc["colour"] = t.colour + 1;
  doc["branch"] = to_string(t.branch);
  doc["depth"] = t.depth;
  doc["collected_count"] = t.collected.size();
  doc["guaranteed"] = t.guaranteed;
  doc["theorem_bound"] = theorem_bound(static_cast<std::int64_t>(t.d));
  if (t.branch == TraceBranch::small_l) {
    doc["antipode"] = t.choice.antipode + 1;
    doc["j"] = t.choice.coverage;
    doc["T"] = json_of(t.choice.transversal);
    doc["L"] = detail::ojson::array();
    for (int s : t.choice.spanned) doc["L"].push_back(s + 1);
    doc["l"] = t.choice.spanned.size();
    detail::ojson ren = detail::ojson::array();
    for (const auto& r : t.renumbering) {
      detail::ojson row = detail::ojson::array();
      for (int s : r) row.push_back(s + 1);
      ren.push_back(row.empty() ? detail::ojson(nullptr) : row);
    }
    doc["renumbering"] = ren;
    detail::ojson octs = detail::ojson::array();
    for (const auto& o : t.octahedra) {
      detail::ojson e;
      e["partner"] = json_of(o.partner);
      e["spans_all_missing"] = o.spans_all_missing;
      detail::ojson spans = detail::ojson::array();
      for (const auto& list : o.spans) {
        detail::ojson a = detail::ojson::array();
        for (const auto& tr : list) a.push_back(json_of(tr));
        spans.push_back(a);
      }
      e["spans"] = spans;
      octs.push_back(e);
    }
    doc["octahedra"] = octs;
    doc["b_hat"] = t.b_hat;
    doc["coverage_bound"] = t.coverage_bound;
    doc["octahedral_bound"] = t.octahedral_bound;
  } else {
    detail::ojson cols = detail::ojson::array();
    for (std::size_t q = 0; q < t.colour_choices.size(); ++q) {
      const auto& c = t.colour_choices[q];
      detail::ojson e;
      e["colour"] = q + 1;
      e["U"] = json_of(c.transversal);
      e["L"] = detail::ojson::array();
      for (int s : c.spanned) e["L"].push_back(s + 1);
      e["l"] = c.spanned.size();
      e["X"] = json_of(t.families[q]);
      cols.push_back(e);
    }
    doc["colours"] = cols;
    doc["l_min"] = t.l_min;
    doc["m_colour"] = t.m_colour + 1;
    doc["M"] = json_of(t.m_set);
    doc["k"] = t.duplicates;
    doc["c"] = t.components;
  }
  doc["collected"] = json_of(t.collected);
  return doc;
}

inline std::string render(const ProofTrace& t, Format f) {
  if (f == Format::json) return detail::dump(to_json(t));
  if (f == Format::csv) {
    auto doc = to_json(t);
    doc.erase("octahedra");
    doc.erase("colours");
    return detail::field_csv(doc);
  }
  std::ostringstream out;
  out << "colour " << t.colour + 1;
  if (t.colour != t.requested_colour) out << " (requested " << t.requested_colour + 1 << ")";
  out << ", branch " << to_string(t.branch) << "\n";
  if (t.branch == TraceBranch::small_l) {
    out << "least covered antipode " << t.choice.antipode + 1 << ", j = " << t.choice.coverage << "\n";
    out << "T = " << to_string(t.choice.transversal) << ", L = " << detail::one_based(t.choice.spanned)
        << ", l = " << t.choice.spanned.size() << "\n";
    for (std::size_t k = 0; k < t.octahedra.size(); ++k) {
      const auto& o = t.octahedra[k];
      std::size_t spans = 0;
      for (const auto& list : o.spans) spans += list.size();
      out << "  octahedron " << k + 1 << " with " << to_string(o.partner) << ": " << spans << " spans"
          << (o.spans_all_missing ? ", reaches every antipode outside L" : "") << "\n";
    }
    out << "b = " << t.b_hat << ", j(d+1) = " << t.coverage_bound << ", (d+1)(b+l)-2bl = " << t.octahedral_bound
        << "\n";
  } else {
    for (std::size_t q = 0; q < t.colour_choices.size(); ++q) {
      const auto& c = t.colour_choices[q];
      out << "  colour " << q + 1 << ": U = " << to_string(c.transversal) << ", L = " << detail::one_based(c.spanned)
          << "\n";
    }
    out << "l = " << t.l_min << ", k = " << t.duplicates << ", c = " << t.components << ", M = " << detail::join(t.m_set)
        << "\n";
  }
  out << "collected " << t.collected.size() << " of depth " << t.depth << ", guaranteed " << t.guaranteed
      << ", theorem bound " << theorem_bound(static_cast<std::int64_t>(t.d)) << "\n";
  out << "  " << detail::join(t.collected) << "\n";
  return out.str();
}

inline nlohmann::ordered_json to_json(const SearchCertificate& c) {
  detail::ojson doc;
  doc["d"] = c.d;
  doc["mode"] = to_string(c.mode);
  doc["max_size"] = c.max_size;
  doc["search"] = c.plain ? "plain" : "symmetry-reduced";
  doc["outcome"] = to_string(c.outcome);
  doc["witness_size"] = c.witness ? detail::ojson(c.witness->size()) : detail::ojson(nullptr);
  doc["witness"] = c.witness ? detail::json_of(*c.witness) : detail::ojson(nullptr);
  doc["witness_verified"] = c.witness_verified;
  if (!c.all_witnesses.empty()) {
    detail::ojson all = detail::ojson::array();
    for (const auto& w : c.all_witnesses) all.push_back(detail::json_of(w));
    doc["all_witnesses"] = all;
  }
  doc["nodes"] = c.nodes;
  doc["level_nodes"] = c.level_nodes;
  doc["group"] = c.group;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", c.seconds);
  doc["seconds"] = std::stod(secs);
  return doc;
}

inline std::string render(const SearchCertificate& c, Format f) {
  if (f == Format::json) return detail::dump(to_json(c));
  if (f == Format::csv) return detail::field_csv(to_json(c));
  std::ostringstream out;
  out << "d = " << c.d << ", mode " << to_string(c.mode) << ", " << (c.plain ? "plain" : "symmetry-reduced")
      << " search, sizes up to " << c.max_size << "\n";
  switch (c.outcome) {
    case SearchOutcome::no_system: out << "no system of size <= " << c.max_size << "\n"; break;
    case SearchOutcome::witness:
      out << "minimum system has size " << c.witness->size() << (c.witness_verified ? " (verified)" : " (NOT verified)")
          << "\n  " << detail::join(c.witness->vectors()) << "\n";
      if (c.all_witnesses.size() > 1) out << "  " << c.all_witnesses.size() << " inequivalent minimum systems\n";
      break;
    case SearchOutcome::budget_exhausted: out << "node budget exhausted, no verdict\n"; break;
  }
  out << "nodes " << c.nodes << " (per level:";
  for (auto n : c.level_nodes) out << " " << n;
  out << ")\n";
  out << "group " << c.group << "\n";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", c.seconds);
  out << "time " << secs << " s\n";
  return out.str();
}

inline nlohmann::ordered_json to_json(const BoundValues& v) {
  detail::ojson doc;
  doc["d"] = v.d;
  doc["theorem"] = v.theorem;
  doc["prior_best"] = v.prior_best;
  doc["linear_2d"] = v.linear;
  doc["triple_3d"] = v.triple ? detail::ojson(*v.triple) : detail::ojson(nullptr);
  doc["fifth"] = v.fifth ? detail::ojson(*v.fifth) : detail::ojson(nullptr);
  doc["quarter_square"] = v.quarter_square;
  doc["upper_d2_plus_1"] = v.upper;
  return doc;
}

inline std::string render(const std::vector<BoundValues>& rows, Format f) {
  if (f == Format::json) {
    detail::ojson a = detail::ojson::array();
    for (const auto& v : rows) a.push_back(to_json(v));
    return detail::dump(a);
  }
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
  std::ostringstream out;
  if (f == Format::csv) {
    out << "d,theorem,prior_best,linear_2d,triple_3d,fifth,quarter_square,upper_d2_plus_1\n";
    for (const auto& v : rows)
      out << v.d << "," << v.theorem << "," << v.prior_best << "," << v.linear << "," << (v.triple ? opt(v.triple) : "")
          << "," << (v.fifth ? opt(v.fifth) : "") << "," << v.quarter_square << "," << v.upper << "\n";
    return out.str();
  }
  char line[160];
  std::snprintf(line, sizeof line, "%4s %8s %8s %6s %6s %14s %16s %8s\n", "d", "new", "prior", "2d", "3d",
                "ceil(d(d+1)/5)", "floor((d+2)^2/4)", "d^2+1");
  out << line;
  for (const auto& v : rows) {
    std::snprintf(line, sizeof line, "%4lld %8lld %8lld %6lld %6s %14s %16lld %8lld\n", static_cast<long long>(v.d),
                  static_cast<long long>(v.theorem), static_cast<long long>(v.prior_best),
                  static_cast<long long>(v.linear), opt(v.triple).c_str(), opt(v.fifth).c_str(),
                  static_cast<long long>(v.quarter_square), static_cast<long long>(v.upper));
    out << line;
  }
  return out.str();
}

inline nlohmann::ordered_json to_json(const OctahedronSweep& s) {
  detail::ojson doc;
  doc["octahedra"] = s.octahedra;
  doc["probes_per_octahedron"] = s.probes;
  doc["skipped_probe_checks"] = s.skipped;
  doc["violations"] = s.violations;
  if (s.first_violation) {
    Transversal a{s.first_violation->missing, s.first_violation->first};
    Transversal b{s.first_violation->missing, s.first_violation->second};
    a.choice[static_cast<std::size_t>(a.missing)] = b.choice[static_cast<std::size_t>(b.missing)] = -1;
    doc["first_violation"] = {{"first", detail::json_of(a)},
                              {"second", detail::json_of(b)},
                              {"counts", s.first_violation_report->counts}};
  }
  return doc;
}

inline std::string render(const OctahedronSweep& s, Format f) {
  if (f == Format::json) return detail::dump(to_json(s));
  if (f == Format::csv) return detail::field_csv(to_json(s));
  std::ostringstream out;
  out << "octahedra checked  " << s.octahedra << "\n";
  out << "probes each        " << s.probes << " (" << s.skipped << " probe checks skipped as non-generic)\n";
  out << "violations         " << s.violations << "\n";
  if (s.first_violation) {
    Transversal a{s.first_violation->missing, s.first_violation->first};
    Transversal b{s.first_violation->missing, s.first_violation->second};
    a.choice[static_cast<std::size_t>(a.missing)] = b.choice[static_cast<std::size_t>(b.missing)] = -1;
    out << "first violation    " << to_string(a) << " / " << to_string(b) << "\n";
  }
  return out.str();
}

/// A vector system with its two property verdicts.
struct SystemReport {
  VectorSystem system;
  Property1Result property1;
  Property2Result property2;
};

inline SystemReport system_report(VectorSystem system) {
  SystemReport r{std::move(system), {}, {}};
  r.property1 = check_property1(r.system);
  r.property2 = check_property2(r.system);
  return r;
}

inline nlohmann::ordered_json to_json(const SystemReport& r) {
  detail::ojson doc;
  doc["d"] = r.system.dim();
  doc["size"] = r.system.size();
  doc["vectors"] = detail::json_of(r.system);
  doc["property1"] = r.property1.ok;
  if (!r.property1.ok) doc["property1_missing"] = {{"position", r.property1.position + 1}, {"value", r.property1.value + 1}};
  doc["property2"] = r.property2.ok;
  if (r.property2.violation) {
    const auto& v = *r.property2.violation;
    Transversal a{v.missing, v.first}, b{v.missing, v.second};
    a.choice[static_cast<std::size_t>(v.missing)] = b.choice[static_cast<std::size_t>(v.missing)] = -1;
    doc["property2_violation"] = {{"position", v.missing + 1},
                                  {"first", detail::json_of(a)},
                                  {"second", detail::json_of(b)},
                                  {"counts", v.counts}};
  }
  return doc;
}

inline std::string render(const SystemReport& r, Format f) {
  if (f == Format::json) return detail::dump(to_json(r));
  if (f == Format::csv) return detail::vector_csv(r.system.dim(), r.system.vectors());
  std::ostringstream out;
  out << "d = " << r.system.dim() << ", " << r.system.size() << " vectors\n";
  for (const auto& v : r.system.vectors()) out << "  " << to_string(v) << "\n";
  out << "property 1 " << (r.property1.ok ? "holds" : "fails");
  if (!r.property1.ok) out << " (position " << r.property1.position + 1 << " never takes value " << r.property1.value + 1 << ")";
  out << "\nproperty 2 " << (r.property2.ok ? "holds" : "fails");
  if (r.property2.violation) {
    const auto& v = *r.property2.violation;
    Transversal a{v.missing, v.first}, b{v.missing, v.second};
    a.choice[static_cast<std::size_t>(v.missing)] = b.choice[static_cast<std::size_t>(v.missing)] = -1;
    out << " (position " << v.missing + 1 << ", " << to_string(a) << " / " << to_string(b) << ", counts";
    for (auto c : v.counts) out << " " << c;
    out << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace cdepth
