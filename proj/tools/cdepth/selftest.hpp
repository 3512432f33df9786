#pragma once

// Small fixed examples with obvious answers, runnable from an installed
// binary via --selftest.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cdepth/cdepth.hpp"

namespace cdepth::tool {

inline Coords pt(std::initializer_list<long long> xs) {
  Coords c;
  for (long long x : xs) c.emplace_back(x);
  return c;
}

inline IndexVector iv(std::initializer_list<int> one_based) {
  IndexVector v;
  for (int x : one_based) v.entries.push_back(x - 1);
  return v;
}

inline int run_selftest(std::ostream& out) {
  struct Case {
    std::string name;
    std::function<bool()> run;
  };
  const std::vector<Case> cases = {
      {"det_sign identity", [] { return det_sign({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}) == 1; }},
      {"det_sign row swap", [] { return det_sign({pt({0, 1, 0}), pt({1, 0, 0}), pt({0, 0, 1})}) == -1; }},
      {"det_sign repeated row", [] { return det_sign({pt({1, 2, 3}), pt({1, 2, 3}), pt({0, 0, 1})}) == 0; }},
      {"general position holds", [] {
         std::vector<Coords> p{pt({1, 0}), pt({0, 1}), pt({1, 1})};
         return is_general_position(p, 2).ok;
       }},
      {"general position parallel pair", [] {
         std::vector<Coords> p{pt({1, 0}), pt({2, 0}), pt({0, 1})};
         return !is_general_position(p, 2).ok;
       }},
      {"cone positive orthant", [] {
         std::vector<Coords> t{pt({1, 0}), pt({0, 1})};
         return cone_spans(t, pt({1, 1})) && !cone_spans(t, pt({-1, -1}));
       }},
      {"cone in 3d", [] {
         std::vector<Coords> t{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
         return cone_spans(t, pt({2, 3, 5}));
       }},
      {"origin in triangle", [] {
         std::vector<Coords> s{pt({1, 0}), pt({-1, 1}), pt({-1, -1})};
         return origin_in_simplex(s);
       }},
      {"origin outside triangle", [] {
         std::vector<Coords> s{pt({1, 0}), pt({2, 1}), pt({1, 1})};
         return !origin_in_simplex(s);
       }},
      {"origin in tetrahedron", [] {
         std::vector<Coords> s{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({-1, -1, -1})};
         return origin_in_simplex(s);
       }},
      {"hull with extra point", [] {
         std::vector<Coords> s{pt({1, 0}), pt({-1, 1}), pt({-1, -1}), pt({5, 5})};
         return origin_in_hull_interior(s);
       }},
      {"hull of too few points", [] {
         std::vector<Coords> s{pt({1, 0}), pt({0, 1})};
         return !origin_in_hull_interior(s);
       }},
      {"property 1 on all vectors", [] {
         std::vector<IndexVector> all;
         for (int a = 1; a <= 3; ++a)
           for (int b = 1; b <= 3; ++b)
             for (int c = 1; c <= 3; ++c) all.push_back(iv({a, b, c}));
         return check_property1(VectorSystem(2, all)).ok;
       }},
      {"property 1 on a single vector", [] {
         const auto r = check_property1(VectorSystem(2, {iv({1, 1, 1})}));
         return !r.ok && r.position == 0 && r.value == 1;
       }},
      {"property 1 on the diagonal",
       [] { return check_property1(VectorSystem(2, {iv({1, 1, 1}), iv({2, 2, 2}), iv({3, 3, 3})})).ok; }},
      {"property 2 on the empty system", [] { return check_property2(VectorSystem(2, {})).ok; }},
      {"canonical value relabelling",
       [] { return canonical_form(VectorSystem(2, {iv({2, 2, 2})})) == canonical_form(VectorSystem(2, {iv({1, 1, 1})})); }},
      {"canonical position swap",
       [] { return canonical_form(VectorSystem(2, {iv({1, 2, 3})})) == canonical_form(VectorSystem(2, {iv({3, 2, 1})})); }},
      {"disjoint family", [] {
         const auto r = duplicate_component_analysis(
             {{iv({1, 1, 1}), iv({2, 1, 1})}, {iv({3, 2, 3}), iv({3, 3, 3})}, {iv({2, 3, 1}), iv({2, 3, 2})}}, 2);
         return r.duplicates == 0 && r.components == 3;
       }},
      {"octahedral identity", [] {
         const auto v = bound_formulas(4, 0, 2, 3);
         return v.octahedral_sum == 13 && v.octahedral == 13;
       }},
      {"bounds at d=4", [] { return theorem_bound(4) == 13 && prior_best_bound(4) == 12; }},
      {"repeated point rejected", [] {
         try {
           parse_configuration(R"({"d":1,"mode":"full","classes":[[["1"],["-1"]],[["1"],["-2"]]]})");
         } catch (const Error& e) {
           return e.kind() == ErrorKind::not_distinct;
         }
         return false;
       }},
      {"short class rejected", [] {
         try {
           parse_configuration(R"({"d":1,"mode":"full","classes":[[["1"]],[["2"],["-2"]]]})");
         } catch (const Error& e) {
           return e.kind() == ErrorKind::class_size;
         }
         return false;
       }},
      {"render is repeatable", [] {
         SearchCertificate c;
         c.d = 2;
         c.max_size = 4;
         c.group = group_description(2, false);
         return render(c, Format::json) == render(c, Format::json) &&
                render(c, Format::human).find("nodes") != std::string::npos;
       }},
  };
  int failed = 0;
  for (const auto& c : cases) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      out << "  (" << e.what() << ")\n";
    }
    out << (ok ? "PASS  " : "FAIL  ") << c.name << "\n";
    failed += !ok;
  }
  out << cases.size() - static_cast<std::size_t>(failed) << "/" << cases.size() << " self-test cases passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace cdepth::tool
