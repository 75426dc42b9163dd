#pragma once

// JSON documents exchanged by the command line tool.  Edge and face numbers
// are 1-based, matching the SRF file (face i is the i-th face line).

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "surfcurve/cover.hpp"
#include "surfcurve/curve.hpp"
#include "surfcurve/loops.hpp"
#include "surfcurve/solver.hpp"
#include "surfcurve/z2.hpp"

namespace surfcurve {

using Json = nlohmann::ordered_json;

inline std::string class_name(const CurveClass& c) {
  switch (c.kind) {
    case CurveKind::Separating: return "separating";
    case CurveKind::NonseparatingOrienting: return "nonseparating-orienting";
    case CurveKind::NonseparatingNonorienting: return "nonseparating-nonorienting";
  }
  return "";
}
inline std::string sided_name(const CurveClass& c) { return c.one_sided ? "one-sided" : "two-sided"; }

// Approximate value for reports; the exact value goes in a separate field.
inline double rational_to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Json bits_json(Bits b, int n) {
  Json a = Json::array();
  for (int i = 0; i < n; ++i) a.push_back(static_cast<int>(b >> i & 1));
  return a;
}

inline Bits bits_from_json(const Json& a, int expected) {
  if (!a.is_array() || (expected >= 0 && static_cast<int>(a.size()) != expected))
    throw input_error("DimensionMismatch", "bit vector has the wrong length");
  if (a.size() > 64) throw input_error("DimensionMismatch", "bit vector longer than 64");
  Bits b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int v = a[i].get<int>();
    if (v != 0 && v != 1) throw input_error("ParseError", "bits must be 0 or 1");
    if (v) b |= bit(static_cast<int>(i));
  }
  return b;
}

inline Json crossings_json(const std::vector<CrossingRecord>& seq) {
  Json a = Json::array();
  for (const auto& c : seq)
    a.push_back({{"edge", c.edge + 1}, {"face", c.face + 1}, {"index", c.index}, {"from_side", c.from_side}});
  return a;
}

inline Json curve_to_json(const SurfaceMap& m, const CurveDrawing& d) {
  Json j;
  j["crossings"] = crossings_json(crossing_sequence(m, d));
  if (d.trivial) j["trivial"] = true;
  return j;
}

// Accepts records with or without "index"/"from_side"; when any record lacks
// them they are inferred for the whole sequence.
inline CurveDrawing curve_from_json(const SurfaceMap& m, const Json& j) {
  try {
    std::vector<CrossingRecord> rec;
    bool infer = false;
    for (const auto& c : j.at("crossings")) {
      CrossingRecord r;
      r.edge = c.at("edge").get<int>() - 1;
      r.face = c.at("face").get<int>() - 1;
      if (c.contains("index") && c.contains("from_side")) {
        r.index = c["index"].get<int>();
        r.from_side = c["from_side"].get<int>();
      } else {
        infer = true;
      }
      rec.push_back(r);
    }
    CurveDrawing d = drawing_from_crossings(m, rec, infer);
    if (!is_simple(m, d)) throw input_error("NotSimple", "the curve is not a simple closed curve");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("ParseError", std::string("curve JSON: ") + e.what());
  }
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error("ParseError", what + ": " + e.what());
  }
}

inline Json loops_to_json(const LoopSystem& ls) {
  Json j;
  j["kind"] = loop_kind_name(ls.kind);
  j["genus"] = ls.genus;
  j["orientable"] = ls.orientable;
  j["base_face"] = ls.base_face + 1;
  j["word"] = ls.word_text;
  Json loops = Json::array();
  for (std::size_t i = 0; i < ls.loops.size(); ++i)
    loops.push_back({{"name", ls.names[i]},
                     {"sided", ls.one_sided[i] ? "one-sided" : "two-sided"},
                     {"crossings", crossings_json(ls.loops[i])}});
  j["loops"] = loops;
  Json parity = Json::array();
  for (Bits p : ls.parity) parity.push_back(bits_json(p, ls.genus));
  j["parity"] = parity;
  return j;
}

// Only the parts the cover needs: genus, kind and the parity table.
inline LoopSystem loops_from_json(const SurfaceMap& m, const Json& j) {
  try {
    LoopSystem ls;
    ls.genus = j.at("genus").get<int>();
    ls.orientable = j.value("orientable", false);
    std::string kind = j.value("kind", "arbitrary");
    ls.kind = kind == "standard" ? LoopKind::Standard : kind == "canonical" ? LoopKind::Canonical : LoopKind::Arbitrary;
    const auto& par = j.at("parity");
    if (static_cast<int>(par.size()) != m.num_edges()) throw input_error("DimensionMismatch", "parity table size");
    for (const auto& p : par) ls.parity.push_back(bits_from_json(p, ls.genus));
    return ls;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("ParseError", std::string("loops JSON: ") + e.what());
  }
}

inline Json hitting_to_json(const HittingPaths& hp) {
  Json j;
  j["kind"] = "hitting";
  j["base_vertex"] = hp.base;
  j["paths"] = hp.paths;
  Json left = Json::array();
  for (int e : hp.leftover) left.push_back(e + 1);
  j["leftover_edges"] = left;
  return j;
}

inline RhoMap rho_from_json(const Json& j, int genus) {
  try {
    int k = j.at("k").get<int>();
    const auto& rows = j.at("matrix");
    if (k < 0 || k > 20 || static_cast<int>(rows.size()) != k) throw input_error("DimensionMismatch", "rho matrix rows");
    Z2Matrix m(k, genus);
    for (int r = 0; r < k; ++r) {
      Bits b = bits_from_json(rows[r], genus);
      for (int c = 0; c < genus; ++c)
        if (b >> c & 1) m.set(r, c, true);
    }
    RhoMap rho{m, {}};
    for (const auto& a : j.at("A")) rho.targets.push_back(bits_from_json(a, k));
    return rho;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("ParseError", std::string("rho JSON: ") + e.what());
  }
}

inline Json cover_sidecar_json(const SubhomologyCover& cov) {
  Json j;
  j["k"] = cov.k;
  j["sheets"] = cov.sheets();
  Json verts = Json::array();
  for (int v = 0; v < cov.map.num_vertices(); ++v)
    verts.push_back({{"vertex", v}, {"base", cov.base_vertex[v]}, {"sheet", bits_json(cov.vertex_sheet[v], cov.k)}});
  j["vertices"] = verts;
  Json edges = Json::array();
  for (int e = 0; e < cov.map.num_edges(); ++e)
    edges.push_back({{"edge", e + 1}, {"base", cov.base_edge(e) + 1}, {"tail_sheet", bits_json(cov.edge_sheet(e), cov.k)}});
  j["edges"] = edges;
  return j;
}

// Report of a classified curve.  `signature` is the canonical signature when
// the surface is non-orientable.
inline Json curve_report(const Rational& length, const CurveClass& c, std::optional<Bits> signature, int genus,
                         int multiplicity) {
  Json j;
  j["length"] = rational_to_double(length);
  j["length_exact"] = format_rational(length);
  if (signature) j["signature"] = bits_json(*signature, genus);
  j["class"] = class_name(c);
  j["sided"] = sided_name(c);
  j["multiplicity"] = multiplicity;
  return j;
}

inline Json solve_report(const SolveResult& r) {
  Json j = curve_report(r.length, r.cls, r.canonical_signature, r.genus, r.multiplicity);
  j["goal"] = goal_name(r.goal);
  j["genus"] = r.genus;
  j["standard_signature"] = bits_json(r.standard_signature, r.genus);
  Json walk = Json::array();
  for (const auto& s : r.walk.steps) walk.push_back(s.dir > 0 ? s.edge + 1 : -(s.edge + 1));
  j["tie_break"] = {{"instance", r.instance}, {"instances", r.instances}, {"start_vertex", r.walk.start},
                    {"dual_walk", walk}};
  return j;
}

// FNV-1a, stable across platforms, for tagging reports with their input.
inline std::string input_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace surfcurve
