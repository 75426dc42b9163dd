#pragma once

// Reader and writer for the line-oriented SRF surface format:
//
//   srf 1
//   edges <m>
//   weight <id> <positive number>      (one line per edge, ids 1..m)
//   face <+-id> <+-id> ...             (one line per face, cyclic)
//
// '#' starts a comment.  Each edge id occurs exactly twice over all faces.

#include <sstream>
#include <string>
#include <vector>

#include "surfcurve/surface_map.hpp"

namespace surfcurve {

namespace detail {
inline std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}
inline int parse_int(const std::string& tok, int lineno) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw input_error("ParseError", "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
  }
}
}  // namespace detail

inline SurfaceMap parse_srf(const std::string& text, bool require_connected = true) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  int m = -1;
  std::vector<Rational> weights;
  std::vector<char> has_weight;
  std::vector<FaceWord> faces;
  auto fail = [&](const std::string& msg) {
    return input_error("ParseError", "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(detail::strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "srf" || tok[1] != "1") throw fail("expected 'srf 1'");
      header = true;
      continue;
    }
    if (tok[0] == "edges") {
      if (tok.size() != 2 || m >= 0) throw fail("bad edges line");
      m = detail::parse_int(tok[1], lineno);
      if (m < 0) throw fail("negative edge count");
      weights.assign(m, Rational(0));
      has_weight.assign(m, 0);
    } else if (tok[0] == "weight") {
      if (m < 0) throw fail("weight before edges");
      if (tok.size() != 3) throw fail("bad weight line");
      int id = detail::parse_int(tok[1], lineno);
      if (id < 1 || id > m) throw fail("edge id out of range");
      if (has_weight[id - 1]) throw fail("duplicate weight");
      Rational w = parse_rational(tok[2]);
      if (w <= 0) throw input_error("NonPositiveWeight", "edge " + std::to_string(id));
      weights[id - 1] = w;
      has_weight[id - 1] = 1;
    } else if (tok[0] == "face") {
      if (m < 0) throw fail("face before edges");
      if (tok.size() < 2) throw fail("empty face");
      FaceWord w;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) throw fail("sides need an explicit sign: '" + t + "'");
        int id = detail::parse_int(t.substr(1), lineno);
        if (id < 1 || id > m) throw fail("edge id out of range");
        w.push_back({id - 1, t[0] == '+' ? 1 : -1});
      }
      faces.push_back(std::move(w));
    } else {
      throw fail("unknown keyword '" + tok[0] + "'");
    }
  }
  if (!header) throw input_error("ParseError", "missing 'srf 1' header");
  if (m < 0) throw input_error("ParseError", "missing edges line");
  for (int e = 0; e < m; ++e)
    if (!has_weight[e]) throw input_error("ParseError", "missing weight for edge " + std::to_string(e + 1));
  if (faces.empty()) throw input_error("ParseError", "no faces");
  SurfaceMap map(std::move(faces), std::move(weights));
  if (require_connected && map.num_components() != 1)
    throw input_error("DisconnectedError", "surface has " + std::to_string(map.num_components()) + " components");
  return map;
}

inline SurfaceMap load_surface(const std::string& text) { return parse_srf(text, true); }

inline std::string write_srf(const SurfaceMap& m, const std::string& comment = "") {
  std::ostringstream out;
  out << "srf 1\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "edges " << m.num_edges() << "\n";
  for (int e = 0; e < m.num_edges(); ++e) out << "weight " << e + 1 << " " << format_rational(m.weight(e)) << "\n";
  for (const auto& w : m.faces()) {
    out << "face";
    for (const auto& s : w) out << " " << (s.sign > 0 ? '+' : '-') << s.edge + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace surfcurve
