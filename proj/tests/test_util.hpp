#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "surfcurve/surfcurve.hpp"

namespace testutil {

using namespace surfcurve;

// Unit-weight map from face words such as "+1 +1 +2 +2".
inline SurfaceMap word_map(const std::vector<std::string>& faces, std::vector<int> weights = {}) {
  int m = 0;
  for (const auto& f : faces) {
    std::istringstream in(f);
    for (std::string t; in >> t;) m = std::max(m, std::stoi(t.substr(1)));
  }
  std::string text = "srf 1\nedges " + std::to_string(m) + "\n";
  for (int e = 1; e <= m; ++e)
    text += "weight " + std::to_string(e) + " " + std::to_string(weights.empty() ? 1 : weights[e - 1]) + "\n";
  for (const auto& f : faces) text += "face " + f + "\n";
  return parse_srf(text);
}

inline SurfaceMap projective_plane() { return word_map({"+1 +1"}); }
inline SurfaceMap klein_bottle() { return word_map({"+1 +1 +2 +2"}); }
inline SurfaceMap n3() { return word_map({"+1 +1 +2 +2 +3 +3"}); }
inline SurfaceMap torus() { return word_map({"+1 +2 -1 -2"}); }
inline SurfaceMap sphere() { return word_map({"+1 -1"}); }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& rel) { return std::string(SURFCURVE_DATA_DIR) + "/" + rel; }

// One-face word with `caps` crosscaps and `handles` handles.
inline std::vector<FaceWord> base_word(int handles, int caps) {
  std::vector<FaceWord> f(1);
  int e = 0;
  for (int i = 0; i < caps; ++i, ++e) f[0].insert(f[0].end(), {{e, 1}, {e, 1}});
  for (int i = 0; i < handles; ++i, e += 2) f[0].insert(f[0].end(), {{e, 1}, {e + 1, 1}, {e, -1}, {e + 1, -1}});
  if (f[0].empty()) f = {{{0, 1}, {1, 1}}, {{1, -1}, {0, -1}}};
  return f;
}

inline int edge_count(const std::vector<FaceWord>& fs) {
  int m = 0;
  for (const auto& f : fs)
    for (const auto& s : f) m = std::max(m, s.edge + 1);
  return m;
}

// Refines a map by random diagonals and edge subdivisions; random weights in 1..wmax.
inline SurfaceMap random_refinement(std::vector<FaceWord> fs, int ops, std::mt19937& rng, int wmax = 3) {
  for (int k = 0; k < ops; ++k) {
    int m = edge_count(fs);
    if (rng() % 2) {
      int f = static_cast<int>(rng() % fs.size());
      int n = static_cast<int>(fs[f].size());
      if (n < 2) continue;
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      FaceWord a(fs[f].begin() + i, fs[f].begin() + j);
      a.push_back({m, 1});
      FaceWord b(fs[f].begin() + j, fs[f].end());
      b.insert(b.end(), fs[f].begin(), fs[f].begin() + i);
      b.push_back({m, -1});
      fs[f] = a;
      fs.push_back(b);
    } else {
      int e = static_cast<int>(rng() % m);
      for (auto& f : fs) {
        FaceWord g;
        for (const auto& s : f) {
          if (s.edge != e) g.push_back(s);
          else if (s.sign > 0) g.insert(g.end(), {{e, 1}, {m, 1}});
          else g.insert(g.end(), {{m, -1}, {e, -1}});
        }
        f = g;
      }
    }
  }
  std::vector<Rational> w(edge_count(fs));
  for (auto& x : w) x = Rational(1 + static_cast<int>(rng() % wmax));
  return SurfaceMap(fs, w);
}

// Random closed walk: a random walk of the given length closed up by a
// shortest-hop path back to the start.
inline ClosedWalk random_closed_walk(const SurfaceMap& m, int steps, std::mt19937& rng) {
  std::vector<std::vector<WalkStep>> out(m.num_vertices());
  for (int e = 0; e < m.num_edges(); ++e) {
    out[m.edge_tail(e)].push_back({e, 1});
    out[m.edge_head(e)].push_back({e, -1});
  }
  ClosedWalk w;
  int start = static_cast<int>(rng() % m.num_vertices()), v = start;
  w.start = start;
  for (int i = 0; i < steps; ++i) {
    const auto& o = out[v];
    WalkStep s = o[rng() % o.size()];
    w.steps.push_back(s);
    v = step_target(m, s);
  }
  // BFS back to the start
  std::vector<int> prev(m.num_vertices(), -2);
  std::vector<WalkStep> via(m.num_vertices());
  std::vector<int> q{v};
  prev[v] = -1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& s : out[q[i]]) {
      int t = step_target(m, s);
      if (prev[t] != -2) continue;
      prev[t] = q[i];
      via[t] = s;
      q.push_back(t);
    }
  std::vector<WalkStep> back;
  for (int x = start; x != v; x = prev[x]) back.push_back(via[x]);
  w.steps.insert(w.steps.end(), back.rbegin(), back.rend());
  return w;
}

}  // namespace testutil
