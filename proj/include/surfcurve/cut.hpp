#pragma once

// Cutting a map along a set of edges and capping boundary components.
//
// Cutting keeps every face and gives the second side of each cut edge a fresh
// edge id.  Each boundary component of the cut surface becomes a hole face,
// found by walking around vertices through uncut edges until the next cut
// side shows up.

#include <algorithm>
#include <vector>

#include "surfcurve/surface_map.hpp"

namespace surfcurve {

struct CutResult {
  SurfaceMap map;                      // cut surface, boundary components as hole faces
  std::vector<int> original_edge;      // per edge of `map`
  std::vector<int> boundary_faces;     // hole faces created by the cut
  int components = 0;
  std::vector<char> component_orientable;

  bool orientable() const {
    return std::all_of(component_orientable.begin(), component_orientable.end(), [](char c) { return c != 0; });
  }
  int boundaries() const { return static_cast<int>(boundary_faces.size()); }
};

inline CutResult cut_along_edges(const SurfaceMap& m, const std::vector<int>& edges) {
  std::vector<char> cut(m.num_edges(), 0);
  for (int e : edges) cut.at(e) = 1;

  CutResult r;
  std::vector<FaceWord> faces = m.faces();
  std::vector<Rational> weights = m.weights();
  std::vector<char> hole = m.holes();
  r.original_edge.resize(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) r.original_edge[e] = e;

  // label of every side after the cut
  std::vector<int> side_label(m.num_sides());
  for (int s = 0; s < m.num_sides(); ++s) side_label[s] = m.side(s).edge;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!cut[e]) continue;
    int id = static_cast<int>(weights.size());
    weights.push_back(m.weight(e));
    r.original_edge.push_back(e);
    int s2 = m.edge_sides(e).second;
    side_label[s2] = id;
    faces[m.side_face(s2)][m.side_pos(s2)].edge = id;
  }

  auto is_cut_side = [&](int s) { return cut[m.side(s).edge] != 0; };
  std::vector<char> used(m.num_sides(), 0);
  for (int s0 = 0; s0 < m.num_sides(); ++s0) {
    if (!is_cut_side(s0) || used[s0]) continue;
    FaceWord holeword;
    int t = s0, kt = 0;
    for (;;) {
      used[t] = 1;
      int sg = m.side(t).sign;
      holeword.push_back({side_label[t], kt == 0 ? sg : -sg});
      // stand at the far end of t and turn around the vertex
      int fl = SurfaceMap::flag(t, 1 - kt);
      int guard = 0;
      for (;;) {
        fl = m.tau1(fl);
        if (is_cut_side(SurfaceMap::flag_side(fl))) break;
        fl = m.tau2(fl);
        SURFCURVE_CHECK(++guard <= m.num_flags(), "CutError", "vertex walk did not reach a cut side");
      }
      t = SurfaceMap::flag_side(fl);
      kt = SurfaceMap::flag_k(fl);
      if (t == s0 && kt == 0) break;
      SURFCURVE_CHECK(!used[t], "CutError", "boundary walk revisited a side");
    }
    r.boundary_faces.push_back(static_cast<int>(faces.size()));
    faces.push_back(std::move(holeword));
    hole.push_back(1);
  }
  r.map = SurfaceMap(std::move(faces), std::move(weights), std::move(hole));
  r.components = r.map.num_components();
  for (int c = 0; c < r.components; ++c) r.component_orientable.push_back(r.map.component_orientable(c) ? 1 : 0);
  return r;
}

// Turns a hole face into an ordinary face (caps the boundary with a disk).
inline SurfaceMap attach_disk(const SurfaceMap& m, int hole_face) {
  if (hole_face < 0 || hole_face >= m.num_faces() || !m.is_hole(hole_face))
    throw input_error("NoSuchBoundary", "face " + std::to_string(hole_face) + " is not a boundary");
  std::vector<char> hole = m.holes();
  hole[hole_face] = 0;
  return SurfaceMap(m.faces(), m.weights(), std::move(hole));
}

}  // namespace surfcurve
