#pragma once

// Covers of a surface determined by an edge labelling with values in Z2^k.
// Sheet ν of vertex v is written (v, ν); the copy of edge e on sheet ν runs
// from (tail, ν) to (head, ν + α(e)).

#include <vector>

#include "surfcurve/curve.hpp"
#include "surfcurve/loops.hpp"
#include "surfcurve/surface_map.hpp"
#include "surfcurve/z2.hpp"

namespace surfcurve {

struct EdgeLabeling {
  int k = 0;
  std::vector<Bits> alpha;  // per edge
};

// Sum of the labels around every face; the labelling is only usable when all
// of them vanish.
inline void check_kirchhoff(const SurfaceMap& m, const EdgeLabeling& a) {
  if (static_cast<int>(a.alpha.size()) != m.num_edges()) throw input_error("DimensionMismatch", "labelling has wrong size");
  for (int f = 0; f < m.num_faces(); ++f) {
    Bits s = 0;
    for (const auto& sd : m.face(f)) s ^= a.alpha[sd.edge];
    if (s != 0) throw input_error("KirchhoffViolation", "labels around face " + std::to_string(f) + " do not sum to zero");
  }
}

inline EdgeLabeling labeling_from_loops(const SurfaceMap& host, const LoopSystem& ls, const RhoMap& rho) {
  if (static_cast<int>(ls.parity.size()) != host.num_edges())
    throw input_error("DimensionMismatch", "loop system belongs to another map");
  if (rho.matrix.cols() != ls.genus) throw input_error("DimensionMismatch", "rho has the wrong number of columns");
  EdgeLabeling a;
  a.k = rho.k();
  for (Bits p : ls.parity) a.alpha.push_back(rho.matrix.apply(p));
  check_kirchhoff(host, a);
  return a;
}

struct SubhomologyCover {
  SurfaceMap map;
  int k = 0;
  int base_vertices = 0;
  std::vector<int> vertex_of;       // (v << k | ν) -> cover vertex
  std::vector<int> base_vertex;     // per cover vertex
  std::vector<Bits> vertex_sheet;   // per cover vertex
  std::vector<int> component;       // per cover vertex

  int sheets() const { return 1 << k; }
  int base_edge(int ce) const { return ce >> k; }
  Bits edge_sheet(int ce) const { return static_cast<Bits>(ce) & low_mask(k); }  // sheet of the copy's tail
  static int edge_copy(int e, Bits nu, int k) { return (e << k) | static_cast<int>(nu); }
  int vertex(int v, Bits nu) const { return vertex_of[(v << k) | static_cast<int>(nu)]; }
};

inline SubhomologyCover build_cover(const SurfaceMap& m, const EdgeLabeling& a) {
  check_kirchhoff(m, a);
  if (a.k < 0 || a.k > 20) throw input_error("DimensionMismatch", "cover dimension out of range");
  SubhomologyCover cov;
  cov.k = a.k;
  cov.base_vertices = m.num_vertices();
  const int ns = 1 << a.k;
  std::vector<FaceWord> faces;
  std::vector<char> hole;
  std::vector<std::pair<int, Bits>> face_origin;
  for (int f = 0; f < m.num_faces(); ++f)
    for (int nu = 0; nu < ns; ++nu) {
      FaceWord w;
      Bits cur = static_cast<Bits>(nu);
      for (const auto& sd : m.face(f)) {
        Bits tail_sheet = sd.sign > 0 ? cur : cur ^ a.alpha[sd.edge];
        w.push_back({SubhomologyCover::edge_copy(sd.edge, tail_sheet, a.k), sd.sign});
        cur ^= a.alpha[sd.edge];
      }
      SURFCURVE_CHECK(cur == static_cast<Bits>(nu), "CoverError", "face lift does not close");
      faces.push_back(std::move(w));
      hole.push_back(m.is_hole(f) ? 1 : 0);
      face_origin.push_back({f, static_cast<Bits>(nu)});
    }
  std::vector<Rational> weights;
  for (int e = 0; e < m.num_edges(); ++e)
    for (int nu = 0; nu < ns; ++nu) weights.push_back(m.weight(e));
  cov.map = SurfaceMap(std::move(faces), std::move(weights), std::move(hole));

  // sheet labels of the cover vertices, read at face corners
  cov.vertex_of.assign(static_cast<std::size_t>(m.num_vertices()) << a.k, -1);
  cov.base_vertex.assign(cov.map.num_vertices(), -1);
  cov.vertex_sheet.assign(cov.map.num_vertices(), 0);
  for (int cf = 0; cf < cov.map.num_faces(); ++cf) {
    auto [f, nu] = face_origin[cf];
    Bits cur = nu;
    for (int i = 0; i < static_cast<int>(m.face(f).size()); ++i) {
      int bv = m.corner_vertex(f, i), cv = cov.map.corner_vertex(cf, i);
      int& slot = cov.vertex_of[(bv << a.k) | static_cast<int>(cur)];
      SURFCURVE_CHECK(slot < 0 || slot == cv, "CoverError", "vertex sheet label is not unique");
      SURFCURVE_CHECK(cov.base_vertex[cv] < 0 || (cov.base_vertex[cv] == bv && cov.vertex_sheet[cv] == cur),
                      "CoverError", "cover vertex has two labels");
      slot = cv;
      cov.base_vertex[cv] = bv;
      cov.vertex_sheet[cv] = cur;
      cur ^= a.alpha[m.face(f)[i].edge];
    }
  }
  SURFCURVE_CHECK(cov.map.num_vertices() == ns * m.num_vertices(), "CoverError", "vertex count of the cover");
  SURFCURVE_CHECK(cov.map.num_edges() == ns * m.num_edges(), "CoverError", "edge count of the cover");
  SURFCURVE_CHECK(cov.map.num_faces() == ns * m.num_faces(), "CoverError", "face count of the cover");
  SURFCURVE_CHECK(cov.map.euler_characteristic() == ns * m.euler_characteristic(), "CoverError",
                  "Euler characteristic of the cover");
  for (int cv = 0; cv < cov.map.num_vertices(); ++cv)
    cov.component.push_back(cov.map.flag_component(cov.map.vertex_first_flag(cv)));
  return cov;
}

struct LiftedWalk {
  std::vector<int> vertices;  // cover vertices, one more than edges
  std::vector<WalkStep> steps;  // cover edges
  Bits start_sheet = 0;
  Bits end_sheet = 0;
};

inline LiftedWalk lift_walk(const SubhomologyCover& cov, const EdgeLabeling& a, const SurfaceMap& base,
                            const ClosedWalk& w, Bits start_sheet) {
  validate_walk(base, w);
  LiftedWalk lw;
  lw.start_sheet = start_sheet;
  Bits cur = start_sheet;
  int v = w.steps.empty() ? w.start : step_source(base, w.steps[0]);
  lw.vertices.push_back(cov.vertex(v, cur));
  for (const auto& s : w.steps) {
    Bits tail_sheet = s.dir > 0 ? cur : cur ^ a.alpha[s.edge];
    lw.steps.push_back({SubhomologyCover::edge_copy(s.edge, tail_sheet, cov.k), s.dir});
    cur ^= a.alpha[s.edge];
    v = step_target(base, s);
    lw.vertices.push_back(cov.vertex(v, cur));
  }
  lw.end_sheet = cur;
  return lw;
}

}  // namespace surfcurve
