#pragma once

// Cellular embeddings stored as face words and expanded to flags.
//
// A face word is a cyclic list of sides (edge, sign); sign +1 walks the edge
// from its tail to its head.  Every side owns two flags: k = 0 sits at the
// corner where the side starts, k = 1 where it ends.  The three involutions:
//   tau0  swaps the two flags of a side,
//   tau1  swaps the end flag of a side with the start flag of the next side,
//   tau2  moves to the other side of the same edge at the same endpoint.
// Vertices are <tau1,tau2>-orbits, edges <tau0,tau2>-orbits, faces
// <tau0,tau1>-orbits.  Faces flagged as holes stand for boundary components.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "surfcurve/errors.hpp"
#include "surfcurve/rational.hpp"

namespace surfcurve {

struct Side {
  int edge = 0;
  int sign = 1;
  bool operator==(const Side&) const = default;
};

using FaceWord = std::vector<Side>;

class SurfaceMap {
 public:
  SurfaceMap() = default;

  SurfaceMap(std::vector<FaceWord> faces, std::vector<Rational> weights,
             std::vector<char> hole = {})
      : faces_(std::move(faces)), weight_(std::move(weights)), hole_(std::move(hole)) {
    if (hole_.empty()) hole_.assign(faces_.size(), 0);
    build();
  }

  // ---- sizes -------------------------------------------------------------
  int num_edges() const { return static_cast<int>(weight_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_vertices() const { return num_vertices_; }
  int num_flags() const { return static_cast<int>(flag_vertex_.size()); }
  int num_sides() const { return num_flags() / 2; }
  int num_holes() const { return static_cast<int>(std::count(hole_.begin(), hole_.end(), 1)); }
  int size() const { return num_vertices() + num_edges() + num_faces(); }

  // Euler characteristic of the closed surface (holes counted as faces).
  int closed_euler_characteristic() const { return num_vertices_ - num_edges() + num_faces(); }
  // Euler characteristic of the bordered surface (holes removed).
  int euler_characteristic() const { return closed_euler_characteristic() - num_holes(); }
  int euler_genus() const { return 2 - closed_euler_characteristic(); }
  bool orientable() const { return orientable_; }
  int num_components() const { return num_components_; }

  const std::vector<FaceWord>& faces() const { return faces_; }
  const FaceWord& face(int f) const { return faces_[f]; }
  bool is_hole(int f) const { return hole_[f] != 0; }
  const std::vector<char>& holes() const { return hole_; }
  const std::vector<Rational>& weights() const { return weight_; }
  const Rational& weight(int e) const { return weight_[e]; }

  // ---- sides and flags --------------------------------------------------
  int side_index(int f, int i) const { return side_offset_[f] + i; }
  int side_face(int s) const { return side_face_[s]; }
  int side_pos(int s) const { return s - side_offset_[side_face_[s]]; }
  const Side& side(int s) const { return faces_[side_face_[s]][side_pos(s)]; }
  // The two sides of edge e, in order of appearance.
  std::pair<int, int> edge_sides(int e) const { return edge_sides_[e]; }
  int partner_side(int s) const {
    auto [a, b] = edge_sides_[side(s).edge];
    return a == s ? b : a;
  }

  static int flag(int s, int k) { return 2 * s + k; }
  static int flag_side(int fl) { return fl / 2; }
  static int flag_k(int fl) { return fl % 2; }

  int tau0(int fl) const { return fl ^ 1; }
  int tau1(int fl) const {
    int s = flag_side(fl), f = side_face_[s], i = s - side_offset_[f];
    int len = static_cast<int>(faces_[f].size());
    if (flag_k(fl) == 1) return flag(side_offset_[f] + (i + 1) % len, 0);
    return flag(side_offset_[f] + (i + len - 1) % len, 1);
  }
  int tau2(int fl) const {
    int s = flag_side(fl), t = partner_side(s);
    int k = flag_k(fl);
    return flag(t, side(s).sign == side(t).sign ? k : 1 - k);
  }

  int flag_edge(int fl) const { return side(flag_side(fl)).edge; }
  // 0 if the flag sits at the tail of its edge, 1 at the head.
  int flag_end(int fl) const {
    int k = flag_k(fl);
    return side(flag_side(fl)).sign > 0 ? k : 1 - k;
  }
  int flag_vertex(int fl) const { return flag_vertex_[fl]; }
  int flag_face(int fl) const { return side_face_[flag_side(fl)]; }

  int edge_tail(int e) const { return flag_vertex_[flag(edge_sides_[e].first, side(edge_sides_[e].first).sign > 0 ? 0 : 1)]; }
  int edge_head(int e) const { return flag_vertex_[flag(edge_sides_[e].first, side(edge_sides_[e].first).sign > 0 ? 1 : 0)]; }
  // Vertex at the start corner of side i of face f.
  int corner_vertex(int f, int i) const { return flag_vertex_[flag(side_index(f, i), 0)]; }

  int flag_component(int fl) const { return flag_component_[fl]; }
  int face_component(int f) const { return flag_component_[flag(side_offset_[f], 0)]; }
  bool component_orientable(int c) const { return component_orientable_[c] != 0; }

  // Flags around vertex v in rotation order: alternates tau1 / tau2 steps and
  // returns the flags reached right after each tau2 step (one per incidence).
  std::vector<int> vertex_rotation(int v) const {
    std::vector<int> out;
    int start = vertex_flag_[v], fl = start;
    do {
      out.push_back(fl);
      fl = tau2(tau1(fl));
    } while (fl != start);
    return out;
  }
  int vertex_first_flag(int v) const { return vertex_flag_[v]; }
  int vertex_degree(int v) const { return static_cast<int>(vertex_rotation(v).size()); }

  // Bipartition colour of a flag (valid in orientable components); used as a
  // local orientation: a side is "positively oriented" when its start flag has colour 0.
  int flag_colour(int fl) const { return flag_colour_[fl]; }

 private:
  void build() {
    int nf = num_faces(), ne = num_edges();
    side_offset_.assign(nf + 1, 0);
    for (int f = 0; f < nf; ++f) {
      if (faces_[f].empty()) throw input_error("ParseError", "empty face " + std::to_string(f));
      side_offset_[f + 1] = side_offset_[f] + static_cast<int>(faces_[f].size());
    }
    int ns = side_offset_[nf];
    side_face_.assign(ns, 0);
    std::vector<int> seen(ne, 0);
    edge_sides_.assign(ne, {-1, -1});
    for (int f = 0; f < nf; ++f) {
      for (int i = 0; i < static_cast<int>(faces_[f].size()); ++i) {
        int s = side_offset_[f] + i;
        side_face_[s] = f;
        const Side& sd = faces_[f][i];
        if (sd.edge < 0 || sd.edge >= ne || (sd.sign != 1 && sd.sign != -1))
          throw input_error("GluingError", "bad side in face " + std::to_string(f));
        if (seen[sd.edge] == 0) edge_sides_[sd.edge].first = s;
        else if (seen[sd.edge] == 1) edge_sides_[sd.edge].second = s;
        ++seen[sd.edge];
      }
    }
    for (int e = 0; e < ne; ++e)
      if (seen[e] != 2)
        throw input_error("GluingError", "edge " + std::to_string(e + 1) + " occurs " +
                                             std::to_string(seen[e]) + " times");
    for (int e = 0; e < ne; ++e)
      if (weight_[e] <= 0) throw input_error("NonPositiveWeight", "edge " + std::to_string(e + 1));

    int nfl = 2 * ns;
    flag_vertex_.assign(nfl, -1);
    num_vertices_ = 0;
    vertex_flag_.clear();
    std::vector<int> stack;
    for (int fl = 0; fl < nfl; ++fl) {
      if (flag_vertex_[fl] >= 0) continue;
      int v = num_vertices_++;
      vertex_flag_.push_back(fl);
      stack.push_back(fl);
      flag_vertex_[fl] = v;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {tau1(x), tau2(x)})
          if (flag_vertex_[y] < 0) {
            flag_vertex_[y] = v;
            stack.push_back(y);
          }
      }
    }

    // components and orientability: 2-colour the flag graph
    flag_colour_.assign(nfl, -1);
    flag_component_.assign(nfl, -1);
    num_components_ = 0;
    component_orientable_.clear();
    orientable_ = true;
    for (int fl = 0; fl < nfl; ++fl) {
      if (flag_colour_[fl] >= 0) continue;
      int c = num_components_++;
      bool ok = true;
      flag_colour_[fl] = 0;
      flag_component_[fl] = c;
      stack.push_back(fl);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {tau0(x), tau1(x), tau2(x)}) {
          if (flag_colour_[y] < 0) {
            flag_colour_[y] = 1 - flag_colour_[x];
            flag_component_[y] = c;
            stack.push_back(y);
          } else if (flag_colour_[y] == flag_colour_[x]) {
            ok = false;
          }
        }
      }
      component_orientable_.push_back(ok ? 1 : 0);
      if (!ok) orientable_ = false;
    }
  }

  std::vector<FaceWord> faces_;
  std::vector<Rational> weight_;
  std::vector<char> hole_;
  std::vector<int> side_offset_, side_face_;
  std::vector<std::pair<int, int>> edge_sides_;
  std::vector<int> flag_vertex_, vertex_flag_;
  std::vector<int> flag_colour_, flag_component_;
  std::vector<char> component_orientable_;
  int num_vertices_ = 0;
  int num_components_ = 0;
  bool orientable_ = true;
};

inline int euler_genus(const SurfaceMap& m) { return m.euler_genus(); }
inline bool is_orientable(const SurfaceMap& m) { return m.orientable(); }

// Face words of the map whose faces are the orbits <t0,t1> of an abstract flag
// system.  `end` gives 0/1 for the endpoint of the edge at each flag.
// `start_order` lists flags; each new orbit starts at the first unvisited one.
inline std::vector<FaceWord> faces_from_flags(int nflags, const std::vector<int>& t0,
                                              const std::vector<int>& t1,
                                              const std::vector<int>& edge,
                                              const std::vector<int>& end,
                                              const std::vector<int>& start_order,
                                              std::vector<int>* flag_face = nullptr) {
  std::vector<FaceWord> out;
  std::vector<char> used(nflags, 0);
  if (flag_face) flag_face->assign(nflags, -1);
  for (int st : start_order) {
    if (used[st]) continue;
    FaceWord w;
    int f = static_cast<int>(out.size());
    int fl = st;
    do {
      int other = t0[fl];
      used[fl] = used[other] = 1;
      if (flag_face) (*flag_face)[fl] = (*flag_face)[other] = f;
      w.push_back({edge[fl], end[fl] == 0 ? 1 : -1});
      fl = t1[other];
    } while (fl != st);
    out.push_back(std::move(w));
  }
  return out;
}

struct DualMap {
  SurfaceMap map;
  std::vector<int> vertex_of_face;  // primal face -> dual vertex
  std::vector<int> face_of_vertex;  // primal vertex -> dual face
};

// Dual map: tau0 and tau2 exchange roles.  Dual face v is the rotation around
// primal vertex v; the dual edge e* is oriented from the face of the first
// side of e towards the face of its second side.
inline DualMap dual(const SurfaceMap& m) {
  int nfl = m.num_flags();
  std::vector<int> t0(nfl), t1(nfl), edge(nfl), end(nfl), order;
  for (int fl = 0; fl < nfl; ++fl) {
    t0[fl] = m.tau2(fl);
    t1[fl] = m.tau1(fl);
    int e = m.flag_edge(fl);
    edge[fl] = e;
    end[fl] = m.edge_sides(e).first == SurfaceMap::flag_side(fl) ? 0 : 1;
  }
  for (int v = 0; v < m.num_vertices(); ++v) order.push_back(m.vertex_first_flag(v));
  std::vector<int> ff;
  auto words = faces_from_flags(nfl, t0, t1, edge, end, order, &ff);
  DualMap d;
  d.map = SurfaceMap(std::move(words), m.weights());
  d.face_of_vertex.resize(m.num_vertices());
  for (int v = 0; v < m.num_vertices(); ++v) d.face_of_vertex[v] = ff[m.vertex_first_flag(v)];
  // dual vertex of primal face f: tail of e* for the first side of f's first edge
  d.vertex_of_face.assign(m.num_faces(), -1);
  for (int f = 0; f < m.num_faces(); ++f) {
    int s = m.side_index(f, 0);
    int e = m.side(s).edge;
    d.vertex_of_face[f] = m.edge_sides(e).first == s ? d.map.edge_tail(e) : d.map.edge_head(e);
  }
  return d;
}

}  // namespace surfcurve
