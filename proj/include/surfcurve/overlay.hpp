#pragma once

// Mutable overlay of curves on an embedded graph, stored as a signed rotation
// system: every vertex keeps the cyclic order of its darts and every edge a
// twist sign.  Faces are recomputed by tracing whenever they are needed, which
// keeps insertion and deletion of curve segments simple and robust on
// non-orientable surfaces.
//
// Dart 2e is the end of edge e at end[0], dart 2e+1 the end at end[1].  A
// corner is named by the dart after which it opens: corner d at vertex v is
// the angle between d and its successor in the rotation of v.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <vector>

#include "surfcurve/errors.hpp"
#include "surfcurve/surface_map.hpp"

namespace surfcurve {

enum class EdgeKind : unsigned char { Metric, Curve, Scaffold };

struct OverlayEdge {
  int end[2] = {-1, -1};
  int sign = 1;
  EdgeKind kind = EdgeKind::Metric;
  int ancestor = -1;  // metric edge of the host map
  int ancestor_dir = 1;  // +1 if end[0]->end[1] runs along the ancestor's direction
  int curve = -1;
  // 1 when side 0 of this edge lies on side 1 of the ancestor.  Side 0 of an
  // edge is the angle just before its tail dart in the tail rotation.
  int side_flip = 0;
  bool alive = true;
};

struct TracedFaces {
  struct Step {
    int corner;  // dart naming the corner where the step starts
    int orient;  // walk orientation relative to the vertex rotation
    int leave;   // dart along which the walk leaves the corner
  };
  std::vector<std::vector<Step>> faces;
  std::vector<int> face_of_corner;    // per dart (only for darts in use)
  std::vector<int> orient_of_corner;  // per dart
};

class Overlay {
 public:
  static int dart(int e, int k) { return 2 * e + k; }
  static int dart_edge(int d) { return d / 2; }
  static int dart_end(int d) { return d % 2; }

  int add_vertex() {
    rot_.emplace_back();
    return static_cast<int>(rot_.size()) - 1;
  }
  int num_vertex_slots() const { return static_cast<int>(rot_.size()); }
  int num_edge_slots() const { return static_cast<int>(edges_.size()); }
  const OverlayEdge& edge(int e) const { return edges_[e]; }
  OverlayEdge& edge(int e) { return edges_[e]; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int dart_vertex(int d) const { return edges_[dart_edge(d)].end[dart_end(d)]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  int succ(int d) const {
    const auto& r = rot_[dart_vertex(d)];
    int i = index_in(r, d);
    return r[(i + 1) % r.size()];
  }
  int pred(int d) const {
    const auto& r = rot_[dart_vertex(d)];
    int i = index_in(r, d);
    return r[(i + r.size() - 1) % r.size()];
  }

  // Builds the overlay of a closed map: one vertex per map vertex, one metric
  // edge per map edge (same ids), rotations read off the flags.
  static Overlay from_map(const SurfaceMap& m) {
    Overlay o;
    o.rot_.assign(m.num_vertices(), {});
    o.edges_.resize(m.num_edges());
    for (int e = 0; e < m.num_edges(); ++e) {
      OverlayEdge& oe = o.edges_[e];
      oe.end[0] = m.edge_tail(e);
      oe.end[1] = m.edge_head(e);
      oe.kind = EdgeKind::Metric;
      oe.ancestor = e;
      oe.ancestor_dir = 1;
    }
    // Walk each vertex rotation through flags.  The flag's edge end gives the
    // dart; the colour of the flag relative to the first one gives the local
    // orientation used to fix twist signs.
    std::vector<int> frame_flag(m.num_vertices(), -1);
    o.initial_corner_face_.assign(2 * m.num_edges(), -1);
    o.side0_of_map_edge_.assign(m.num_edges(), -1);
    for (int v = 0; v < m.num_vertices(); ++v) {
      int f0 = m.vertex_first_flag(v);
      frame_flag[v] = f0;
      int fl = f0;
      do {
        int d = dart(m.flag_edge(fl), m.flag_end(fl));
        o.rot_[v].push_back(d);
        // the angle after d lies in this flag's face and on this flag's side
        o.initial_corner_face_[d] = m.flag_face(fl);
        if (m.flag_end(fl) == 0) o.side0_of_map_edge_[m.flag_edge(fl)] = m.partner_side(SurfaceMap::flag_side(fl));
        fl = m.tau2(m.tau1(fl));
      } while (fl != f0);
    }
    // Flags around a vertex alternate colour classes in pairs; a flag fl is
    // "rotation-aligned" at its vertex when it is reached from the frame flag
    // by an even number of tau1/tau2 steps.  The edge sign compares the
    // alignment of the two flags of one side at its two ends.
    std::vector<int> aligned(m.num_flags(), -1);
    for (int v = 0; v < m.num_vertices(); ++v) {
      int f0 = frame_flag[v];
      int fl = f0;
      do {
        aligned[fl] = 1;
        aligned[m.tau1(fl)] = 0;
        fl = m.tau2(m.tau1(fl));
      } while (fl != f0);
    }
    for (int e = 0; e < m.num_edges(); ++e) {
      int s = m.edge_sides(e).first;
      int a = SurfaceMap::flag(s, 0), b = SurfaceMap::flag(s, 1);
      // flags a and b lie on the same side of e in one face, so they agree
      // iff the two rotations agree along e
      o.edges_[e].sign = aligned[a] == aligned[b] ? -1 : 1;
    }
    return o;
  }

  int add_edge_raw(int u, int v, int sign, EdgeKind kind, int ancestor = -1, int curve = -1) {
    OverlayEdge e;
    e.end[0] = u;
    e.end[1] = v;
    e.sign = sign;
    e.kind = kind;
    e.ancestor = ancestor;
    e.curve = curve;
    edges_.push_back(e);
    return static_cast<int>(edges_.size()) - 1;
  }

  // Inserts the dart d at vertex v right after dart `after` (or as the only
  // dart if `after` < 0).
  void insert_dart(int v, int d, int after) {
    auto& r = rot_[v];
    if (after < 0) {
      SURFCURVE_CHECK(r.empty(), "OverlayError", "corner needed at a non-isolated vertex");
      r.push_back(d);
      return;
    }
    int i = index_in(r, after);
    r.insert(r.begin() + i + 1, d);
  }

  // Subdivides e with a new vertex p; e keeps end[0] and its sign, the new
  // edge runs from p to the old end[1].  Returns p.
  int split_edge(int e) {
    int p = add_vertex();
    OverlayEdge copy = edges_[e];
    int e2 = add_edge_raw(p, copy.end[1], 1, copy.kind, copy.ancestor, copy.curve);
    edges_[e2].ancestor_dir = copy.ancestor_dir;
    edges_[e2].side_flip = copy.side_flip ^ (copy.sign < 0 ? 1 : 0);
    // the old head dart moves to e2
    auto& rv = rot_[copy.end[1]];
    for (auto& d : rv)
      if (d == dart(e, 1)) {
        d = dart(e2, 1);
        break;
      }
    edges_[e].end[1] = p;
    rot_[p] = {dart(e, 1), dart(e2, 0)};
    last_split_new_edge_ = e2;
    return p;
  }
  int last_split_new_edge() const { return last_split_new_edge_; }

  // Face of the host map containing each corner of a freshly built overlay,
  // and the side of every host edge lying just before its tail dart.
  int initial_corner_face(int d) const { return initial_corner_face_[d]; }
  int side0_of_map_edge(int e) const { return side0_of_map_edge_[e]; }

  void delete_edge(int e) {
    OverlayEdge& oe = edges_[e];
    for (int k = 0; k < 2; ++k) {
      auto& r = rot_[oe.end[k]];
      r.erase(std::remove(r.begin(), r.end(), dart(e, k)), r.end());
    }
    oe.alive = false;
  }

  // Merges the two edges at a degree-2 vertex into one; the vertex becomes
  // isolated.  Only used for subdivision points of one metric edge.
  void smooth(int p) {
    SURFCURVE_CHECK(degree(p) == 2, "OverlayError", "smoothing needs degree 2");
    int d1 = rot_[p][0], d2 = rot_[p][1];
    int e1 = dart_edge(d1), e2 = dart_edge(d2);
    SURFCURVE_CHECK(e1 != e2, "OverlayError", "cannot smooth a loop");
    OverlayEdge& a = edges_[e1];
    OverlayEdge& b = edges_[e2];
    int ua = a.end[1 - dart_end(d1)];  // far end of e1
    int wb = b.end[1 - dart_end(d2)];  // far end of e2
    // keep e1, oriented from ua to wb
    int far_dart_a = dart(e1, 1 - dart_end(d1));
    int far_dart_b = dart(e2, 1 - dart_end(d2));
    int dir_a = dart_end(d1) == 1 ? a.ancestor_dir : -a.ancestor_dir;  // along ua->p
    int sign = a.sign * b.sign;
    OverlayEdge merged = a;
    merged.end[0] = ua;
    merged.end[1] = wb;
    merged.sign = sign;
    merged.ancestor_dir = dir_a;
    if (dart_end(far_dart_a) == 1) merged.side_flip = a.side_flip ^ (a.sign > 0 ? 1 : 0);
    // replace darts at far ends
    for (auto& d : rot_[ua])
      if (d == far_dart_a) {
        d = dart(e1, 0);
        break;
      }
    for (auto& d : rot_[wb])
      if (d == far_dart_b) {
        d = dart(e1, 1);
        break;
      }
    edges_[e1] = merged;
    edges_[e2].alive = false;
    rot_[p].clear();
  }

  TracedFaces trace() const {
    TracedFaces t;
    int nd = 2 * num_edge_slots();
    t.face_of_corner.assign(nd, -1);
    t.orient_of_corner.assign(nd, 0);
    for (int v = 0; v < num_vertex_slots(); ++v) {
      for (int start : rot_[v]) {
        if (t.face_of_corner[start] >= 0) continue;
        int fid = static_cast<int>(t.faces.size());
        t.faces.emplace_back();
        auto& face = t.faces.back();
        int arrived = start, o = 1;
        for (;;) {
          int corner = o > 0 ? arrived : pred(arrived);
          if (t.face_of_corner[corner] >= 0) {
            SURFCURVE_CHECK(corner == start && t.face_of_corner[corner] == fid, "OverlayError",
                            "face tracing did not close up");
            break;
          }
          int leave = o > 0 ? succ(arrived) : pred(arrived);
          t.face_of_corner[corner] = fid;
          t.orient_of_corner[corner] = o;
          face.push_back({corner, o, leave});
          int e = dart_edge(leave);
          o *= edges_[e].sign;
          arrived = leave ^ 1;
        }
      }
    }
    return t;
  }

  // The two faces along every live edge, in order of appearance.  With
  // twisted edges a face may leave along the same dart twice, so the sides
  // are not keyed by dart.
  static std::vector<std::array<int, 2>> edge_faces(const Overlay& o, const TracedFaces& t) {
    std::vector<std::array<int, 2>> out(o.num_edge_slots(), {-1, -1});
    for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
      for (const auto& s : t.faces[f]) {
        auto& slot = out[dart_edge(s.leave)];
        slot[slot[0] < 0 ? 0 : 1] = f;
      }
    return out;
  }

  // Inserts a new edge inside a face between two of its corners.  The twist
  // sign makes the edge follow the face's local orientation at both ends.
  int insert_in_face(const TracedFaces& t, int c1, int c2, EdgeKind kind, int curve = -1) {
    SURFCURVE_CHECK(t.face_of_corner[c1] == t.face_of_corner[c2], "OverlayError", "corners in different faces");
    int v1 = dart_vertex(c1), v2 = dart_vertex(c2);
    int sign = t.orient_of_corner[c1] * t.orient_of_corner[c2];
    int e = add_edge_raw(v1, v2, sign, kind, -1, curve);
    insert_dart(v1, dart(e, 0), c1);
    insert_dart(v2, dart(e, 1), c2);
    return e;
  }
  // Variant for an isolated endpoint v1 (no corner yet).
  int insert_from_isolated(int v1, const TracedFaces& t, int c2, EdgeKind kind, int curve = -1) {
    SURFCURVE_CHECK(degree(v1) == 0, "OverlayError", "vertex is not isolated");
    int v2 = dart_vertex(c2);
    int e = add_edge_raw(v1, v2, t.orient_of_corner[c2], kind, -1, curve);
    insert_dart(v1, dart(e, 0), -1);
    insert_dart(v2, dart(e, 1), c2);
    return e;
  }

  int count_live_edges() const {
    int c = 0;
    for (const auto& e : edges_) c += e.alive;
    return c;
  }
  int count_live_vertices() const {
    int c = 0;
    for (const auto& r : rot_) c += !r.empty();
    return c;
  }

  // Exports the overlay as a face-word map.  Live edges and non-isolated
  // vertices are renumbered densely; `edge_id` maps overlay edges to map edges.
  SurfaceMap to_map(const std::vector<Rational>& weight_of_edge, std::vector<int>* edge_id = nullptr) const {
    TracedFaces t = trace();
    std::vector<int> id(num_edge_slots(), -1);
    std::vector<Rational> w;
    for (int e = 0; e < num_edge_slots(); ++e)
      if (edges_[e].alive) {
        id[e] = static_cast<int>(w.size());
        w.push_back(weight_of_edge[e]);
      }
    std::vector<FaceWord> faces;
    for (const auto& f : t.faces) {
      FaceWord word;
      for (const auto& s : f) word.push_back({id[dart_edge(s.leave)], dart_end(s.leave) == 0 ? 1 : -1});
      faces.push_back(std::move(word));
    }
    if (edge_id) *edge_id = id;
    return SurfaceMap(std::move(faces), std::move(w));
  }

 private:
  static int index_in(const std::vector<int>& r, int d) {
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] == d) return i;
    throw internal_error("OverlayError", "dart not found in rotation");
  }

  std::vector<OverlayEdge> edges_;
  std::vector<std::vector<int>> rot_;
  int last_split_new_edge_ = -1;
  std::vector<int> initial_corner_face_;
  std::vector<int> side0_of_map_edge_;
};

}  // namespace surfcurve
