#pragma once

// Closed walks in a map and closed curves drawn against a map.
//
// A curve is stored in chord form: how many times it crosses each edge, and
// inside every face a perfect matching of the crossing points on the face
// boundary.  Crossing points of edge e are numbered 0..count[e]-1 from tail to
// head.  The points of a face are listed side by side in face-word order; a
// side read against its edge lists that edge's points in reverse.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "surfcurve/cut.hpp"
#include "surfcurve/surface_map.hpp"
#include "surfcurve/z2.hpp"

namespace surfcurve {

// ---------------------------------------------------------------------------
// Classification

enum class CurveKind { Separating, NonseparatingOrienting, NonseparatingNonorienting };

struct CurveClass {
  CurveKind kind = CurveKind::Separating;
  bool one_sided = false;
  bool operator==(const CurveClass&) const = default;

  std::string kind_name() const {
    switch (kind) {
      case CurveKind::Separating: return "separating";
      case CurveKind::NonseparatingOrienting: return "nonseparating-orienting";
      case CurveKind::NonseparatingNonorienting: return "nonseparating-nonorienting";
    }
    return "";
  }
  std::string sided_name() const { return one_sided ? "one-sided" : "two-sided"; }
  std::string str() const { return kind_name() + " " + sided_name(); }
};

enum class LoopKind { Shortest, Canonical, Standard, Arbitrary };

inline std::string loop_kind_name(LoopKind k) {
  switch (k) {
    case LoopKind::Shortest: return "shortest";
    case LoopKind::Canonical: return "canonical";
    case LoopKind::Standard: return "standard";
    case LoopKind::Arbitrary: return "arbitrary";
  }
  return "";
}

struct SignatureVector {
  Bits bits = 0;
  int dim = 0;
  LoopKind basis = LoopKind::Arbitrary;
};

// Reads the class of a simple curve off its signature with respect to a
// canonical system: separating iff all zero, orienting iff all one, one-sided
// iff the number of ones is odd.
inline CurveClass classify_from_signature(const SignatureVector& s, int g) {
  if (s.dim != g) throw input_error("DimensionMismatch", "signature has dimension " + std::to_string(s.dim));
  if (s.basis != LoopKind::Canonical)
    throw input_error("NonCanonicalSystem", "classification needs a signature in a canonical basis");
  CurveClass c;
  Bits b = s.bits & low_mask(g);
  c.one_sided = popcount(b) % 2 == 1;
  if (b == 0) c.kind = CurveKind::Separating;
  else if (b == low_mask(g)) c.kind = CurveKind::NonseparatingOrienting;
  else c.kind = CurveKind::NonseparatingNonorienting;
  return c;
}

// ---------------------------------------------------------------------------
// Closed walks

struct WalkStep {
  int edge = 0;
  int dir = 1;  // +1 tail to head
};

struct ClosedWalk {
  int start = 0;  // vertex, used only by the trivial walk
  std::vector<WalkStep> steps;

  bool trivial() const { return steps.empty(); }
};

inline int step_source(const SurfaceMap& m, const WalkStep& s) {
  return s.dir > 0 ? m.edge_tail(s.edge) : m.edge_head(s.edge);
}
inline int step_target(const SurfaceMap& m, const WalkStep& s) {
  return s.dir > 0 ? m.edge_head(s.edge) : m.edge_tail(s.edge);
}

inline void validate_walk(const SurfaceMap& m, const ClosedWalk& w) {
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    if (s.edge < 0 || s.edge >= m.num_edges()) throw input_error("BadWalk", "edge out of range");
    const auto& nx = w.steps[(i + 1) % w.steps.size()];
    if (step_target(m, s) != step_source(m, nx)) throw input_error("BadWalk", "walk is not closed");
  }
}

inline Rational walk_length(const SurfaceMap& m, const ClosedWalk& w) {
  Rational len(0);
  for (const auto& s : w.steps) len += m.weight(s.edge);
  return len;
}

// 0 if unused, 1 if used an odd number of times, 2 if a positive even number.
inline std::vector<int> mu_from_walk(int num_edges, const ClosedWalk& w) {
  std::vector<int> cnt(num_edges, 0);
  for (const auto& s : w.steps) ++cnt[s.edge];
  for (int& c : cnt) c = c == 0 ? 0 : (c % 2 == 1 ? 1 : 2);
  return cnt;
}

inline Bits walk_signature(const std::vector<Bits>& parity, const ClosedWalk& w) {
  Bits b = 0;
  for (const auto& s : w.steps) b ^= parity.at(s.edge);
  return b;
}

inline ClosedWalk reversed(const ClosedWalk& w) {
  ClosedWalk r;
  r.start = w.start;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) r.steps.push_back({it->edge, -it->dir});
  return r;
}

// ---------------------------------------------------------------------------
// Curves in chord form

struct CurveDrawing {
  std::vector<int> count;                                 // per edge
  std::vector<std::vector<std::pair<int, int>>> chords;   // per face, pairs of point indices
  bool trivial = false;                                   // contractible circle inside face 0
};

struct BoundaryPoint {
  int edge;
  int index;  // along the edge, from its tail
  int side;   // side index in the map
};

inline std::vector<BoundaryPoint> face_points(const SurfaceMap& m, const std::vector<int>& count, int f) {
  std::vector<BoundaryPoint> pts;
  for (int i = 0; i < static_cast<int>(m.face(f).size()); ++i) {
    const Side& sd = m.face(f)[i];
    int c = count[sd.edge];
    int s = m.side_index(f, i);
    if (sd.sign > 0)
      for (int j = 0; j < c; ++j) pts.push_back({sd.edge, j, s});
    else
      for (int j = c - 1; j >= 0; --j) pts.push_back({sd.edge, j, s});
  }
  return pts;
}

struct CrossingRecord {
  int edge = 0;
  int face = 0;       // face entered
  int index = 0;      // point index along the edge
  int from_side = 0;  // 0: crossing from the edge's first side to its second
};

class DrawingIndex {
 public:
  DrawingIndex(const SurfaceMap& m, const CurveDrawing& d) : m_(m) {
    if (static_cast<int>(d.count.size()) != m.num_edges()) throw input_error("ChordEndpointMismatch", "count size");
    if (static_cast<int>(d.chords.size()) != m.num_faces()) throw input_error("ChordEndpointMismatch", "chord list size");
    offset_.assign(m.num_edges() + 1, 0);
    for (int e = 0; e < m.num_edges(); ++e) {
      if (d.count[e] < 0) throw input_error("ChordEndpointMismatch", "negative crossing count");
      offset_[e + 1] = offset_[e] + d.count[e];
    }
    int np = offset_.back();
    // mate[side slot] where slot = 2*point + (side is the edge's second side)
    mate_.assign(2 * np, -1);
    for (int f = 0; f < m.num_faces(); ++f) {
      auto pts = face_points(m, d.count, f);
      std::vector<char> used(pts.size(), 0);
      for (auto [a, b] : d.chords[f]) {
        if (a < 0 || b < 0 || a >= static_cast<int>(pts.size()) || b >= static_cast<int>(pts.size()) || a == b)
          throw input_error("ChordEndpointMismatch", "chord endpoint out of range in face " + std::to_string(f));
        if (used[a] || used[b]) throw input_error("ChordEndpointMismatch", "point used twice in face " + std::to_string(f));
        used[a] = used[b] = 1;
        mate_[slot(pts[a])] = slot(pts[b]);
        mate_[slot(pts[b])] = slot(pts[a]);
      }
      for (char u : used)
        if (!u) throw input_error("ChordEndpointMismatch", "unmatched crossing point in face " + std::to_string(f));
    }
  }

  int num_points() const { return offset_.back(); }
  int point(int e, int j) const { return offset_[e] + j; }
  int point_edge(int p) const {
    return static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), p) - offset_.begin()) - 1;
  }
  int slot(const BoundaryPoint& bp) const {
    return 2 * point(bp.edge, bp.index) + (m_.edge_sides(bp.edge).second == bp.side ? 1 : 0);
  }
  int mate(int slot) const { return mate_[slot]; }

  // Number of closed components formed by the chords.
  int components() const {
    int np = num_points();
    std::vector<int> parent(np);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int s = 0; s < 2 * np; ++s) parent[find(s / 2)] = find(mate_[s] / 2);
    int c = 0;
    for (int p = 0; p < np; ++p) c += find(p) == p;
    return c;
  }

  // Cyclic crossing sequence of the component through the first point.
  std::vector<CrossingRecord> trace() const {
    std::vector<CrossingRecord> out;
    if (num_points() == 0) return out;
    int start = 0;  // slot of point 0 on its first side: cross from first to second side
    int cur = start;
    for (int guard = 0; guard <= 2 * num_points(); ++guard) {
      int p = cur / 2, from = cur % 2;
      int e = point_edge(p);
      int to_side = from == 0 ? m_.edge_sides(e).second : m_.edge_sides(e).first;
      out.push_back({e, m_.side_face(to_side), p - offset_[e], from});
      // follow the chord on the far side; its other end is the next crossing
      cur = mate_[2 * p + (1 - from)];
      if (cur == start) return out;
    }
    throw internal_error("CurveError", "crossing trace did not close");
  }

 private:
  const SurfaceMap& m_;
  std::vector<int> offset_;
  std::vector<int> mate_;
};

inline bool chords_non_crossing(const std::vector<std::pair<int, int>>& chords) {
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = std::minmax(chords[i].first, chords[i].second);
      auto [c, d] = std::minmax(chords[j].first, chords[j].second);
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  return true;
}

inline bool is_simple(const SurfaceMap& m, const CurveDrawing& d) {
  if (d.trivial) return true;
  DrawingIndex idx(m, d);
  if (idx.num_points() == 0) return false;
  for (const auto& ch : d.chords)
    if (!chords_non_crossing(ch)) return false;
  return idx.components() == 1;
}

inline Rational curve_length(const SurfaceMap& m, const CurveDrawing& d) {
  Rational len(0);
  for (int e = 0; e < m.num_edges(); ++e) len += m.weight(e) * d.count[e];
  return len;
}

inline int multiplicity(const CurveDrawing& d) {
  return d.count.empty() ? 0 : *std::max_element(d.count.begin(), d.count.end());
}

inline Bits curve_signature(const std::vector<Bits>& parity, const CurveDrawing& d) {
  Bits b = 0;
  for (std::size_t e = 0; e < d.count.size(); ++e)
    if (d.count[e] % 2) b ^= parity.at(e);
  return b;
}

inline std::vector<CrossingRecord> crossing_sequence(const SurfaceMap& m, const CurveDrawing& d) {
  if (d.trivial) return {};
  return DrawingIndex(m, d).trace();
}

// Rebuilds a drawing from a cyclic crossing sequence.  Point indices and
// sides are taken from the records; `infer` assigns them in order of
// appearance instead (first unused index per edge; the side is chosen to
// match the faces).
inline CurveDrawing drawing_from_crossings(const SurfaceMap& m, std::vector<CrossingRecord> rec, bool infer) {
  CurveDrawing d;
  d.count.assign(m.num_edges(), 0);
  d.chords.assign(m.num_faces(), {});
  if (rec.empty()) {
    d.trivial = true;
    return d;
  }
  int n = static_cast<int>(rec.size());
  for (auto& r : rec)
    if (r.edge < 0 || r.edge >= m.num_edges() || r.face < 0 || r.face >= m.num_faces())
      throw input_error("NotAClosedCurve", "crossing record out of range");
  if (infer) {
    std::vector<int> next(m.num_edges(), 0);
    for (int i = 0; i < n; ++i) {
      auto& r = rec[i];
      const auto& prev = rec[(i + n - 1) % n];
      r.index = next[r.edge]++;
      auto [s1, s2] = m.edge_sides(r.edge);
      if (m.side_face(s1) == prev.face && m.side_face(s2) == r.face) r.from_side = 0;
      else if (m.side_face(s2) == prev.face && m.side_face(s1) == r.face) r.from_side = 1;
      else throw input_error("NotAClosedCurve", "consecutive crossings do not share a face");
    }
  }
  for (auto& r : rec) d.count[r.edge] = std::max(d.count[r.edge], r.index + 1);
  std::vector<int> seen(m.num_edges(), 0);
  for (auto& r : rec) ++seen[r.edge];
  for (int e = 0; e < m.num_edges(); ++e)
    if (seen[e] != d.count[e]) throw input_error("NotAClosedCurve", "crossing indices of an edge are not 0..k-1");
  // point position inside each face list
  std::vector<std::map<std::pair<int, int>, int>> pos(m.num_faces());  // (side, index) -> position
  for (int f = 0; f < m.num_faces(); ++f) {
    auto pts = face_points(m, d.count, f);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) pos[f][{pts[i].side, pts[i].index}] = i;
  }
  for (int i = 0; i < n; ++i) {
    const auto& a = rec[i];
    const auto& b = rec[(i + 1) % n];
    auto [a1, a2] = m.edge_sides(a.edge);
    int a_to = a.from_side == 0 ? a2 : a1;
    auto [b1, b2] = m.edge_sides(b.edge);
    int b_from = b.from_side == 0 ? b1 : b2;
    int f = m.side_face(a_to);
    if (f != a.face || m.side_face(b_from) != f)
      throw input_error("NotAClosedCurve", "crossing record faces are inconsistent");
    d.chords[f].push_back({pos[f].at({a_to, a.index}), pos[f].at({b_from, b.index})});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Overlay of a drawing with its host map, as a face-word map.

struct DrawingOverlay {
  SurfaceMap map;
  std::vector<int> chord_edges;     // edges of `map` that are curve segments
  std::vector<int> ancestor;        // per edge of `map`: host edge, or -1 for chords
};

inline DrawingOverlay overlay_drawing(const SurfaceMap& m, const CurveDrawing& d) {
  DrawingOverlay out;
  std::vector<Rational> w;
  // sub-edges of host edge e: sub[e][0..count[e]]
  std::vector<std::vector<int>> sub(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e)
    for (int j = 0; j <= d.count[e]; ++j) {
      sub[e].push_back(static_cast<int>(w.size()));
      w.push_back(m.weight(e));
      out.ancestor.push_back(e);
    }
  std::vector<FaceWord> faces;
  for (int f = 0; f < m.num_faces(); ++f) {
    auto pts = face_points(m, d.count, f);
    int np = static_cast<int>(pts.size());
    // stretch q runs from point q to point q+1; sides before point 0 belong to
    // the wrap-around stretch np-1 and are appended to it at the end
    std::vector<FaceWord> stretch(std::max(np, 1));
    FaceWord head;
    int cur = -1;
    auto put = [&](Side sd) { (cur < 0 ? head : stretch[cur]).push_back(sd); };
    for (const Side& sd : m.face(f)) {
      int c = d.count[sd.edge];
      if (sd.sign > 0) {
        for (int j = 0; j <= c; ++j) {
          put({sub[sd.edge][j], 1});
          if (j < c) ++cur;
        }
      } else {
        for (int j = c; j >= 0; --j) {
          put({sub[sd.edge][j], -1});
          if (j > 0) ++cur;
        }
      }
    }
    auto& wrap = stretch[np > 0 ? np - 1 : 0];
    wrap.insert(wrap.end(), head.begin(), head.end());
    if (np == 0) {
      faces.push_back(stretch[0]);
      continue;
    }
    std::vector<int> mate(np, -1), chord_id(np, -1);
    for (auto [a, b] : d.chords[f]) {
      mate[a] = b;
      mate[b] = a;
      int id = static_cast<int>(w.size());
      w.push_back(Rational(1));
      out.ancestor.push_back(-1);
      out.chord_edges.push_back(id);
      chord_id[a] = chord_id[b] = id;
    }
    std::vector<char> used(np, 0);
    for (int q0 = 0; q0 < np; ++q0) {
      if (used[q0]) continue;
      FaceWord region;
      int q = q0;
      while (!used[q]) {
        used[q] = 1;
        region.insert(region.end(), stretch[q].begin(), stretch[q].end());
        int a = (q + 1) % np, b = mate[a];
        region.push_back({chord_id[a], a < b ? 1 : -1});
        q = b;
      }
      faces.push_back(std::move(region));
    }
  }
  out.map = SurfaceMap(std::move(faces), std::move(w));
  return out;
}

inline CurveClass classify_cut(const SurfaceMap& host, const CutResult& cut) {
  CurveClass c;
  c.one_sided = cut.boundaries() == 1;
  if (cut.components >= 2) c.kind = CurveKind::Separating;
  else if (!host.orientable() && cut.orientable()) c.kind = CurveKind::NonseparatingOrienting;
  else c.kind = CurveKind::NonseparatingNonorienting;
  return c;
}

inline CurveClass classify_by_cutting(const SurfaceMap& m, const CurveDrawing& d) {
  if (d.trivial) return CurveClass{CurveKind::Separating, false};
  if (!is_simple(m, d)) throw input_error("NotSimple", "curve is not simple");
  DrawingOverlay ov = overlay_drawing(m, d);
  return classify_cut(m, cut_along_edges(ov.map, ov.chord_edges));
}

}  // namespace surfcurve
