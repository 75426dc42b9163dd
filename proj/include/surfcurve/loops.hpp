#pragma once

// Systems of loops based at one point.
//
// Three constructions live here:
//   * hitting_paths: shortest paths from vertex 0 whose union meets every
//     non-contractible closed walk (tree-cotree decomposition);
//   * canonical_loops_orientable / standard_loops: loops drawn as curves that
//     cross the edges of a host map, all passing through a basepoint b placed
//     inside face 0.
//
// The drawn systems start as the dual tree-cotree system and are then brought
// to their normal form by cut-and-paste moves on the polygonal schema.  Each
// move draws one new loop as a chord of the cut disk and deletes one old loop;
// after every move the schema word is read back from the drawing and checked
// against the planned word.

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "surfcurve/curve.hpp"
#include "surfcurve/cut.hpp"
#include "surfcurve/overlay.hpp"
#include "surfcurve/schema_word.hpp"
#include "surfcurve/surface_map.hpp"
#include "surfcurve/z2.hpp"

namespace surfcurve {

struct LoopSystem {
  LoopKind kind = LoopKind::Arbitrary;
  int genus = 0;
  bool orientable = true;
  int base_face = 0;
  std::vector<std::string> names;
  std::vector<std::vector<CrossingRecord>> loops;  // each starts and ends in base_face
  Word word;                                       // letters are loop indices
  std::string word_text;
  std::vector<Bits> parity;                        // per host edge, bit i for loop i
  std::vector<char> one_sided;
};

inline std::vector<std::string> template_names(int g, bool orientable) {
  std::vector<std::string> names;
  int handles = g / 2;
  if (!orientable) {
    if (g % 2) names.push_back("z");
    else names.push_back("y"), names.push_back("w"), --handles;
  }
  for (int i = 1; i <= handles; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

inline std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.id == kRestLetter ? std::string("R") : names.at(l.id);
    if (l.sign < 0) s += '\'';
  }
  return s;
}

inline CurveDrawing loop_drawing(const SurfaceMap& host, const LoopSystem& ls, int i) {
  return drawing_from_crossings(host, ls.loops.at(i), false);
}

// ---------------------------------------------------------------------------
// Hitting shortest paths.

struct HittingPaths {
  int base = 0;
  std::vector<std::vector<int>> paths;  // vertex sequences starting at the base
  std::vector<int> leftover;            // the g edges closing the implied loops
  std::vector<int> parent_edge;         // shortest-path tree, -1 at the base
  std::vector<Rational> distance;
};

// Closed walks base -> u, across the leftover edge, v -> base.
inline std::vector<ClosedWalk> implied_loops(const SurfaceMap& m, const HittingPaths& hp) {
  auto climb = [&](int v) {
    std::vector<WalkStep> up;  // steps from v towards the base
    while (hp.parent_edge[v] >= 0) {
      int e = hp.parent_edge[v];
      int dir = m.edge_head(e) == v ? -1 : 1;
      up.push_back({e, dir});
      v = dir > 0 ? m.edge_head(e) : m.edge_tail(e);
    }
    return up;
  };
  std::vector<ClosedWalk> out;
  for (int e : hp.leftover) {
    ClosedWalk w;
    w.start = hp.base;
    auto down = climb(m.edge_tail(e));
    std::reverse(down.begin(), down.end());
    for (auto& s : down) w.steps.push_back({s.edge, -s.dir});
    w.steps.push_back({e, 1});
    for (auto& s : climb(m.edge_head(e))) w.steps.push_back(s);
    out.push_back(std::move(w));
  }
  return out;
}

inline HittingPaths hitting_paths(const SurfaceMap& m) {
  HittingPaths hp;
  int nv = m.num_vertices();
  if (nv == 0) return hp;
  ScaledWeights sw = scale_weights(m.weights());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, neighbour)
  for (int e = 0; e < m.num_edges(); ++e) {
    int u = m.edge_tail(e), v = m.edge_head(e);
    adj[u].push_back({e, v});
    if (u != v) adj[v].push_back({e, u});
  }
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(nv, inf);
  hp.parent_edge.assign(nv, -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (auto [e, v] : adj[u])
      if (d + sw.value[e] < dist[v]) {
        dist[v] = d + sw.value[e];
        hp.parent_edge[v] = e;
        pq.push({dist[v], v});
      }
  }
  for (int v = 0; v < nv; ++v) hp.distance.push_back(sw.to_rational(dist[v]));
  std::vector<char> in_tree(m.num_edges(), 0);
  for (int v = 0; v < nv; ++v)
    if (hp.parent_edge[v] >= 0) in_tree[hp.parent_edge[v]] = 1;

  // maximum-weight spanning tree of the dual among the remaining edges
  std::vector<int> order;
  for (int e = 0; e < m.num_edges(); ++e)
    if (!in_tree[e]) order.push_back(e);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sw.value[a] > sw.value[b]; });
  std::vector<int> parent(m.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int e : order) {
    auto [s1, s2] = m.edge_sides(e);
    int a = find(m.side_face(s1)), b = find(m.side_face(s2));
    if (a != b) parent[a] = b;
    else hp.leftover.push_back(e);
  }
  std::sort(hp.leftover.begin(), hp.leftover.end());
  SURFCURVE_CHECK(static_cast<int>(hp.leftover.size()) == m.euler_genus(), "LoopError",
                  "tree-cotree leftover count differs from the genus");

  auto path_to = [&](int v) {
    std::vector<int> p{v};
    while (hp.parent_edge[v] >= 0) {
      int e = hp.parent_edge[v];
      v = m.edge_head(e) == v ? m.edge_tail(e) : m.edge_head(e);
      p.push_back(v);
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (int e : hp.leftover) {
    hp.paths.push_back(path_to(m.edge_tail(e)));
    hp.paths.push_back(path_to(m.edge_head(e)));
  }
  return hp;
}

// Cuts along the union of the implied loops and reports whether a single disk
// remains.
inline bool implied_loops_cut_to_disk(const SurfaceMap& m, const HittingPaths& hp) {
  std::vector<int> edges;
  for (const auto& w : implied_loops(m, hp))
    for (const auto& s : w.steps) edges.push_back(s.edge);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) return m.euler_genus() == 0;
  CutResult r = cut_along_edges(m, edges);
  return r.components == 1 && r.boundaries() == 1 && r.map.euler_characteristic() == 1;
}

// ---------------------------------------------------------------------------
// Drawn loop systems.

namespace detail {

class LoopBuilder {
 public:
  explicit LoopBuilder(const SurfaceMap& host, int base_face)
      : x_(host), o_(Overlay::from_map(host)), base_face_(base_face) {
    b_ = o_.add_vertex();
    for (int d = 0; d < 2 * host.num_edges(); ++d)
      if (o_.initial_corner_face(d) == base_face) {
        hint_ = d;
        break;
      }
    SURFCURVE_CHECK(hint_ >= 0, "LoopError", "base face has no corner");
  }

  // One loop per edge left over by a dual spanning tree T (from the base
  // face) and a spanning tree of the vertices among the other edges.  The
  // loop runs through T-faces to the leftover edge, crosses it and returns.
  void draw_initial_system() {
    const int nf = x_.num_faces();
    std::vector<char> in_t(x_.num_edges(), 0), seen(nf, 0);
    std::vector<int> queue{base_face_};
    seen[base_face_] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (int i = 0; i < static_cast<int>(x_.face(f).size()); ++i) {
        int s = x_.side_index(f, i);
        int h = x_.side_face(x_.partner_side(s));
        if (seen[h]) continue;
        seen[h] = 1;
        in_t[x_.side(s).edge] = 1;
        queue.push_back(h);
      }
    }
    std::vector<int> parent(x_.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<int> leftover;
    for (int e = 0; e < x_.num_edges(); ++e) {
      if (in_t[e]) continue;
      int a = find(x_.edge_tail(e)), b = find(x_.edge_head(e));
      if (a != b) parent[a] = b;
      else leftover.push_back(e);
    }
    SURFCURVE_CHECK(static_cast<int>(leftover.size()) == x_.euler_genus(), "LoopError",
                    "tree-cotree leftover count differs from the genus");
    auto through_tree = [&](int m) { return in_t[o_.edge(m).ancestor] != 0; };
    int id = 0;
    for (int e : leftover) draw_tree_loop(e, id++, through_tree);
  }

  struct Reading {
    Word word;
    std::vector<int> corner;  // corner dart at b where each letter starts
  };

  // Reads the polygonal schema off the loops alone; fails unless they cut the
  // surface into one disk.
  Reading read_word() const {
    Reading r;
    Overlay c = o_;
    for (int e = 0; e < c.num_edge_slots(); ++e)
      if (c.edge(e).alive && c.edge(e).kind != EdgeKind::Curve) c.delete_edge(e);
    if (c.degree(b_) == 0) return r;
    TracedFaces t = c.trace();
    SURFCURVE_CHECK(t.faces.size() == 1, "LoopError", "loops do not cut the surface into a single face");
    int chi = c.count_live_vertices() - c.count_live_edges() + 1;
    SURFCURVE_CHECK(chi == x_.closed_euler_characteristic(), "LoopError", "loop graph has the wrong Euler characteristic");
    const auto& steps = t.faces[0];
    int n = static_cast<int>(steps.size()), i0 = -1;
    for (int i = 0; i < n && i0 < 0; ++i)
      if (c.dart_vertex(steps[i].corner) == b_) i0 = i;
    for (int k = 0; k < n; ++k) {
      const auto& st = steps[(i0 + k) % n];
      if (c.dart_vertex(st.corner) != b_) continue;
      int e = Overlay::dart_edge(st.leave);
      r.word.push_back({c.edge(e).curve, Overlay::dart_end(st.leave) == 0 ? 1 : -1});
      r.corner.push_back(st.corner);
    }
    SURFCURVE_CHECK(static_cast<int>(r.word.size()) == 2 * x_.euler_genus(), "LoopError", "schema word has the wrong length");
    return r;
  }

  // Brings the system to the normal form by planned cut-and-paste moves.
  void normalize() {
    Reading rd = read_word();
    if (rd.word.empty()) return;
    Word predicted = rd.word;
    for (const PlannedMove& pm : plan_normal_form(rd.word)) {
      rd = read_word();
      SURFCURVE_CHECK(align_words(predicted, rd.word).has_value(), "LoopError", "drawn loops diverged from the plan");
      Move mv = transport_move(pm.move, predicted, rd.word);
      int n = static_cast<int>(rd.word.size());
      draw_between(rd.corner[mv.P], rd.corner[mv.Q % n], pm.new_id);
      remove_loop(mv.paste);
      predicted = pm.after;
    }
    SURFCURVE_CHECK(align_words(predicted, read_word().word).has_value(), "LoopError",
                    "drawn loops diverged from the plan");
  }

  LoopSystem finish(LoopKind kind) const {
    LoopSystem ls;
    ls.kind = kind;
    ls.genus = x_.euler_genus();
    ls.orientable = x_.orientable();
    ls.base_face = base_face_;
    ls.names = template_names(ls.genus, ls.orientable);
    ls.word = normal_form_template(ls.genus, ls.orientable);
    ls.word_text = word_to_text(ls.word, ls.names);
    ls.parity.assign(x_.num_edges(), 0);
    if (ls.genus == 0) return ls;

    Reading rd = read_word();
    auto al = align_words(ls.word, rd.word);
    SURFCURVE_CHECK(al.has_value(), "LoopError", "final schema word is not the normal form");
    SURFCURVE_CHECK(exported_cut_is_disk(), "LoopError", "cutting the overlay along the loops is not a disk");
    std::vector<int> rank = point_ranks();
    for (int i = 0; i < ls.genus; ++i) {
      const Letter& l = al->letter.at(i);
      auto rec = crossings(l.id, l.sign < 0, rank);
      CurveDrawing d = drawing_from_crossings(x_, rec, false);
      SURFCURVE_CHECK(is_simple(x_, d), "LoopError", "a loop is not simple");
      for (int e = 0; e < x_.num_edges(); ++e)
        if (d.count[e] % 2) ls.parity[e] |= bit(i);
      bool one_sided = sign_product(l.id) < 0;
      SURFCURVE_CHECK(one_sided == classify_by_cutting(x_, d).one_sided, "LoopError",
                      "sidedness by twist count and by cutting disagree");
      ls.one_sided.push_back(one_sided ? 1 : 0);
      ls.loops.push_back(std::move(rec));
    }
    return ls;
  }

 private:
  struct Route {
    bool found = false;
    int first_edge = -1;  // -1: already at a target face
    int target_face = -1;
  };

  int face_of(const TracedFaces& t, int cur) const { return t.face_of_corner[cur >= 0 ? cur : hint_]; }

  template <class Allowed, class Target>
  Route route(const TracedFaces& t, int from, Allowed allowed, Target is_target) const {
    Route r;
    auto ef = Overlay::edge_faces(o_, t);
    int nf = static_cast<int>(t.faces.size());
    std::vector<int> via(nf, -2), prev(nf, -1);
    std::vector<int> queue{from};
    via[from] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      if (is_target(f)) {
        r.found = true;
        r.target_face = f;
        while (prev[f] >= 0 && prev[f] != from) f = prev[f];
        r.first_edge = via[f];
        return r;
      }
      for (const auto& st : t.faces[f]) {
        int m = Overlay::dart_edge(st.leave);
        const OverlayEdge& oe = o_.edge(m);
        if (oe.kind != EdgeKind::Metric || !allowed(m)) continue;
        int h = ef[m][0] == f ? ef[m][1] : ef[m][0];
        if (h == f || via[h] != -2) continue;
        via[h] = m;
        prev[h] = f;
        queue.push_back(h);
      }
    }
    return r;
  }

  static int rekey(int d, int m, int m2) { return d == Overlay::dart(m, 1) ? Overlay::dart(m2, 1) : d; }

  // Extends the curve from corner `cur` across the metric edge m and returns
  // the corner on the far side.
  int cross(int cur, int m, int curve) {
    int p = o_.split_edge(m);
    int m2 = o_.last_split_new_edge();
    if (cur >= 0) cur = rekey(cur, m, m2);
    hint_ = rekey(hint_, m, m2);
    TracedFaces t = o_.trace();
    int f = face_of(t, cur);
    int ca = Overlay::dart(m, 1), cb = Overlay::dart(m2, 0);
    int cin = t.face_of_corner[ca] == f ? ca : cb;
    SURFCURVE_CHECK(t.face_of_corner[cin] == f, "LoopError", "crossed edge does not bound the current face");
    if (cur >= 0) o_.insert_in_face(t, cur, cin, EdgeKind::Curve, curve);
    else o_.insert_from_isolated(b_, t, cin, EdgeKind::Curve, curve);
    // angle after dart(m,1) is side 0 of m2, angle after dart(m2,0) its side 1
    int anc_side = (cin == ca ? 0 : 1) ^ o_.edge(m2).side_flip;
    int e = o_.edge(m2).ancestor;
    int xs = o_.side0_of_map_edge(e);
    if (anc_side) xs = x_.partner_side(xs);
    if (static_cast<int>(from_side_.size()) <= p) from_side_.resize(p + 1, -1);
    from_side_[p] = xs;
    return cin == ca ? cb : ca;
  }

  int b_corner_in(const TracedFaces& t, int f) const {
    for (const auto& st : t.faces[f])
      if (o_.dart_vertex(st.corner) == b_) return st.corner;
    return -1;
  }

  template <class Allowed>
  void draw_tree_loop(int e, int curve, Allowed allowed) {
    auto touches_e = [&](const TracedFaces& t, int f) {
      for (const auto& st : t.faces[f]) {
        const OverlayEdge& oe = o_.edge(Overlay::dart_edge(st.leave));
        if (oe.kind == EdgeKind::Metric && oe.ancestor == e) return Overlay::dart_edge(st.leave);
      }
      return -1;
    };
    // outward half: pick the first corner at b from which the edge is reachable
    TracedFaces t = o_.trace();
    std::vector<int> starts;
    if (o_.degree(b_) == 0) starts.push_back(-1);
    else
      for (int d : o_.rotation(b_)) starts.push_back(d);
    int cur = -2;
    for (int s : starts) {
      if (route(t, face_of(t, s), allowed, [&](int f) { return touches_e(t, f) >= 0; }).found) {
        cur = s;
        break;
      }
    }
    SURFCURVE_CHECK(cur != -2, "LoopError", "leftover edge unreachable through the dual tree");
    for (int guard = 0;; ++guard) {
      SURFCURVE_CHECK(guard <= 4 * o_.num_edge_slots(), "LoopError", "routing does not terminate");
      t = o_.trace();
      Route r = route(t, face_of(t, cur), allowed, [&](int f) { return touches_e(t, f) >= 0; });
      SURFCURVE_CHECK(r.found, "LoopError", "lost the route to the leftover edge");
      if (r.first_edge < 0) {
        cur = cross(cur, touches_e(t, r.target_face), curve);
        break;
      }
      cur = cross(cur, r.first_edge, curve);
    }
    // return half
    for (int guard = 0;; ++guard) {
      SURFCURVE_CHECK(guard <= 4 * o_.num_edge_slots(), "LoopError", "routing does not terminate");
      t = o_.trace();
      Route r = route(t, face_of(t, cur), allowed, [&](int f) { return b_corner_in(t, f) >= 0; });
      SURFCURVE_CHECK(r.found, "LoopError", "lost the route back to the basepoint");
      if (r.first_edge < 0) {
        o_.insert_in_face(t, cur, b_corner_in(t, r.target_face), EdgeKind::Curve, curve);
        return;
      }
      cur = cross(cur, r.first_edge, curve);
    }
  }

  // Draws a loop from one corner at b to another, crossing metric edges only.
  void draw_between(int from, int to, int curve) {
    int cur = from;
    auto any = [](int) { return true; };
    for (int guard = 0;; ++guard) {
      SURFCURVE_CHECK(guard <= 4 * o_.num_edge_slots(), "LoopError", "routing does not terminate");
      TracedFaces t = o_.trace();
      int goal = t.face_of_corner[to];
      Route r = route(t, t.face_of_corner[cur], any, [&](int f) { return f == goal; });
      SURFCURVE_CHECK(r.found, "LoopError", "schema corners are not connected");
      if (r.first_edge < 0) {
        o_.insert_in_face(t, cur, to, EdgeKind::Curve, curve);
        return;
      }
      cur = cross(cur, r.first_edge, curve);
    }
  }

  void remove_loop(int curve) {
    std::vector<int> points;
    for (int e = 0; e < o_.num_edge_slots(); ++e) {
      const OverlayEdge& oe = o_.edge(e);
      if (!oe.alive || oe.kind != EdgeKind::Curve || oe.curve != curve) continue;
      for (int k = 0; k < 2; ++k)
        if (oe.end[k] != b_) points.push_back(oe.end[k]);
      o_.delete_edge(e);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (int p : points) o_.smooth(p);
  }

  int sign_product(int curve) const {
    int s = 1;
    for (int e = 0; e < o_.num_edge_slots(); ++e) {
      const OverlayEdge& oe = o_.edge(e);
      if (oe.alive && oe.kind == EdgeKind::Curve && oe.curve == curve) s *= oe.sign;
    }
    return s;
  }

  // Position of every crossing point among the points on its host edge,
  // counted from the tail.
  std::vector<int> point_ranks() const {
    std::vector<int> rank(o_.num_vertex_slots(), -1);
    const int nv = x_.num_vertices();
    for (int e = 0; e < x_.num_edges(); ++e) {
      int v = x_.edge_tail(e), d = -1;
      for (int dd : o_.rotation(v)) {
        const OverlayEdge& oe = o_.edge(Overlay::dart_edge(dd));
        if (oe.kind == EdgeKind::Metric && oe.ancestor == e && (Overlay::dart_end(dd) == 0) == (oe.ancestor_dir > 0)) {
          d = dd;
          break;
        }
      }
      SURFCURVE_CHECK(d >= 0, "LoopError", "host edge lost its first segment");
      int r = 0;
      for (;;) {
        int w = o_.dart_vertex(d ^ 1);
        if (w < nv) break;
        rank[w] = r++;
        int next = -1;
        for (int dd : o_.rotation(w))
          if (dd != (d ^ 1) && o_.edge(Overlay::dart_edge(dd)).kind == EdgeKind::Metric) next = dd;
        SURFCURVE_CHECK(next >= 0, "LoopError", "broken subdivision chain");
        d = next;
      }
    }
    return rank;
  }

  std::vector<CrossingRecord> crossings(int curve, bool reverse, const std::vector<int>& rank) const {
    int d = -1;
    for (int dd : o_.rotation(b_)) {
      const OverlayEdge& oe = o_.edge(Overlay::dart_edge(dd));
      if (oe.curve == curve && Overlay::dart_end(dd) == 0) d = dd;
    }
    SURFCURVE_CHECK(d >= 0, "LoopError", "loop does not leave the basepoint");
    std::vector<int> points;
    for (;;) {
      int p = o_.dart_vertex(d ^ 1);
      if (p == b_) break;
      points.push_back(p);
      d = -1;
      for (int dd : o_.rotation(p)) {
        const OverlayEdge& oe = o_.edge(Overlay::dart_edge(dd));
        if (oe.kind == EdgeKind::Curve && oe.curve == curve && Overlay::dart_end(dd) == 0) d = dd;
      }
      SURFCURVE_CHECK(d >= 0, "LoopError", "loop is broken");
    }
    if (reverse) std::reverse(points.begin(), points.end());
    auto host_edge = [&](int p) {
      for (int dd : o_.rotation(p))
        if (o_.edge(Overlay::dart_edge(dd)).kind == EdgeKind::Metric) return o_.edge(Overlay::dart_edge(dd)).ancestor;
      return -1;
    };
    // index of each point among this loop's points on the same edge
    std::vector<std::pair<int, int>> keyed;
    for (int p : points) keyed.push_back({host_edge(p), rank[p]});
    std::vector<CrossingRecord> rec;
    for (std::size_t i = 0; i < points.size(); ++i) {
      int p = points[i];
      CrossingRecord r;
      r.edge = keyed[i].first;
      for (const auto& k : keyed)
        if (k.first == r.edge && k.second < keyed[i].second) ++r.index;
      int from = from_side_[p];
      if (reverse) from = x_.partner_side(from);
      r.from_side = from == x_.edge_sides(r.edge).first ? 0 : 1;
      r.face = x_.side_face(x_.partner_side(from));
      rec.push_back(r);
    }
    return rec;
  }

  bool exported_cut_is_disk() const {
    std::vector<int> id;
    SurfaceMap om = o_.to_map(std::vector<Rational>(o_.num_edge_slots(), Rational(1)), &id);
    std::vector<int> curve_edges;
    for (int e = 0; e < o_.num_edge_slots(); ++e)
      if (o_.edge(e).alive && o_.edge(e).kind == EdgeKind::Curve) curve_edges.push_back(id[e]);
    CutResult r = cut_along_edges(om, curve_edges);
    return r.components == 1 && r.boundaries() == 1 && r.map.euler_characteristic() == 1;
  }

  const SurfaceMap& x_;
  Overlay o_;
  int base_face_ = 0;
  int b_ = -1;
  int hint_ = -1;  // a corner of the base face, used while b is isolated
  std::vector<int> from_side_;  // per crossing point: host side the curve arrives from
};

inline LoopSystem build_normal_loops(const SurfaceMap& host, int base_face, LoopKind kind) {
  if (host.num_components() != 1) throw input_error("DisconnectedSurface", "loops need a connected surface");
  if (base_face < 0 || base_face >= host.num_faces()) throw input_error("NoSuchFace", "basepoint face out of range");
  LoopBuilder lb(host, base_face);
  lb.draw_initial_system();
  lb.normalize();
  return lb.finish(kind);
}

}  // namespace detail

// Canonical system a1 b1 a1' b1' ... on an orientable surface.
inline LoopSystem canonical_loops_orientable(const SurfaceMap& host, int base_face = 0) {
  if (!host.orientable()) throw input_error("NotOrientable", "canonical loops need an orientable surface");
  return detail::build_normal_loops(host, base_face, LoopKind::Canonical);
}

// Standard system z z a1 b1 a1' b1' ... (odd genus) or y w y' w a1 b1 ...
// (even genus) on a non-orientable surface.
inline LoopSystem standard_loops(const SurfaceMap& host, int base_face = 0) {
  if (host.orientable()) throw input_error("SurfaceOrientable", "standard loops need a non-orientable surface");
  return detail::build_normal_loops(host, base_face, LoopKind::Standard);
}

}  // namespace surfcurve
