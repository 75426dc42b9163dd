#pragma once

// Orienting curves and simple curves with prescribed crossing numbers.

#include <numeric>
#include <vector>

#include "surfcurve/curve.hpp"
#include "surfcurve/surface_map.hpp"

namespace surfcurve {

struct InconsistentEdgeSet {
  std::vector<int> face_orientation;  // +1 keeps the face word, -1 reverses it
  std::vector<int> edges;             // sorted
  std::vector<char> member;           // per edge
};

// Orients the faces along a spanning tree of the face adjacency so that tree
// edges are consistent; the inconsistent edges are those whose two sides are
// then traversed in the same direction.  On an orientable map this yields the
// empty set.
inline InconsistentEdgeSet inconsistent_edges(const SurfaceMap& g) {
  InconsistentEdgeSet r;
  r.face_orientation.assign(g.num_faces(), 0);
  std::vector<int> queue;
  for (int root = 0; root < g.num_faces(); ++root) {
    if (r.face_orientation[root]) continue;
    r.face_orientation[root] = 1;
    queue.assign(1, root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int f = queue[qi];
      for (int i = 0; i < static_cast<int>(g.face(f).size()); ++i) {
        int s = g.side_index(f, i);
        int t = g.partner_side(s);
        int h = g.side_face(t);
        if (r.face_orientation[h]) continue;
        r.face_orientation[h] = -r.face_orientation[f] * g.side(s).sign * g.side(t).sign;
        queue.push_back(h);
      }
    }
  }
  r.member.assign(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [s1, s2] = g.edge_sides(e);
    int d1 = r.face_orientation[g.side_face(s1)] * g.side(s1).sign;
    int d2 = r.face_orientation[g.side_face(s2)] * g.side(s2).sign;
    if (d1 == d2) {
      r.member[e] = 1;
      r.edges.push_back(e);
    }
  }
  return r;
}

namespace detail {

// Regions of a disk cut by a non-crossing matching of np boundary points;
// each region lists the chords (by their smaller endpoint) on its boundary.
inline std::vector<std::vector<int>> chord_regions(int np, const std::vector<int>& mate) {
  std::vector<std::vector<int>> regions;
  std::vector<char> used(np, 0);
  for (int q0 = 0; q0 < np; ++q0) {
    if (used[q0]) continue;
    std::vector<int> chords;
    int q = q0;
    while (!used[q]) {
      used[q] = 1;
      int a = (q + 1) % np, b = mate[a];
      chords.push_back(std::min(a, b));
      q = b;
    }
    regions.push_back(std::move(chords));
  }
  return regions;
}

}  // namespace detail

// Draws one simple closed curve crossing every edge e of `host` exactly mu[e]
// times.  Needs an even number of crossing points on every face and a
// connected support in the dual graph.
//
// Start from the matching that pairs consecutive points in every face, then
// repeatedly pick two chords of different components that bound a common
// region and reconnect their endpoints the other way round.  Such a swap
// keeps the chords disjoint and joins the two components; connectivity of
// the support guarantees a swap exists while several components remain.
inline CurveDrawing merge_to_simple_cycle(const SurfaceMap& host, const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != host.num_edges()) throw input_error("DimensionMismatch", "mu has wrong size");
  CurveDrawing d;
  d.count = mu;
  d.chords.assign(host.num_faces(), {});
  int total = 0;
  for (int e = 0; e < host.num_edges(); ++e) {
    if (mu[e] < 0) throw input_error("DimensionMismatch", "negative multiplicity");
    total += mu[e];
  }
  if (total == 0) throw input_error("DisconnectedSupport", "empty support");

  std::vector<std::vector<BoundaryPoint>> pts(host.num_faces());
  for (int f = 0; f < host.num_faces(); ++f) {
    pts[f] = face_points(host, mu, f);
    if (pts[f].size() % 2) throw input_error("OddVertexDegree", "face " + std::to_string(f) + " has odd crossing degree");
  }
  // support connectivity in the dual graph (faces joined by crossed edges)
  {
    std::vector<int> parent(host.num_faces());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int e = 0; e < host.num_edges(); ++e)
      if (mu[e] > 0) {
        auto [s1, s2] = host.edge_sides(e);
        parent[find(host.side_face(s1))] = find(host.side_face(s2));
      }
    int root = -1;
    for (int f = 0; f < host.num_faces(); ++f) {
      if (pts[f].empty()) continue;
      if (root < 0) root = find(f);
      else if (find(f) != root) throw input_error("DisconnectedSupport", "support of mu is disconnected");
    }
  }

  // global point ids and union-find over curve components
  std::vector<int> offset(host.num_edges() + 1, 0);
  for (int e = 0; e < host.num_edges(); ++e) offset[e + 1] = offset[e] + mu[e];
  std::vector<int> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto gid = [&](const BoundaryPoint& p) { return offset[p.edge] + p.index; };
  std::vector<std::vector<int>> mate(host.num_faces());
  for (int f = 0; f < host.num_faces(); ++f) {
    int np = static_cast<int>(pts[f].size());
    mate[f].assign(np, -1);
    for (int i = 0; i + 1 < np; i += 2) {
      mate[f][i] = i + 1;
      mate[f][i + 1] = i;
      parent[find(gid(pts[f][i]))] = find(gid(pts[f][i + 1]));
    }
  }
  auto chord_comp = [&](int f, int a) { return find(gid(pts[f][a])); };

  for (bool changed = true; changed;) {
    changed = false;
    for (int f = 0; f < host.num_faces(); ++f) {
      int np = static_cast<int>(pts[f].size());
      if (np < 4) continue;
      for (bool again = true; again;) {
        again = false;
        for (const auto& region : detail::chord_regions(np, mate[f])) {
          for (std::size_t i = 0; i < region.size() && !again; ++i)
            for (std::size_t j = i + 1; j < region.size() && !again; ++j) {
              int a = region[i], b = region[j];
              if (chord_comp(f, a) == chord_comp(f, b)) continue;
              // endpoints in cyclic order a1 a2 b1 b2 as seen from the region
              int a1 = a, a2 = mate[f][a], b1 = b, b2 = mate[f][b];
              // orient each chord so that the other chord lies after its second endpoint
              auto between = [&](int x, int y, int z) {  // is z strictly inside the arc x -> y
                return x < y ? (x < z && z < y) : (z > x || z < y);
              };
              if (between(a1, a2, b1)) std::swap(a1, a2);
              if (between(b1, b2, a1)) std::swap(b1, b2);
              int ca = chord_comp(f, a), cb = chord_comp(f, b);
              mate[f][a2] = b1;
              mate[f][b1] = a2;
              mate[f][b2] = a1;
              mate[f][a1] = b2;
              parent[ca] = cb;
              again = changed = true;
            }
          if (again) break;
        }
      }
    }
  }
  for (int f = 0; f < host.num_faces(); ++f)
    for (int i = 0; i < static_cast<int>(mate[f].size()); ++i)
      if (i < mate[f][i]) d.chords[f].push_back({i, mate[f][i]});
  SURFCURVE_CHECK(is_simple(host, d), "MergeError", "merged curve is not a single simple cycle");
  return d;
}

// An orienting curve against `host`: inconsistent edges are computed on the
// dual map, crossed once; every other edge is crossed twice.
inline CurveDrawing orienting_curve(const SurfaceMap& host) {
  if (host.orientable()) throw input_error("SurfaceOrientable", "no orienting curve on an orientable surface");
  DualMap dm = dual(host);
  InconsistentEdgeSet inc = inconsistent_edges(dm.map);
  std::vector<int> mu(host.num_edges());
  for (int e = 0; e < host.num_edges(); ++e) mu[e] = inc.member[e] ? 1 : 2;
  return merge_to_simple_cycle(host, mu);
}

}  // namespace surfcurve
