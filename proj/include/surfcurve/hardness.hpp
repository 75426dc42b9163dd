#pragma once

// Grid graphs and the weighted surfaces built from them, on which a short
// orienting curve exists exactly when the grid graph is Hamiltonian.
//
// Every grid vertex p is replaced by a ring of eight vertices v1..v8 whose
// inside is a Möbius band made of a 4x4 square grid: band vertex (x, y),
// 0 <= x, y <= 4, with the column x = 4 glued to x = 0 upside down,
// (4, y) ~ (0, 4 - y).  Its boundary runs along the top row from v1 = (0,4)
// to v5 = (4,4) ~ (0,0) and back along the bottom row to (4,0) ~ v1.  The
// ring sits around p with v1 at north, v3 west, v5 south and v7 east; these
// four are the ports where the unit-weight grid edges attach.  Band and ring
// edges weigh epsilon.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "surfcurve/constructions.hpp"
#include "surfcurve/curve.hpp"
#include "surfcurve/errors.hpp"
#include "surfcurve/rational.hpp"
#include "surfcurve/solver.hpp"
#include "surfcurve/surface_map.hpp"

namespace surfcurve {

struct GridGraph {
  std::vector<std::array<int, 2>> points;

  int size() const { return static_cast<int>(points.size()); }
  int index_of(int x, int y) const {
    for (int i = 0; i < size(); ++i)
      if (points[i][0] == x && points[i][1] == y) return i;
    return -1;
  }
  // induced unit-distance edges (i < j)
  std::vector<std::array<int, 2>> edges() const {
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (std::abs(points[i][0] - points[j][0]) + std::abs(points[i][1] - points[j][1]) == 1) out.push_back({i, j});
    return out;
  }
  bool connected() const {
    if (points.empty()) return false;
    std::vector<int> parent(size());
    for (int i = 0; i < size(); ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (auto [a, b] : edges()) parent[find(a)] = find(b);
    for (int i = 1; i < size(); ++i)
      if (find(i) != find(0)) return false;
    return true;
  }
};

// One "x y" pair per line; blank lines and '#' comments are skipped.
inline GridGraph parse_grid(const std::string& text) {
  GridGraph g;
  std::set<std::array<int, 2>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int x, y;
    if (!(ls >> x)) continue;
    std::string rest;
    if (!(ls >> y) || (ls >> rest)) throw input_error("ParseError", "line " + std::to_string(lineno) + ": expected 'x y'");
    if (!seen.insert({x, y}).second)
      throw input_error("ParseError", "line " + std::to_string(lineno) + ": repeated point");
    g.points.push_back({x, y});
  }
  return g;
}

inline std::string write_grid(const GridGraph& g) {
  std::string s;
  for (auto [x, y] : g.points) s += std::to_string(x) + " " + std::to_string(y) + "\n";
  return s;
}

struct HardnessInstance {
  SurfaceMap map;  // the weighted graph G' with its faces
  int n = 0;
  Rational epsilon;
  Rational threshold;  // n + 1/2
  std::vector<std::array<int, 8>> ring_edges;  // per grid vertex, edge v_i v_{i+1}
  std::vector<std::vector<int>> band_edges;    // per grid vertex, every epsilon edge of its band
  std::vector<int> grid_edge;                  // per edge of GridGraph::edges()
  // walk-building helpers: abstract vertex ids to map edges
  std::map<std::pair<int, int>, std::pair<int, int>> edge_by_ends;  // (a, b) -> (edge, dir)
};

inline Rational default_epsilon(int n) { return Rational(1, 16 * static_cast<std::int64_t>(n)); }

namespace detail {

constexpr int kBandSide = 5;

// canonical band vertex id inside block p after the seam identification
inline int band_vertex(int p, int x, int y) {
  if (x == kBandSide - 1) x = 0, y = kBandSide - 1 - y;
  return p * kBandSide * kBandSide + x * kBandSide + y;
}

// ring position i (0 = v1) in band coordinates
inline std::array<int, 2> ring_coords(int i) {
  static const std::array<std::array<int, 2>, 8> c{{{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 0}, {1, 0}, {2, 0}, {3, 0}}};
  return c[i];
}
inline int ring_vertex(int p, int i) { return band_vertex(p, ring_coords(i)[0], ring_coords(i)[1]); }

enum Port { North = 0, West = 2, South = 4, East = 6 };

// Band paths between ports, all running from the top row to the bottom row
// of the rectangle without crossing the seam, so each crosses the band's
// core once.  Keys are (from port, to port) with from < to.
inline const std::map<std::pair<int, int>, std::vector<std::array<int, 2>>>& port_paths() {
  static const std::map<std::pair<int, int>, std::vector<std::array<int, 2>>> paths{
      {{North, West}, {{4, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {2, 4}}},
      {{North, South}, {{0, 4}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {1, 0}, {0, 0}}},
      {{North, East}, {{0, 4}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {1, 0}, {2, 0}}},
      {{West, South}, {{2, 4}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {1, 0}, {0, 0}}},
      {{West, East}, {{2, 4}, {2, 3}, {2, 2}, {2, 1}, {2, 0}}},
      {{South, East}, {{4, 4}, {3, 4}, {3, 3}, {3, 2}, {3, 1}, {3, 0}, {2, 0}}},
  };
  return paths;
}

}  // namespace detail

inline HardnessInstance grid_to_surface(const GridGraph& gr, std::optional<Rational> eps = std::nullopt) {
  const int n = gr.size();
  if (n == 0 || !gr.connected()) throw input_error("DisconnectedGrid", "the grid graph must be non-empty and connected");
  Rational e = eps ? *eps : default_epsilon(n);
  if (e <= Rational(0)) throw input_error("InvalidWeight", "epsilon must be positive");
  if (e >= Rational(1, 12 * static_cast<std::int64_t>(n)))
    throw input_error("EpsilonTooLarge", "epsilon must be below 1/(12n)");

  HardnessInstance inst;
  inst.n = n;
  inst.epsilon = e;
  inst.threshold = Rational(n) + Rational(1, 2);
  auto gedges = gr.edges();

  // faces as cycles of abstract vertices
  std::vector<std::vector<int>> cycles;

  // planar part: rings plus grid edges, traced with a rotation system from
  // straight-line coordinates
  const int nv = n * detail::kBandSide * detail::kBandSide;
  std::vector<std::array<double, 2>> pos(nv, {0, 0});
  std::vector<std::vector<int>> nbr(nv);
  auto link = [&](int a, int b) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  };
  const double pi = std::acos(-1.0);
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < 8; ++i) {
      double ang = pi / 2 + i * pi / 4;
      pos[detail::ring_vertex(p, i)] = {10.0 * gr.points[p][0] + 2 * std::cos(ang),
                                        10.0 * gr.points[p][1] + 2 * std::sin(ang)};
      link(detail::ring_vertex(p, i), detail::ring_vertex(p, (i + 1) % 8));
    }
  std::set<std::pair<int, int>> unit;
  for (auto [a, b] : gedges) {
    int dx = gr.points[b][0] - gr.points[a][0], dy = gr.points[b][1] - gr.points[a][1];
    int pa, pb;
    if (dx == 1) pa = detail::East, pb = detail::West;
    else if (dx == -1) pa = detail::West, pb = detail::East;
    else if (dy == 1) pa = detail::North, pb = detail::South;
    else pa = detail::South, pb = detail::North;
    int u = detail::ring_vertex(a, pa), v = detail::ring_vertex(b, pb);
    link(u, v);
    unit.insert({std::min(u, v), std::max(u, v)});
  }
  for (int v = 0; v < nv; ++v)
    std::sort(nbr[v].begin(), nbr[v].end(), [&](int a, int b) {
      return std::atan2(pos[a][1] - pos[v][1], pos[a][0] - pos[v][0]) <
             std::atan2(pos[b][1] - pos[v][1], pos[b][0] - pos[v][0]);
    });
  std::set<std::pair<int, int>> used;
  std::set<std::vector<int>> ring_insides;
  for (int p = 0; p < n; ++p) {
    std::vector<int> c;
    for (int i = 0; i < 8; ++i) c.push_back(detail::ring_vertex(p, i));
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    ring_insides.insert(c);
  }
  for (int v = 0; v < nv; ++v)
    for (int w : nbr[v]) {
      if (used.count({v, w})) continue;
      // the face on the left of v -> w: at each vertex turn to the neighbour
      // just clockwise of where we came from
      std::vector<int> cyc;
      int a = v, b = w;
      while (!used.count({a, b})) {
        used.insert({a, b});
        cyc.push_back(a);
        const auto& nb = nbr[b];
        int k = static_cast<int>(std::find(nb.begin(), nb.end(), a) - nb.begin());
        int c = nb[(k + static_cast<int>(nb.size()) - 1) % nb.size()];
        a = b;
        b = c;
      }
      auto lowest = std::min_element(cyc.begin(), cyc.end());
      std::vector<int> rot(lowest, cyc.end());
      rot.insert(rot.end(), cyc.begin(), lowest);
      if (ring_insides.count(rot)) continue;  // replaced by the band
      cycles.push_back(std::move(cyc));
    }
  // Möbius bands
  for (int p = 0; p < n; ++p)
    for (int x = 0; x + 1 < detail::kBandSide; ++x)
      for (int y = 0; y + 1 < detail::kBandSide; ++y)
        cycles.push_back({detail::band_vertex(p, x, y), detail::band_vertex(p, x + 1, y),
                          detail::band_vertex(p, x + 1, y + 1), detail::band_vertex(p, x, y + 1)});

  // edges from consecutive cycle vertices
  std::vector<FaceWord> faces;
  std::vector<Rational> weights;
  std::vector<int> owner;  // grid vertex of an epsilon edge, -1 for unit edges
  for (const auto& cyc : cycles) {
    FaceWord w;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto it = inst.edge_by_ends.find({a, b});
      if (it == inst.edge_by_ends.end()) {
        int id = static_cast<int>(weights.size());
        inst.edge_by_ends[{a, b}] = {id, 1};
        inst.edge_by_ends[{b, a}] = {id, -1};
        bool is_unit = unit.count({std::min(a, b), std::max(a, b)}) > 0;
        weights.push_back(is_unit ? Rational(1) : e);
        owner.push_back(is_unit ? -1 : a / (detail::kBandSide * detail::kBandSide));
        it = inst.edge_by_ends.find({a, b});
      }
      w.push_back({it->second.first, it->second.second});
    }
    faces.push_back(std::move(w));
  }
  inst.map = SurfaceMap(std::move(faces), std::move(weights));

  inst.ring_edges.resize(n);
  inst.band_edges.assign(n, {});
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < 8; ++i)
      inst.ring_edges[p][i] = inst.edge_by_ends.at({detail::ring_vertex(p, i), detail::ring_vertex(p, (i + 1) % 8)}).first;
  for (int id = 0; id < static_cast<int>(owner.size()); ++id)
    if (owner[id] >= 0) inst.band_edges[owner[id]].push_back(id);
  for (auto [a, b] : gedges) {
    int dx = gr.points[b][0] - gr.points[a][0], dy = gr.points[b][1] - gr.points[a][1];
    int pa = dx == 1 ? detail::East : dx == -1 ? detail::West : dy == 1 ? detail::North : detail::South;
    int pb = (pa + 4) % 8;
    inst.grid_edge.push_back(inst.edge_by_ends.at({detail::ring_vertex(a, pa), detail::ring_vertex(b, pb)}).first);
  }

  SURFCURVE_CHECK(inst.map.num_components() == 1, "GadgetError", "gadget surface is disconnected");
  SURFCURVE_CHECK(!inst.map.orientable(), "GadgetError", "gadget surface is orientable");
  SURFCURVE_CHECK(inst.map.euler_genus() == n, "GadgetError", "gadget surface has the wrong genus");
  SURFCURVE_CHECK(inst.map.num_edges() == 36 * n + static_cast<int>(gedges.size()), "GadgetError", "edge count");
  return inst;
}

// A Hamiltonian cycle as a vertex order, found by dynamic programming over
// subsets.  Grid graphs with fewer than three vertices have none.
inline std::optional<std::vector<int>> hamiltonian_cycle(const GridGraph& gr) {
  const int n = gr.size();
  if (n < 3) return std::nullopt;
  if (n > 20) throw input_error("GridTooLarge", "Hamiltonicity brute force is limited to 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [a, b] : gr.edges()) adj[a] |= 1u << b, adj[b] |= 1u << a;
  // reach[mask] bit v: a path from 0 through exactly `mask` ends at v
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2)
    for (int v = 0; v < n; ++v)
      if (reach[mask] >> v & 1)
        for (std::uint32_t nb = adj[v] & ~mask; nb; nb &= nb - 1) {
          int w = std::countr_zero(nb);
          reach[mask | 1u << w] |= 1u << w;
        }
  std::uint32_t full = (1u << n) - 1;
  int last = -1;
  for (int v = 1; v < n; ++v)
    if ((reach[full] >> v & 1) && (adj[v] & 1)) {
      last = v;
      break;
    }
  if (last < 0) return std::nullopt;
  std::vector<int> order{last};
  std::uint32_t mask = full;
  int v = last;
  while (v != 0) {
    std::uint32_t prev = mask & ~(1u << v);
    int u = -1;
    for (std::uint32_t c = adj[v] & prev; c; c &= c - 1) {
      int w = std::countr_zero(c);
      if (reach[prev] >> w & 1) {
        u = w;
        break;
      }
    }
    SURFCURVE_CHECK(u >= 0, "HamiltonError", "path reconstruction failed");
    mask = prev;
    v = u;
    order.push_back(v);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// The closed walk in G' following a Hamiltonian cycle: unit grid edges
// between rings and, inside every band, a port-to-port path through the
// crosscap.
inline ClosedWalk hamiltonian_witness(const GridGraph& gr, const HardnessInstance& inst, const std::vector<int>& cyc) {
  const int n = static_cast<int>(cyc.size());
  auto port_towards = [&](int a, int b) {
    int dx = gr.points[b][0] - gr.points[a][0], dy = gr.points[b][1] - gr.points[a][1];
    return dx == 1 ? detail::East : dx == -1 ? detail::West : dy == 1 ? detail::North : detail::South;
  };
  ClosedWalk w;
  auto step = [&](int a, int b) {
    auto [e, dir] = inst.edge_by_ends.at({a, b});
    w.steps.push_back({e, dir});
  };
  for (int i = 0; i < n; ++i) {
    int prev = cyc[(i + n - 1) % n], p = cyc[i], next = cyc[(i + 1) % n];
    int in = port_towards(p, prev), out = port_towards(p, next);
    auto key = std::make_pair(std::min(in, out), std::max(in, out));
    std::vector<std::array<int, 2>> path = detail::port_paths().at(key);
    if (in > out) std::reverse(path.begin(), path.end());
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      step(detail::band_vertex(p, path[k][0], path[k][1]), detail::band_vertex(p, path[k + 1][0], path[k + 1][1]));
    step(detail::ring_vertex(p, out), detail::ring_vertex(next, port_towards(next, p)));
  }
  return w;
}

struct RoundTrip {
  bool hamiltonian = false;
  bool short_curve = false;  // an orienting curve of length <= n + 1/2 exists
  std::optional<Rational> length;  // shortest orienting length when short_curve
  std::optional<Rational> witness_length;
  bool witness_ok = true;  // witness simple, orienting and within n + 6 n eps
};

// Both sides of the equivalence, computed independently.  The curve side runs
// the solver on the dual map, whose dual graph is G'.
inline RoundTrip reduction_roundtrip(const GridGraph& gr, std::optional<Rational> eps = std::nullopt) {
  HardnessInstance inst = grid_to_surface(gr, eps);
  SurfaceMap host = dual(inst.map).map;
  RoundTrip rt;
  auto ham = hamiltonian_cycle(gr);
  rt.hamiltonian = ham.has_value();
  auto sol = solve_bounded(host, Goal::Orienting, inst.threshold);
  rt.short_curve = sol.has_value();
  if (sol) rt.length = sol->length;
  if (ham) {
    ClosedWalk w = hamiltonian_witness(gr, inst, *ham);
    validate_walk(inst.map, w);
    rt.witness_length = walk_length(inst.map, w);
    std::vector<int> mu = mu_from_walk(inst.map.num_edges(), w);
    bool once = std::all_of(mu.begin(), mu.end(), [](int c) { return c <= 1; });
    CurveDrawing d = merge_to_simple_cycle(host, mu);
    CurveClass c = classify_by_cutting(host, d);
    rt.witness_ok = once && c.kind == CurveKind::NonseparatingOrienting &&
                    *rt.witness_length <= Rational(inst.n) + Rational(6 * inst.n) * inst.epsilon;
  }
  return rt;
}

// Connected grid graphs with n points up to translation, each normalised to
// a minimum x and y of zero and sorted.
inline std::vector<GridGraph> all_grid_graphs(int n) {
  using Shape = std::vector<std::array<int, 2>>;
  auto normalize = [](Shape s) {
    int mx = s[0][0], my = s[0][1];
    for (auto& p : s) mx = std::min(mx, p[0]), my = std::min(my, p[1]);
    for (auto& p : s) p[0] -= mx, p[1] -= my;
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<Shape> level{{{0, 0}}};
  for (int k = 1; k < n; ++k) {
    std::set<Shape> next;
    for (const auto& s : level)
      for (const auto& p : s)
        for (auto [dx, dy] : {std::array<int, 2>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          std::array<int, 2> q{p[0] + dx, p[1] + dy};
          if (std::find(s.begin(), s.end(), q) != s.end()) continue;
          Shape t = s;
          t.push_back(q);
          next.insert(normalize(std::move(t)));
        }
    level = std::move(next);
  }
  std::vector<GridGraph> out;
  if (n < 1) return out;
  for (const auto& s : level) out.push_back(GridGraph{s});
  return out;
}

}  // namespace surfcurve
