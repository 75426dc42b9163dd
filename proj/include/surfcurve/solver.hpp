#pragma once

// Shortest closed curves with a prescribed mod-2 homology constraint.
//
// A closed walk c in the graph G qualifies when ρ(σ(c, L)) lies in the target
// set A.  Lifting to the cover given by α(e) = ρ(σ(e, L)), such walks through a
// vertex u are exactly the paths from (u, 0) to (u, a), a ∈ A.  Every walk with
// ρσ ≠ 0 is non-contractible and therefore passes through a vertex of one of
// the hitting paths, so it suffices to try those vertices as starting points.
//
// For a fixed start u the search uses the deck symmetry of the cover: the
// distance from (u, a) to (v, ν) equals the distance from (u, 0) to
// (v, ν + a).  A shortest path of length ℓ from (u, 0) to (u, a) has an edge
// x–y with d(x) ≤ ℓ/2 and d(y + a) ≤ ℓ/2, so one Dijkstra run from (u, 0)
// stopped at half the best length found so far finds it.

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "surfcurve/constructions.hpp"
#include "surfcurve/cover.hpp"
#include "surfcurve/curve.hpp"
#include "surfcurve/loops.hpp"
#include "surfcurve/z2.hpp"

namespace surfcurve {

enum class Goal { Orienting, NonorOneSided, NonorTwoSided, OneSidedAny, Custom };

inline std::string goal_name(Goal g) {
  switch (g) {
    case Goal::Orienting: return "orienting";
    case Goal::NonorOneSided: return "nonor1";
    case Goal::NonorTwoSided: return "nonor2";
    case Goal::OneSidedAny: return "onesided";
    case Goal::Custom: return "custom";
  }
  return "";
}

inline Goal parse_goal(const std::string& s) {
  if (s == "orienting") return Goal::Orienting;
  if (s == "nonor1" || s == "nonor-1sided") return Goal::NonorOneSided;
  if (s == "nonor2" || s == "nonor-2sided") return Goal::NonorTwoSided;
  if (s == "onesided" || s == "onesided-any") return Goal::OneSidedAny;
  throw input_error("UnknownGoal", "unknown goal '" + s + "'");
}

// Whether a curve of class c meets the goal.
inline bool goal_accepts(Goal goal, const CurveClass& c) {
  switch (goal) {
    case Goal::Orienting: return c.kind == CurveKind::NonseparatingOrienting;
    case Goal::NonorOneSided: return c.kind == CurveKind::NonseparatingNonorienting && c.one_sided;
    case Goal::NonorTwoSided: return c.kind == CurveKind::NonseparatingNonorienting && !c.one_sided;
    case Goal::OneSidedAny: return c.one_sided;
    case Goal::Custom: return true;
  }
  return false;
}

// Throws InfeasibleGoal when no curve of the requested kind exists on a
// non-orientable surface of Euler genus g.
inline void check_feasible(Goal goal, int g, bool orientable) {
  if (orientable) throw input_error("SurfaceOrientable", "the goals are defined on non-orientable surfaces");
  if (goal == Goal::NonorOneSided && g < 2) throw infeasible("one-sided non-orienting curves need genus at least 2");
  if (goal == Goal::NonorTwoSided && g < 3) throw infeasible("two-sided non-orienting curves need genus at least 3");
}

// The (k, ρ, A) instances for a goal, with ρ acting on canonical signatures.
// Row 0 "sum" is the oddity parity, row c_i picks loop i.
inline std::vector<RhoMap> expand_goal(Goal goal, int g) {
  auto sum_row = [&](Z2Matrix& m, int r) {
    for (int c = 0; c < g; ++c) m.set(r, c, true);
  };
  std::vector<RhoMap> out;
  switch (goal) {
    case Goal::Orienting: {
      Z2Matrix m(g, g);
      for (int i = 0; i < g; ++i) m.set(i, i, true);
      out.push_back({m, {low_mask(g)}});
      break;
    }
    case Goal::OneSidedAny: {
      Z2Matrix m(1, g);
      sum_row(m, 0);
      out.push_back({m, {1}});
      break;
    }
    case Goal::NonorOneSided:
      if (g % 2 == 0) {
        Z2Matrix m(1, g);
        sum_row(m, 0);
        out.push_back({m, {1}});
      } else {
        for (int i = 0; i < g; ++i) {
          Z2Matrix m(2, g);
          sum_row(m, 0);
          m.set(1, i, true);
          out.push_back({m, {0b01}});  // odd oddity, loop i crossed evenly
        }
      }
      break;
    case Goal::NonorTwoSided:
      if (g % 2 == 1) {
        for (int i = 0; i < g; ++i) {
          Z2Matrix m(2, g);
          sum_row(m, 0);
          m.set(1, i, true);
          out.push_back({m, {0b10}});  // even oddity, loop i crossed oddly
        }
      } else {
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < g; ++j) {
            if (i == j) continue;
            Z2Matrix m(3, g);
            sum_row(m, 0);
            m.set(1, i, true);
            m.set(2, j, true);
            out.push_back({m, {0b100}});  // even oddity, i even, j odd
          }
      }
      break;
    case Goal::Custom: break;
  }
  return out;
}

struct ConstrainedWalk {
  ClosedWalk walk;
  Rational length;
  int source = -1;       // starting vertex
  int source_rank = -1;  // position of the start among the hitting-path vertices
  Bits label = 0;        // the element of A reached
};

namespace detail {

struct StepKey {
  std::vector<std::pair<int, int>> seq;
  bool operator<(const StepKey& o) const { return seq < o.seq; }
};

inline StepKey step_key(const ClosedWalk& w) {
  StepKey k;
  for (const auto& s : w.steps) k.seq.push_back({s.edge, s.dir});
  return k;
}

}  // namespace detail

// Start vertices in tie-break order: first hitting path containing the
// vertex, then vertex id.
inline std::vector<int> hitting_sources(const SurfaceMap& g) {
  HittingPaths hp = hitting_paths(g);
  std::vector<int> first(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(hp.paths.size()); ++i)
    for (int v : hp.paths[i])
      if (first[v] < 0) first[v] = i;
  std::vector<int> src;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (first[v] >= 0) src.push_back(v);
  std::stable_sort(src.begin(), src.end(), [&](int a, int b) { return first[a] < first[b]; });
  return src;
}

// Shortest closed walk c in g with α-voltage in `targets`, where α is an edge
// labelling satisfying the Kirchhoff law.  Returns nothing when no such walk
// exists.
inline std::optional<ConstrainedWalk> shortest_voltage_walk(const SurfaceMap& g, const EdgeLabeling& alpha,
                                                            const std::vector<Bits>& targets,
                                                            const std::vector<int>& sources,
                                                            std::optional<Rational> max_length = std::nullopt) {
  check_kirchhoff(g, alpha);
  for (Bits a : targets)
    if (a == 0) return ConstrainedWalk{ClosedWalk{0, {}}, Rational(0), 0, 0, 0};
  if (targets.empty()) return std::nullopt;

  const int k = alpha.k;
  const int nv = g.num_vertices();
  ScaledWeights sw = scale_weights(g.weights());
  struct Arc {
    int edge, dir, to;
    Bits shift;
    std::int64_t w;
  };
  std::vector<std::vector<Arc>> adj(nv);
  for (int e = 0; e < g.num_edges(); ++e) {
    int u = g.edge_tail(e), v = g.edge_head(e);
    adj[u].push_back({e, 1, v, alpha.alpha[e], sw.value[e]});
    adj[v].push_back({e, -1, u, alpha.alpha[e], sw.value[e]});
  }

  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t nstate = static_cast<std::size_t>(nv) << k;
  std::vector<std::int64_t> dist(nstate, inf);
  std::vector<int> parent_arc(nstate, -1);  // index into adj of the predecessor's vertex
  std::vector<int> parent_state(nstate, -1);
  std::vector<char> settled(nstate, 0);
  std::vector<int> touched;

  std::int64_t best = inf;
  if (max_length) {
    Rational x = *max_length * Rational(sw.denominator);
    if (x < Rational(0)) return std::nullopt;
    best = x.numerator() / x.denominator();
  }
  std::optional<ConstrainedWalk> result;
  detail::StepKey best_key;

  auto state = [&](int v, Bits nu) { return static_cast<int>((static_cast<std::size_t>(v) << k) | nu); };
  auto path_steps = [&](int s) {  // base steps from the source to state s
    std::vector<WalkStep> steps;
    while (parent_state[s] >= 0) {
      int p = parent_state[s];
      const Arc& a = adj[p >> k][parent_arc[s]];
      steps.push_back({a.edge, a.dir});
      s = p;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  for (int rank = 0; rank < static_cast<int>(sources.size()); ++rank) {
    int u = sources[rank];
    for (int s : touched) dist[s] = inf, parent_state[s] = -1, parent_arc[s] = -1, settled[s] = 0;
    touched.clear();
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    int s0 = state(u, 0);
    dist[s0] = 0;
    touched.push_back(s0);
    pq.push({0, s0});
    while (!pq.empty()) {
      auto [d, s] = pq.top();
      pq.pop();
      if (settled[s] || d != dist[s]) continue;
      if (2 * d > best) break;
      settled[s] = 1;
      int v = s >> k;
      Bits nu = static_cast<Bits>(s) & low_mask(k);
      for (int ai = 0; ai < static_cast<int>(adj[v].size()); ++ai) {
        const Arc& a = adj[v][ai];
        Bits nu2 = nu ^ a.shift;
        // close a walk through this arc with the half already settled on the far side
        for (Bits t : targets) {
          int z = state(a.to, nu2 ^ t);
          if (!settled[z]) continue;
          std::int64_t cand = d + a.w + dist[z];
          if (cand > best) continue;
          ConstrainedWalk cw;
          cw.walk.start = u;
          cw.walk.steps = path_steps(s);
          cw.walk.steps.push_back({a.edge, a.dir});
          auto back = path_steps(z);
          for (auto it = back.rbegin(); it != back.rend(); ++it) cw.walk.steps.push_back({it->edge, -it->dir});
          cw.length = sw.to_rational(cand);
          cw.source = u;
          cw.source_rank = rank;
          cw.label = t;
          detail::StepKey key = detail::step_key(cw.walk);
          bool better = !result || cand < best || (result->source_rank == rank && key < best_key);
          if (better) {
            best = cand;
            best_key = std::move(key);
            result = std::move(cw);
          }
        }
        int s2 = state(a.to, nu2);
        if (settled[s2]) continue;
        std::int64_t nd = d + a.w;
        if (nd < dist[s2]) {
          if (dist[s2] == inf) touched.push_back(s2);
          dist[s2] = nd;
          parent_state[s2] = s;
          parent_arc[s2] = ai;
          pq.push({nd, s2});
        }
      }
    }
  }
  return result;
}

// Shortest closed walk in the combinatorial surface g whose signature with
// respect to `loops` is mapped into the targets of rho.
inline std::optional<ConstrainedWalk> shortest_constrained_walk(const SurfaceMap& g, const LoopSystem& loops,
                                                                const RhoMap& rho) {
  EdgeLabeling alpha = labeling_from_loops(g, loops, rho);
  return shortest_voltage_walk(g, alpha, rho.targets, hitting_sources(g));
}

struct SolveResult {
  Goal goal = Goal::Custom;
  CurveDrawing curve;  // drawn against the input map
  ClosedWalk walk;     // in the dual graph
  Rational length;
  CurveClass cls;
  int genus = 0;
  Bits standard_signature = 0;
  Bits canonical_signature = 0;
  int multiplicity = 0;
  int instance = -1;
  int instances = 0;
};

// Builds the simple curve from the winning walk and fills in the report.
inline SolveResult realize_walk(const SurfaceMap& host, const SurfaceMap& g, const LoopSystem& std_loops,
                                const ConstrainedWalk& cw) {
  SolveResult r;
  r.genus = std_loops.genus;
  r.walk = cw.walk;
  r.length = cw.length;
  if (cw.walk.trivial()) {
    r.curve.count.assign(host.num_edges(), 0);
    r.curve.chords.assign(host.num_faces(), {});
    r.curve.trivial = true;
    r.cls = CurveClass{};
    return r;
  }
  std::vector<int> mu = mu_from_walk(g.num_edges(), cw.walk);
  r.curve = merge_to_simple_cycle(host, mu);
  SURFCURVE_CHECK(curve_length(host, r.curve) == cw.length, "SolverError", "curve is shorter than the optimal walk");
  r.multiplicity = multiplicity(r.curve);
  r.standard_signature = curve_signature(std_loops.parity, r.curve);
  r.canonical_signature = signature_change_matrix(r.genus).apply(r.standard_signature);
  r.cls = classify_by_cutting(host, r.curve);
  return r;
}

// Pipeline for one (ρ, A) on canonical signatures: standard loops in the dual
// graph, ρ composed with the change of basis, constrained walk, simple curve.
inline SolveResult shortest_constrained_curve(const SurfaceMap& host, const RhoMap& rho) {
  if (host.orientable()) throw input_error("SurfaceOrientable", "standard loops need a non-orientable surface");
  SurfaceMap g = dual(host).map;
  LoopSystem loops = standard_loops(g);
  RhoMap rho2 = compose_rho(rho, signature_change_matrix(loops.genus));
  auto cw = shortest_constrained_walk(g, loops, rho2);
  if (!cw) throw infeasible("no closed curve meets the constraint");
  SolveResult r = realize_walk(host, g, loops, *cw);
  r.instance = 0;
  r.instances = 1;
  return r;
}

// With max_length set, only curves of at most that length are considered and
// nothing is returned when there are none.
inline std::optional<SolveResult> solve_bounded(const SurfaceMap& host, Goal goal,
                                                std::optional<Rational> max_length) {
  if (host.num_components() != 1) throw input_error("DisconnectedSurface", "the surface must be connected");
  const int genus = host.euler_genus();
  check_feasible(goal, genus, host.orientable());
  SurfaceMap g = dual(host).map;
  LoopSystem loops = standard_loops(g);
  Z2Matrix phi = signature_change_matrix(genus);
  std::vector<int> sources = hitting_sources(g);
  std::vector<RhoMap> inst = expand_goal(goal, genus);
  std::optional<ConstrainedWalk> best;
  int best_i = -1;
  for (int i = 0; i < static_cast<int>(inst.size()); ++i) {
    RhoMap rho2 = compose_rho(inst[i], phi);
    EdgeLabeling alpha = labeling_from_loops(g, loops, rho2);
    std::optional<Rational> bound = best ? std::optional<Rational>(best->length) : max_length;
    auto cw = shortest_voltage_walk(g, alpha, rho2.targets, sources, bound);
    if (cw && (!best || cw->length < best->length)) {
      best = cw;
      best_i = i;
    }
  }
  if (!best) {
    if (max_length) return std::nullopt;
    throw infeasible("no closed curve of kind " + goal_name(goal));
  }
  SolveResult r = realize_walk(host, g, loops, *best);
  r.goal = goal;
  r.instance = best_i;
  r.instances = static_cast<int>(inst.size());
  SURFCURVE_CHECK(is_simple(host, r.curve), "SolverError", "output curve is not simple");
  SURFCURVE_CHECK(r.multiplicity <= 2, "SolverError", "output curve has multiplicity above two");
  SURFCURVE_CHECK(goal_accepts(goal, r.cls), "SolverError", "output curve does not have the requested kind");
  SURFCURVE_CHECK(goal_accepts(goal, classify_from_signature({r.canonical_signature, genus, LoopKind::Canonical}, genus)),
                  "SolverError", "signature and cutting disagree on the curve kind");
  return r;
}

inline SolveResult solve(const SurfaceMap& host, Goal goal) { return *solve_bounded(host, goal, std::nullopt); }

}  // namespace surfcurve
