#pragma once

// Brute-force ground truth for small surfaces.
//
// A simple closed curve in a cross-metric surface is fixed, up to the moves
// that do not change crossings, by how often it crosses every edge and how
// the crossing points are paired up inside each face.  The enumeration runs
// over crossing vectors mu with mu[e] <= cap and total weight within the
// budget.  For shortest-curve questions one drawing per vector suffices: the
// length only depends on mu, and the topological type of a simple curve only
// depends on its mod-2 homology class, which mu determines.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "surfcurve/constructions.hpp"
#include "surfcurve/curve.hpp"
#include "surfcurve/solver.hpp"

namespace surfcurve {

struct EnumerationBudget {
  Rational max_weight{0};
  int cap = 2;
  int max_crossings = 64;
  long long max_candidates = 10'000'000;
};

struct OracleStats {
  long long candidates = 0;  // crossing vectors examined
  long long realizable = 0;  // of which carry a simple curve
};

namespace detail {

// Depth-first search over crossing vectors.  Edges are visited so that faces
// complete early and parity is checked as soon as the last edge of a face has
// been fixed.  `visit` receives every vector with even face degrees.
class CrossingVectorSearch {
 public:
  CrossingVectorSearch(const SurfaceMap& m, const EnumerationBudget& b) : m_(m), budget_(b) {
    if (b.cap < 1 || b.max_crossings < 1 || b.max_weight < Rational(0))
      throw input_error("InvalidBudget", "budget bounds must be positive");
    sw_ = scale_weights(m.weights());
    limit_ = scaled(b.max_weight);
    // order edges by a BFS over faces
    std::vector<char> seen(m.num_edges(), 0), fseen(m.num_faces(), 0);
    for (int root = 0; root < m.num_faces(); ++root) {
      if (fseen[root]) continue;
      std::vector<int> q{root};
      fseen[root] = 1;
      for (std::size_t qi = 0; qi < q.size(); ++qi)
        for (const auto& s : m.face(q[qi])) {
          if (!seen[s.edge]) seen[s.edge] = 1, order_.push_back(s.edge);
          auto [s1, s2] = m.edge_sides(s.edge);
          for (int t : {s1, s2}) {
            int h = m.side_face(t);
            if (!fseen[h]) fseen[h] = 1, q.push_back(h);
          }
        }
    }
    std::vector<int> pos(m.num_edges());
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) pos[order_[i]] = i;
    closes_.assign(order_.size(), {});
    for (int f = 0; f < m.num_faces(); ++f) {
      int last = -1;
      for (const auto& s : m.face(f)) last = std::max(last, pos[s.edge]);
      if (last >= 0) closes_[last].push_back(f);
    }
    mu_.assign(m.num_edges(), 0);
  }

  std::int64_t scaled(const Rational& r) const {
    Rational x = r * Rational(sw_.denominator);
    return x.numerator() / x.denominator();  // floor for non-negative values
  }
  const ScaledWeights& weights() const { return sw_; }

  // visit(mu, weight) returns the new weight limit (for branch and bound)
  void run(const std::function<std::int64_t(const std::vector<int>&, std::int64_t)>& visit) {
    visit_ = &visit;
    dfs(0, 0, 0);
  }
  long long candidates() const { return candidates_; }

 private:
  void dfs(int i, std::int64_t weight, int crossings) {
    if (i == static_cast<int>(order_.size())) {
      if (++candidates_ > budget_.max_candidates)
        throw input_error("BudgetTooLarge", "more than " + std::to_string(budget_.max_candidates) + " candidates");
      limit_ = std::min(limit_, (*visit_)(mu_, weight));
      return;
    }
    int e = order_[i];
    for (int c = 0; c <= budget_.cap; ++c) {
      std::int64_t w = weight + c * sw_.value[e];
      if (w > limit_ || crossings + c > budget_.max_crossings) break;
      mu_[e] = c;
      bool ok = true;
      for (int f : closes_[i]) {
        int deg = 0;
        for (const auto& s : m_.face(f)) deg += mu_[s.edge];
        if (deg % 2) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(i + 1, w, crossings + c);
    }
    mu_[e] = 0;
  }

  const SurfaceMap& m_;
  EnumerationBudget budget_;
  ScaledWeights sw_;
  std::int64_t limit_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<int>> closes_;  // faces whose last edge is order_[i]
  std::vector<int> mu_;
  long long candidates_ = 0;
  const std::function<std::int64_t(const std::vector<int>&, std::int64_t)>* visit_ = nullptr;
};

inline bool support_connected(const SurfaceMap& m, const std::vector<int>& mu) {
  std::vector<int> parent(m.num_faces());
  for (int f = 0; f < m.num_faces(); ++f) parent[f] = f;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int any = -1;
  for (int e = 0; e < m.num_edges(); ++e)
    if (mu[e] > 0) {
      auto [s1, s2] = m.edge_sides(e);
      parent[find(m.side_face(s1))] = find(m.side_face(s2));
      any = m.side_face(s1);
    }
  if (any < 0) return false;
  for (int e = 0; e < m.num_edges(); ++e)
    if (mu[e] > 0) {
      auto [s1, s2] = m.edge_sides(e);
      if (find(m.side_face(s1)) != find(any)) return false;
    }
  return true;
}

inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int lo, int hi) {
  // perfect non-crossing matchings of the points lo..hi-1
  std::vector<std::vector<std::pair<int, int>>> out;
  if (lo >= hi) {
    out.push_back({});
    return out;
  }
  for (int j = lo + 1; j < hi; j += 2)
    for (const auto& inner : noncrossing_matchings(lo + 1, j))
      for (const auto& outer : noncrossing_matchings(j + 1, hi)) {
        std::vector<std::pair<int, int>> mm{{lo, j}};
        mm.insert(mm.end(), inner.begin(), inner.end());
        mm.insert(mm.end(), outer.begin(), outer.end());
        out.push_back(std::move(mm));
      }
  return out;
}

// Crossing sequence up to rotation and reversal, as a comparable key.
inline std::vector<std::array<int, 4>> canonical_crossings(const SurfaceMap& m, const CurveDrawing& d) {
  auto seq = crossing_sequence(m, d);
  std::vector<std::array<int, 4>> best;
  auto consider = [&](const std::vector<CrossingRecord>& s) {
    int n = static_cast<int>(s.size());
    for (int r = 0; r < std::max(n, 1); ++r) {
      std::vector<std::array<int, 4>> k;
      for (int i = 0; i < n; ++i) {
        const auto& c = s[(i + r) % n];
        k.push_back({c.edge, c.face, c.index, c.from_side});
      }
      if (best.empty() || k < best) best = std::move(k);
    }
  };
  consider(seq);
  // the same curve run backwards: each crossing enters the face on its other side
  std::vector<CrossingRecord> rev;
  int n = static_cast<int>(seq.size());
  for (int i = n - 1; i >= 0; --i) {
    CrossingRecord c = seq[i];
    c.face = seq[(i + n - 1) % n].face;
    c.from_side ^= 1;
    rev.push_back(c);
  }
  if (n) consider(rev);
  return best;
}

}  // namespace detail

// Every simple closed curve within the budget, one per crossing sequence up to
// rotation and reversal.  The trivial curve comes first.
inline std::vector<CurveDrawing> enumerate_simple_curves(const SurfaceMap& m, const EnumerationBudget& budget,
                                                         OracleStats* stats = nullptr) {
  std::vector<CurveDrawing> out;
  std::map<std::vector<std::array<int, 4>>, int> seen;
  detail::CrossingVectorSearch search(m, budget);
  long long realizable = 0;
  search.run([&](const std::vector<int>& mu, std::int64_t) -> std::int64_t {
    const std::int64_t keep = std::numeric_limits<std::int64_t>::max();
    bool empty = std::all_of(mu.begin(), mu.end(), [](int c) { return c == 0; });
    if (empty) {
      CurveDrawing d;
      d.count = mu;
      d.chords.assign(m.num_faces(), {});
      d.trivial = true;
      out.push_back(std::move(d));
      ++realizable;
      return keep;
    }
    if (!detail::support_connected(m, mu)) return keep;
    // all combinations of non-crossing matchings, face by face
    std::vector<std::vector<std::vector<std::pair<int, int>>>> options(m.num_faces());
    long long combos = 1;
    for (int f = 0; f < m.num_faces(); ++f) {
      int np = static_cast<int>(face_points(m, mu, f).size());
      options[f] = detail::noncrossing_matchings(0, np);
      combos *= static_cast<long long>(options[f].size());
      if (combos > budget.max_candidates) throw input_error("BudgetTooLarge", "too many chord diagrams");
    }
    CurveDrawing d;
    d.count = mu;
    d.chords.assign(m.num_faces(), {});
    std::vector<std::size_t> pick(m.num_faces(), 0);
    bool any = false;
    while (true) {
      for (int f = 0; f < m.num_faces(); ++f) d.chords[f] = options[f][pick[f]];
      if (is_simple(m, d)) {
        auto key = detail::canonical_crossings(m, d);
        if (seen.emplace(key, static_cast<int>(out.size())).second) out.push_back(d);
        any = true;
      }
      int f = 0;
      while (f < m.num_faces() && ++pick[f] == options[f].size()) pick[f++] = 0;
      if (f == m.num_faces()) break;
    }
    if (any) ++realizable;
    return keep;
  });
  if (stats) *stats = {search.candidates(), realizable};
  return out;
}

struct OracleResult {
  Rational length;
  CurveDrawing witness;
  CurveClass cls;
  OracleStats stats;
};

// Shortest simple curve of the goal's kind with total weight at most
// budget.max_weight.  The bound shrinks to the best length found so far.
inline OracleResult brute_shortest(const SurfaceMap& m, Goal goal, const EnumerationBudget& budget) {
  if (m.num_components() != 1) throw input_error("DisconnectedSurface", "the surface must be connected");
  check_feasible(goal, m.euler_genus(), m.orientable());
  detail::CrossingVectorSearch search(m, budget);
  std::optional<OracleResult> best;
  std::int64_t best_w = 0;
  long long realizable = 0;
  search.run([&](const std::vector<int>& mu, std::int64_t w) -> std::int64_t {
    const std::int64_t keep = best ? best_w : std::numeric_limits<std::int64_t>::max();
    if (best && w >= best_w) return keep;  // ties keep the first vector found
    if (!detail::support_connected(m, mu)) return keep;  // includes the trivial curve, never a goal
    ++realizable;
    CurveDrawing d = merge_to_simple_cycle(m, mu);
    CurveClass c = classify_by_cutting(m, d);
    if (!goal_accepts(goal, c)) return keep;
    best = OracleResult{search.weights().to_rational(w), std::move(d), c, {}};
    best_w = w;
    return w;
  });
  if (!best) throw infeasible("no curve of kind " + goal_name(goal) + " within the weight budget");
  best->stats = {search.candidates(), realizable};
  return *best;
}

}  // namespace surfcurve
