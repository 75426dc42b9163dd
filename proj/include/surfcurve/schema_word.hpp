#pragma once

// Polygonal schema words and the cut-and-paste calculus used to normalise a
// system of loops.  A word lists the sides of the polygon obtained by cutting
// the surface along the loops; letter ids are loop ids and sign -1 means the
// side is read against the loop's direction.  Corner t of a word is the
// corner just before letter t.
//
// One move draws a diagonal z from corner P to corner Q (P < Q), which splits
// the word into U = W[P..Q) and V = the rest, and glues the two pieces back
// along a letter x that occurs once in each piece.  With U = U1 x U2:
//   x in V as x^-1 (V = V1 x^-1 V2):  U2 z U1 V2 z^-1 V1
//   x in V as x    (V = V1 x V2):     U2 z U1 V1^-1 z V2^-1

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfcurve/errors.hpp"

namespace surfcurve {

struct Letter {
  int id = 0;
  int sign = 1;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

// Opaque block standing for an untouched stretch of a longer word.
constexpr int kRestLetter = -1;

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

inline Word rotate(const Word& w, int i) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  i = ((i % n) + n) % n;
  Word out(w.begin() + i, w.end());
  out.insert(out.end(), w.begin(), w.begin() + i);
  return out;
}

inline std::vector<int> occurrences(const Word& w, int id) {
  std::vector<int> pos;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i].id == id) pos.push_back(i);
  return pos;
}

inline bool twisted(const Word& w, int id) {
  auto p = occurrences(w, id);
  return p.size() == 2 && w[p[0]].sign == w[p[1]].sign;
}

// Number of vertices of the one-face complex described by the word.
inline int word_vertex_count(const Word& w) {
  int n = static_cast<int>(w.size());
  if (n == 0) return 1;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::map<int, std::vector<int>> occ;
  for (int i = 0; i < n; ++i) occ[w[i].id].push_back(i);
  for (auto& [id, p] : occ) {
    if (p.size() != 2) continue;
    auto ends = [&](int i) {
      int a = i, b = (i + 1) % n;
      return w[i].sign > 0 ? std::pair{a, b} : std::pair{b, a};
    };
    auto [t0, h0] = ends(p[0]);
    auto [t1, h1] = ends(p[1]);
    parent[find(t0)] = find(t1);
    parent[find(h0)] = find(h1);
  }
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

struct Move {
  int P = 0, Q = 0;  // corners, P < Q
  int paste = 0;     // letter id glued back
};

inline std::optional<Word> apply_move(const Word& w, const Move& mv, int new_id) {
  int n = static_cast<int>(w.size());
  if (!(0 <= mv.P && mv.P < mv.Q && mv.Q <= n) || mv.Q - mv.P >= n) return std::nullopt;
  Word U(w.begin() + mv.P, w.begin() + mv.Q);
  Word V(w.begin() + mv.Q, w.end());
  V.insert(V.end(), w.begin(), w.begin() + mv.P);
  auto iu = occurrences(U, mv.paste), iv = occurrences(V, mv.paste);
  if (iu.size() != 1 || iv.size() != 1 || mv.paste == kRestLetter) return std::nullopt;
  int s = U[iu[0]].sign, t = V[iv[0]].sign;
  Word U1(U.begin(), U.begin() + iu[0]), U2(U.begin() + iu[0] + 1, U.end());
  Word V1(V.begin(), V.begin() + iv[0]), V2(V.begin() + iv[0] + 1, V.end());
  Word out = U2;
  out.push_back({new_id, 1});
  out.insert(out.end(), U1.begin(), U1.end());
  if (s * t < 0) {
    out.insert(out.end(), V2.begin(), V2.end());
    out.push_back({new_id, -1});
    out.insert(out.end(), V1.begin(), V1.end());
  } else {
    Word a = inverse(V1), b = inverse(V2);
    out.insert(out.end(), a.begin(), a.end());
    out.push_back({new_id, 1});
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

// Relabelling that turns A into B: B = rotate(A or inverse(A), offset) with
// every letter a replaced by map[a] (id, sign flip).
struct WordAlignment {
  int offset = 0;
  bool reflected = false;
  std::map<int, Letter> letter;  // a -> (b, flip)

  int corner(int c, int n) const {
    if (reflected) c = (n - c) % n;
    return ((c - offset) % n + n) % n;
  }
};

inline std::optional<WordAlignment> align_words(const Word& A, const Word& B) {
  if (A.size() != B.size()) return std::nullopt;
  int n = static_cast<int>(A.size());
  for (int refl = 0; refl < 2; ++refl) {
    Word src = refl ? inverse(A) : A;
    for (int o = 0; o < std::max(n, 1); ++o) {
      WordAlignment al{o, refl != 0, {}};
      std::map<int, int> used;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const Letter& a = src[(i + o) % n];
        const Letter& b = B[i];
        if ((a.id == kRestLetter) != (b.id == kRestLetter)) {
          ok = false;
        } else if (a.id == kRestLetter) {
          ok = a.sign == b.sign;
        } else {
          int flip = a.sign * b.sign;
          auto it = al.letter.find(a.id);
          if (it == al.letter.end()) {
            if (used.count(b.id)) ok = false;
            else {
              al.letter[a.id] = {b.id, flip};
              used[b.id] = a.id;
            }
          } else {
            ok = it->second.id == b.id && it->second.sign == flip;
          }
        }
      }
      if (ok) return al;
    }
  }
  return std::nullopt;
}

inline Move transport_move(const Move& mv, const Word& from, const Word& to) {
  auto al = align_words(from, to);
  SURFCURVE_CHECK(al.has_value(), "WordMismatch", "cannot align schema words");
  int n = static_cast<int>(from.size());
  int p = al->corner(mv.P, n), q = al->corner(mv.Q, n);
  // swapping the corners cuts off the complementary half, which yields an
  // equivalent word
  if (p > q) std::swap(p, q);
  return Move{p, q, al->letter.at(mv.paste).id};
}

// Canonical representative up to rotation, reflection and relabelling.
inline Word canonical_word(const Word& w) {
  int n = static_cast<int>(w.size());
  Word best;
  bool have = false;
  for (int refl = 0; refl < 2; ++refl) {
    Word src = refl ? inverse(w) : w;
    for (int o = 0; o < std::max(n, 1); ++o) {
      Word r = rotate(src, o);
      std::map<int, Letter> m;
      Word c;
      for (const auto& l : r) {
        if (l.id == kRestLetter) {
          c.push_back(l);
          continue;
        }
        auto it = m.find(l.id);
        if (it == m.end()) it = m.emplace(l.id, Letter{static_cast<int>(m.size()), l.sign}).first;
        c.push_back({it->second.id, l.sign * it->second.sign});
      }
      if (!have || c < best) best = c, have = true;
    }
  }
  return best;
}

inline Word parse_word(const std::string& s) {
  // tokens: letters a..z possibly followed by digits, "'" marks inverse, "R" is the rest block
  Word w;
  std::map<std::string, int> ids;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string name = s.substr(i, j - i);
    int sign = 1;
    if (j < s.size() && s[j] == '\'') sign = -1, ++j;
    if (name == "R") w.push_back({kRestLetter, sign});
    else {
      auto it = ids.emplace(name, static_cast<int>(ids.size())).first;
      w.push_back({it->second, sign});
    }
    i = j;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Normalisation planner.

struct PlannedMove {
  Move move;
  int new_id;
  Word after;
};

namespace detail {

inline bool is_crosscap_at(const Word& w, int i) {
  int n = static_cast<int>(w.size());
  const Letter &a = w[i % n], &b = w[(i + 1) % n];
  return a.id != kRestLetter && a.id == b.id && a.sign == b.sign;
}
inline bool is_handle_at(const Word& w, int i) {
  int n = static_cast<int>(w.size());
  if (n < 4) return false;
  const Letter &a = w[i % n], &b = w[(i + 1) % n], &c = w[(i + 2) % n], &d = w[(i + 3) % n];
  return a.id != kRestLetter && b.id != kRestLetter && a.id != b.id && a.id == c.id && b.id == d.id &&
         a.sign == -c.sign && b.sign == -d.sign;
}

struct Block {
  char kind;  // 'C' crosscap, 'H' handle
  int start;  // position in the rotated word
};

// Splits the cyclic word into crosscap/handle blocks; returns the rotation
// offset used, or nullopt if the word is not a concatenation of blocks.
inline std::optional<std::pair<int, std::vector<Block>>> split_blocks(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int off = 0; off < std::max(n, 1); ++off) {
    Word r = rotate(w, off);
    std::vector<Block> bl;
    int i = 0;
    bool ok = true;
    while (i < n && ok) {
      if (i + 1 < n && is_crosscap_at(r, i)) {
        bl.push_back({'C', i});
        i += 2;
      } else if (i + 3 < n && is_handle_at(r, i)) {
        bl.push_back({'H', i});
        i += 4;
      } else {
        ok = false;
      }
    }
    if (ok) return std::pair{off, bl};
  }
  return std::nullopt;
}

inline std::set<int> crosscap_letters(const Word& w) {
  std::set<int> s;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (is_crosscap_at(w, i)) s.insert(w[i].id);
  return s;
}
inline std::set<int> handle_letters(const Word& w) {
  std::set<int> s;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (is_handle_at(w, i)) s.insert(w[i].id), s.insert(w[(i + 1) % w.size()].id);
  return s;
}

// Breadth-first search for at most `depth` moves taking `start` to a word
// equivalent to `target`.  Results are cached per canonical start word.
inline std::optional<std::vector<PlannedMove>> search_moves(const Word& start, const Word& target, int depth,
                                                             int& fresh) {
  static std::map<std::pair<Word, Word>, std::optional<std::vector<PlannedMove>>> cache;
  Word cs = canonical_word(start), ct = canonical_word(target);
  auto key = std::pair{cs, ct};
  auto it = cache.find(key);
  if (it == cache.end()) {
    struct Node {
      Word w;
      std::vector<PlannedMove> path;
    };
    std::optional<std::vector<PlannedMove>> found;
    std::set<Word> seen{cs};
    std::deque<Node> q;
    q.push_back({cs, {}});
    int next_id = 1000;
    while (!q.empty() && !found) {
      Node u = std::move(q.front());
      q.pop_front();
      if (canonical_word(u.w) == ct) {
        found = u.path;
        break;
      }
      if (static_cast<int>(u.path.size()) >= depth) continue;
      int n = static_cast<int>(u.w.size());
      std::set<int> ids;
      for (auto& l : u.w)
        if (l.id != kRestLetter) ids.insert(l.id);
      for (int P = 0; P < n; ++P)
        for (int Q = P + 1; Q <= n; ++Q)
          for (int x : ids) {
            int nid = next_id++;
            auto r = apply_move(u.w, {P, Q, x}, nid);
            if (!r) continue;
            Word c = canonical_word(*r);
            if (!seen.insert(c).second) continue;
            Node v{*r, u.path};
            v.path.push_back({{P, Q, x}, nid, *r});
            q.push_back(std::move(v));
          }
    }
    it = cache.emplace(key, found).first;
  }
  if (!it->second) return std::nullopt;
  // replay on the actual start word
  std::vector<PlannedMove> out;
  Word prev = cs, cur = start;
  for (const auto& pm : *it->second) {
    Move m = transport_move(pm.move, prev, cur);
    int nid = fresh++;
    auto r = apply_move(cur, m, nid);
    SURFCURVE_CHECK(r.has_value(), "PlannerError", "replayed move is invalid");
    out.push_back({m, nid, *r});
    prev = pm.after;
    cur = *r;
  }
  return out;
}

// Runs a collapsed macro on positions [start, start+len) of w (cyclic).
inline std::vector<PlannedMove> run_macro(const Word& w, int start, int len, const Word& target, int& fresh) {
  Word r = rotate(w, start);
  Word S(r.begin(), r.begin() + len), rest(r.begin() + len, r.end());
  Word collapsed = S;
  bool has_rest = !rest.empty();
  if (has_rest) collapsed.push_back({kRestLetter, 1});
  Word tgt = target;
  if (!has_rest) tgt.erase(std::remove_if(tgt.begin(), tgt.end(), [](const Letter& l) { return l.id == kRestLetter; }), tgt.end());
  auto path = search_moves(collapsed, tgt, 3, fresh);
  SURFCURVE_CHECK(path.has_value(), "PlannerError", "no cut-and-paste macro found");
  // expand each collapsed word back to a full word; corners shift after the rest block
  std::vector<PlannedMove> out;
  Word cur_full = r, cur_act = w;
  Word cur_col = collapsed;
  auto expand = [&](const Word& c) {
    Word f;
    for (auto& l : c) {
      if (l.id == kRestLetter) {
        Word part = l.sign > 0 ? rest : inverse(rest);
        f.insert(f.end(), part.begin(), part.end());
      } else {
        f.push_back(l);
      }
    }
    return f;
  };
  auto full_corner = [&](const Word& c, int corner) {
    int pos = 0;
    for (int i = 0; i < corner; ++i) pos += c[i].id == kRestLetter ? static_cast<int>(rest.size()) : 1;
    return pos;
  };
  for (const auto& pm : *path) {
    int nid = pm.new_id;
    Move m{full_corner(cur_col, pm.move.P), full_corner(cur_col, pm.move.Q), pm.move.paste};
    const Word& col_after = pm.after;
    auto full_after = apply_move(cur_full, m, nid);
    SURFCURVE_CHECK(full_after.has_value(), "PlannerError", "macro move invalid on full word");
    Move ma = transport_move(m, cur_full, cur_act);
    auto act_after = apply_move(cur_act, ma, nid);
    SURFCURVE_CHECK(act_after.has_value(), "PlannerError", "macro move invalid on actual word");
    Word canon_after = canonical_word(*act_after);
    SURFCURVE_CHECK(canon_after == canonical_word(*full_after) && canon_after == canonical_word(expand(col_after)),
                    "PlannerError", "macro expansion mismatch");
    out.push_back({ma, nid, *act_after});
    cur_full = *full_after;
    cur_act = *act_after;
    cur_col = col_after;
  }
  return out;
}

}  // namespace detail

// Plans cut-and-paste moves turning a one-vertex word into normal form:
// orientable -> a1 b1 a1' b1' ...; non-orientable odd -> z z a1 b1 a1' b1' ...;
// non-orientable even -> y w y' w a1 b1 a1' b1' ...
// Moves refer to the word as it is just before each move is applied.
inline std::vector<PlannedMove> plan_normal_form(Word w) {
  using namespace detail;
  std::vector<PlannedMove> plan;
  int fresh = 0;
  for (auto& l : w) fresh = std::max(fresh, l.id + 1);
  auto push = [&](Move m) {
    int nid = fresh++;
    auto r = apply_move(w, m, nid);
    SURFCURVE_CHECK(r.has_value(), "PlannerError", "invalid planned move");
    plan.push_back({m, nid, *r});
    w = *r;
    return nid;
  };
  auto push_all = [&](const std::vector<PlannedMove>& ms) {
    for (auto& pm : ms) {
      plan.push_back(pm);
      w = pm.after;
    }
  };

  // 1. gather every twisted pair into an adjacent crosscap x x
  for (bool again = true; again;) {
    again = false;
    auto cc = crosscap_letters(w);
    std::set<int> ids;
    for (auto& l : w) ids.insert(l.id);
    for (int x : ids) {
      if (cc.count(x) || !twisted(w, x)) continue;
      auto p = occurrences(w, x);
      push({p[0], p[1], x});
      again = true;
      break;
    }
  }
  // 2. handles from linked opposite pairs: x A y B x' C y' D
  for (bool again = true; again;) {
    again = false;
    auto cc = crosscap_letters(w);
    auto hl = handle_letters(w);
    std::set<int> ids;
    for (auto& l : w) ids.insert(l.id);
    for (int x : ids) {
      if (cc.count(x) || hl.count(x)) continue;
      auto p = occurrences(w, x);
      int y = -1;
      for (int k = p[0] + 1; k < p[1] && y < 0; ++k) {
        int c = w[k].id;
        if (cc.count(c) || hl.count(c)) continue;
        auto q = occurrences(w, c);
        bool in0 = q[0] > p[0] && q[0] < p[1], in1 = q[1] > p[0] && q[1] < p[1];
        if (in0 != in1) y = c;
      }
      SURFCURVE_CHECK(y >= 0, "PlannerError", "word has more than one vertex");
      // move 1: U = A y B, glue along y  ->  x z' x' C B z A D  (cyclically)
      int z = push({p[0] + 1, p[1], y});
      // move 2: U = z' x' E z, glue along x  ->  E z w z' w' F
      // the stretch from z' to z holds x' once; if it wraps, cut off its complement
      auto pz = occurrences(w, z);
      int zneg = w[pz[0]].sign < 0 ? pz[0] : pz[1];
      int zpos = zneg == pz[0] ? pz[1] : pz[0];
      if (zneg < zpos) push({zneg, zpos + 1, x});
      else push({zpos + 1, zneg, x});
      again = true;
      break;
    }
  }
  auto blocks = split_blocks(w);
  SURFCURVE_CHECK(blocks.has_value(), "PlannerError", "word did not split into blocks");

  const Word h2c_t = parse_word("x x y y w w R");
  const Word c2h_t = parse_word("h k h' k' z z R"), klein_t = parse_word("y w y' w R");
  // 3. trade every handle for two crosscaps while a crosscap exists
  for (;;) {
    auto sb = split_blocks(w);
    SURFCURVE_CHECK(sb.has_value(), "PlannerError", "lost block structure");
    auto& [off, bl] = *sb;
    bool has_c = false, has_h = false;
    for (auto& b : bl) (b.kind == 'C' ? has_c : has_h) = true;
    if (!has_c || !has_h) break;
    int nb = static_cast<int>(bl.size());
    for (int t = 0; t < nb; ++t) {
      if (bl[t].kind == 'H' && bl[(t + nb - 1) % nb].kind == 'C') {
        int start = (off + bl[(t + nb - 1) % nb].start) % static_cast<int>(w.size());
        push_all(run_macro(w, start, 6, h2c_t, fresh));
        break;
      }
    }
  }
  // 4. three consecutive crosscaps -> handle + crosscap, until at most two remain
  for (;;) {
    auto sb = split_blocks(w);
    auto& [off, bl] = *sb;
    int nc = 0;
    for (auto& b : bl) nc += b.kind == 'C';
    if (nc < 3) break;
    int nb = static_cast<int>(bl.size());
    int start = -1;
    for (int t = 0; t < nb && start < 0; ++t)
      if (bl[t].kind == 'C' && bl[(t + 1) % nb].kind == 'C' && bl[(t + 2) % nb].kind == 'C')
        start = (off + bl[t].start) % static_cast<int>(w.size());
    SURFCURVE_CHECK(start >= 0, "PlannerError", "crosscaps are not consecutive");
    push_all(run_macro(w, start, 6, c2h_t, fresh));
  }
  // 5. two crosscaps -> y w y' w
  {
    auto sb = split_blocks(w);
    auto& [off, bl] = *sb;
    int nc = 0;
    for (auto& b : bl) nc += b.kind == 'C';
    if (nc == 2) {
      int nb = static_cast<int>(bl.size());
      int start = -1;
      for (int t = 0; t < nb && start < 0; ++t)
        if (bl[t].kind == 'C' && bl[(t + 1) % nb].kind == 'C') start = (off + bl[t].start) % static_cast<int>(w.size());
      SURFCURVE_CHECK(start >= 0, "PlannerError", "crosscaps are not adjacent");
      push_all(run_macro(w, start, 4, klein_t, fresh));
    }
  }
  return plan;
}

// Template normal form for genus g.
inline Word normal_form_template(int g, bool orientable) {
  std::string s;
  int handles;
  if (orientable) {
    handles = g / 2;
  } else if (g % 2 == 1) {
    s = "z z ";
    handles = (g - 1) / 2;
  } else {
    s = "y w y' w ";
    handles = (g - 2) / 2;
  }
  for (int i = 1; i <= handles; ++i) {
    auto a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    s += a + " " + b + " " + a + "' " + b + "' ";
  }
  return parse_word(s);
}

}  // namespace surfcurve
