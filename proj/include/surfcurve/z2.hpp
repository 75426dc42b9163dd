#pragma once

// Vectors and matrices over Z2, bit-packed into 64-bit words.  Dimensions are
// capped at 64, which bounds the genus the library handles.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "surfcurve/errors.hpp"

namespace surfcurve {

using Bits = std::uint64_t;
constexpr int kMaxDim = 64;

inline Bits bit(int i) { return Bits{1} << i; }
inline int popcount(Bits b) { return std::popcount(b); }
inline Bits low_mask(int n) { return n >= 64 ? ~Bits{0} : (bit(n) - 1); }

inline std::vector<int> bits_to_vector(Bits b, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<int>((b >> i) & 1u);
  return v;
}
inline Bits vector_to_bits(const std::vector<int>& v) {
  if (v.size() > static_cast<std::size_t>(kMaxDim)) throw input_error("DimensionMismatch", "vector too long");
  Bits b = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) b |= bit(static_cast<int>(i));
  return b;
}
inline std::string bits_string(Bits b, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(((b >> i) & 1u) ? '1' : '0');
  return s;
}

class Z2Matrix {
 public:
  Z2Matrix() = default;
  Z2Matrix(int rows, int cols) : cols_(cols), rows_(rows, 0) {
    if (rows < 0 || cols < 0 || cols > kMaxDim) throw input_error("DimensionMismatch", "bad matrix shape");
  }

  static Z2Matrix identity(int n) {
    Z2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i] = bit(i);
    return m;
  }
  static Z2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Z2Matrix m(static_cast<int>(rows.size()), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw input_error("DimensionMismatch", "ragged matrix");
      m.rows_[i] = vector_to_bits(rows[i]);
    }
    return m;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v) {
    if (v) rows_[r] |= bit(c);
    else rows_[r] &= ~bit(c);
  }
  Bits row(int r) const { return rows_[r]; }
  void set_row(int r, Bits b) { rows_[r] = b & low_mask(cols_); }

  Bits apply(Bits v) const {
    Bits out = 0;
    for (int r = 0; r < rows(); ++r)
      if (popcount(rows_[r] & v) & 1) out |= bit(r);
    return out;
  }

  Z2Matrix operator*(const Z2Matrix& o) const {
    if (cols_ != o.rows()) throw input_error("DimensionMismatch", "matrix product shapes");
    Z2Matrix out(rows(), o.cols());
    for (int r = 0; r < rows(); ++r) {
      Bits acc = 0;
      for (int k = 0; k < cols_; ++k)
        if (get(r, k)) acc ^= o.rows_[k];
      out.rows_[r] = acc;
    }
    return out;
  }
  bool operator==(const Z2Matrix& o) const = default;

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out;
    for (Bits b : rows_) out.push_back(bits_to_vector(b, cols_));
    return out;
  }

 private:
  int cols_ = 0;
  std::vector<Bits> rows_;
};

inline Bits apply(const Z2Matrix& m, Bits v) { return m.apply(v); }

// Change of basis from standard-loop signatures to canonical-loop
// signatures.  Column order follows the standard word: (z, a1, b1, a2, b2, ...)
// for odd genus and (y, w, a1, b1, ...) for even genus.
//
// Odd genus, row r:  r even -> {even columns <= r} + {r+1}
//                    r odd  -> {even columns <  r} + {r, r+1}
// Even genus: row 0 is {0,1}; row r >= 1 is the odd-genus row r-1 shifted
// right by one column.  Everything is truncated to g columns.
inline Z2Matrix change_basis_matrix(int g) {
  if (g < 1 || g > kMaxDim) throw input_error("DimensionMismatch", "genus out of range");
  auto odd_row = [](int r) {
    std::vector<int> cols;
    if (r % 2 == 0) {
      for (int c = 0; c <= r; c += 2) cols.push_back(c);
      cols.push_back(r + 1);
    } else {
      for (int c = 0; c < r; c += 2) cols.push_back(c);
      cols.push_back(r);
      cols.push_back(r + 1);
    }
    return cols;
  };
  Z2Matrix m(g, g);
  for (int r = 0; r < g; ++r) {
    std::vector<int> cols;
    if (g % 2 == 1) {
      cols = odd_row(r);
    } else if (r == 0) {
      cols = {0, 1};
    } else {
      cols = odd_row(r - 1);
      for (int& c : cols) ++c;
    }
    for (int c : cols)
      if (c < g) m.set(r, c, true);
  }
  return m;
}

// Odd genus, row 0 = all ones; odd r -> {r..g-1}; even r >= 2 -> {r-2, r-1}.
// Even genus, row 0 = all ones; r >= 1 is the odd pattern shifted by one.
inline Z2Matrix change_basis_inverse(int g) {
  if (g < 1 || g > kMaxDim) throw input_error("DimensionMismatch", "genus out of range");
  Z2Matrix m(g, g);
  auto fill = [&](int r, int rr, int shift) {
    if (rr == 0) {
      for (int c = shift; c < g; ++c) m.set(r, c, true);
    } else if (rr % 2 == 1) {
      for (int c = rr + shift; c < g; ++c) m.set(r, c, true);
    } else {
      for (int c : {rr - 2 + shift, rr - 1 + shift})
        if (c >= 0 && c < g) m.set(r, c, true);
    }
  };
  for (int c = 0; c < g; ++c) m.set(0, c, true);
  for (int r = 1; r < g; ++r) {
    if (g % 2 == 1) fill(r, r, 0);
    else fill(r, r - 1, 1);
  }
  return m;
}

// Crossing parities with the standard loops are the intersection form of the
// standard system applied to homology coordinates.  The form is z.z = 1 plus
// hyperbolic pairs (a_i, b_i) for odd genus, and [[1,1],[1,0]] on (y, w) plus
// hyperbolic pairs for even genus.  This returns its inverse.
inline Z2Matrix standard_form_inverse(int g) {
  if (g < 1 || g > kMaxDim) throw input_error("DimensionMismatch", "genus out of range");
  Z2Matrix m(g, g);
  int c = 0;
  if (g % 2 == 1) {
    m.set(0, 0, true);
    c = 1;
  } else {
    m.set(1, 0, true);  // y -> w
    m.set(0, 1, true);  // w -> y + w
    m.set(1, 1, true);
    c = 2;
  }
  for (; c + 1 < g; c += 2) {
    m.set(c, c + 1, true);
    m.set(c + 1, c, true);
  }
  return m;
}

// Standard signature -> canonical signature.
inline Z2Matrix signature_change_matrix(int g) { return change_basis_matrix(g) * standard_form_inverse(g); }

struct RhoMap {
  Z2Matrix matrix;          // k x g
  std::vector<Bits> targets;  // the set A, each of dimension k

  int k() const { return matrix.rows(); }
  bool accepts(Bits v) const {
    for (Bits a : targets)
      if (a == v) return true;
    return false;
  }
  bool zero_in_targets() const { return accepts(0); }
};

inline RhoMap compose_rho(const RhoMap& rho, const Z2Matrix& phi) {
  if (rho.matrix.cols() != phi.rows()) throw input_error("DimensionMismatch", "rho and phi do not compose");
  return RhoMap{rho.matrix * phi, rho.targets};
}

}  // namespace surfcurve
