#pragma once

#include "semicoh/matrix.hpp"

namespace semicoh {

// Row-style Hermite normal form: U * M = H with U unimodular, H in echelon
// form with positive pivots and reduced entries above each pivot.
struct HermiteData {
  IntMat h, u;
};

inline HermiteData hermite_normal_form(const IntMat& m) {
  IntMat h = m, u = IntMat::identity(m.rows);
  int r = 0;
  for (int c = 0; c < h.cols && r < h.rows; ++c) {
    // gcd-chase column c into row r
    for (int i = r + 1; i < h.rows; ++i) {
      while (h.at(i, c) != 0) {
        Int q = h.at(r, c) == 0 ? Int(0) : Int(h.at(r, c) / h.at(i, c));
        for (int j = 0; j < h.cols; ++j) h.at(r, j) -= q * h.at(i, j);
        for (int j = 0; j < h.rows; ++j) u.at(r, j) -= q * u.at(i, j);
        for (int j = 0; j < h.cols; ++j) std::swap(h.at(r, j), h.at(i, j));
        for (int j = 0; j < h.rows; ++j) std::swap(u.at(r, j), u.at(i, j));
      }
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      for (int j = 0; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
      for (int j = 0; j < h.rows; ++j) u.at(r, j) = -u.at(r, j);
    }
    for (int i = 0; i < r; ++i) {
      // reduce entries above the pivot into [0, pivot)
      Int q = h.at(i, c) >= 0 ? Int(h.at(i, c) / h.at(r, c))
                              : Int(-((-h.at(i, c) + h.at(r, c) - 1) / h.at(r, c)));
      if (q == 0) continue;
      for (int j = 0; j < h.cols; ++j) h.at(i, j) -= q * h.at(r, j);
      for (int j = 0; j < h.rows; ++j) u.at(i, j) -= q * u.at(r, j);
    }
    ++r;
  }
  return {h, u};
}

// Smith normal form: U * M * V = S diagonal with d1 | d2 | ... , U, V unimodular.
struct SmithData {
  IntMat s, u, v;
  IntVec diag() const {
    IntVec d;
    int n = std::min(s.rows, s.cols);
    for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
  }
};

// extended gcd: g = gcd(a,b) = x*a + y*b, g >= 0
inline std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::swap(old_r -= q * r, r);
    std::swap(old_x -= q * x, x);
    std::swap(old_y -= q * y, y);
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

inline SmithData smith_normal_form(const IntMat& m) {
  IntMat s = m, u = IntMat::identity(m.rows), v = IntMat::identity(m.cols);
  auto row_op = [&](int i, int k, const Int& q) {  // row i -= q * row k
    for (int j = 0; j < s.cols; ++j) s.at(i, j) -= q * s.at(k, j);
    for (int j = 0; j < u.cols; ++j) u.at(i, j) -= q * u.at(k, j);
  };
  auto col_op = [&](int j, int k, const Int& q) {  // col j -= q * col k
    for (int i = 0; i < s.rows; ++i) s.at(i, j) -= q * s.at(i, k);
    for (int i = 0; i < v.rows; ++i) v.at(i, j) -= q * v.at(i, k);
  };
  auto row_swap = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(i, j), s.at(k, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
  };
  auto col_swap = [&](int j, int k) {
    if (j == k) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, j), s.at(i, k));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, k));
  };

  int n = std::min(s.rows, s.cols);
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot;
      // remainders produced below are strictly smaller, so this terminates
      int pi = -1, pj = -1;
      for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j)
          if (s.at(i, j) != 0 && (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
            pi = i; pj = j;
          }
      if (pi < 0) { t = n; break; }
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (int i = t + 1; i < s.rows; ++i)
        if (s.at(i, t) != 0) {
          row_op(i, t, Int(s.at(i, t) / s.at(t, t)));
          if (s.at(i, t) != 0) clean = false;
        }
      for (int j = t + 1; j < s.cols; ++j)
        if (s.at(t, j) != 0) {
          col_op(j, t, Int(s.at(t, j) / s.at(t, t)));
          if (s.at(t, j) != 0) clean = false;
        }
      if (clean) break;
    }
    if (t >= n) break;
    if (s.at(t, t) < 0) {
      for (int j = 0; j < s.cols; ++j) s.at(t, j) = -s.at(t, j);
      for (int j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
    }
  }
  // divisibility chain via explicit unimodular 2x2 blocks on diagonal pairs
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < n; ++t)
      for (int k = t + 1; k < n; ++k) {
        Int a = s.at(t, t), b = s.at(k, k);
        if (a == 0 || b == 0 || b % a == 0) continue;
        auto [g, x, y] = ext_gcd(a, b);
        Int l = (a / g) * b;
        // L = [[x, y], [-b/g, a/g]], R = [[1, -y*b/g], [1, x*a/g]]
        for (int j = 0; j < u.cols; ++j) {
          Int rt = u.at(t, j), rk = u.at(k, j);
          u.at(t, j) = x * rt + y * rk;
          u.at(k, j) = -(b / g) * rt + (a / g) * rk;
        }
        for (int i = 0; i < v.rows; ++i) {
          Int ct = v.at(i, t), ck = v.at(i, k);
          v.at(i, t) = ct + ck;
          v.at(i, k) = -(y * b / g) * ct + (x * a / g) * ck;
        }
        s.at(t, t) = g;
        s.at(k, k) = l;
        changed = true;
      }
  }
  return {s, u, v};
}

// Basis of the integer kernel {x : M x = 0}; columns of the result.
// The kernel lattice of an integer matrix is saturated by construction.
inline IntMat kernel_basis(const IntMat& m) {
  if (m.cols == 0) return IntMat(0, 0);
  if (m.rows == 0) return IntMat::identity(m.cols);
  SmithData sd = smith_normal_form(m);
  int r = 0;
  int n = std::min(sd.s.rows, sd.s.cols);
  for (int i = 0; i < n; ++i)
    if (sd.s.at(i, i) != 0) ++r;
  IntMat k(m.cols, m.cols - r);
  for (int j = r; j < m.cols; ++j)
    for (int i = 0; i < m.cols; ++i) k.at(i, j - r) = sd.v.at(i, j);
  return k;
}

// One integer solution of M x = b, if any.
inline std::optional<IntVec> solve(const IntMat& m, const IntVec& b) {
  SmithData sd = smith_normal_form(m);
  IntVec c = mul(sd.u, b);
  IntVec y(m.cols, Int(0));
  int n = std::min(m.rows, m.cols);
  for (int i = 0; i < n; ++i) {
    if (sd.s.at(i, i) == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % sd.s.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / sd.s.at(i, i);
    }
  }
  for (int i = n; i < m.rows; ++i)
    if (c[i] != 0) return std::nullopt;
  return mul(sd.v, y);
}

// Membership of b in the column lattice of M.
inline bool in_column_lattice(const IntMat& m, const IntVec& b) { return solve(m, b).has_value(); }

}  // namespace semicoh
