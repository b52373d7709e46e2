#pragma once

#include "semicoh/numeric.hpp"

#include <cassert>
#include <optional>
#include <tuple>

namespace semicoh {

// Dense integer matrix, row-major, exact entries.
struct IntMat {
  int rows = 0, cols = 0;
  IntVec a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<IntVec>& rs) {
    if (rs.empty()) return {};
    IntMat m(int(rs.size()), int(rs[0].size()));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    return m;
  }

  static IntMat from_cols(const std::vector<IntVec>& cs) {
    if (cs.empty()) return {};
    IntMat m(int(cs[0].size()), int(cs.size()));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
    return m;
  }

  IntVec row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }
  IntVec col(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline IntMat mul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

inline IntVec mul(const IntMat& m, const IntVec& v) {
  assert(int(v.size()) == m.cols);
  IntVec r(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

// Bareiss fraction-free determinant.
inline Int det(IntMat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

// Rank over Q by fraction-free elimination.
inline int rank(IntMat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Int f = m.at(i, c), g = m.at(r, c);
      Int d = gcd(f, g);
      Int fr = f / d, gr = g / d;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = gr * m.at(i, j) - fr * m.at(r, j);
    }
    ++r;
  }
  return r;
}

inline int rank_of_cols(const IntMat& m, const std::vector<int>& cols) {
  IntMat s(m.rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < m.rows; ++i) s.at(i, j) = m.at(i, cols[j]);
  return rank(s);
}

}  // namespace semicoh
