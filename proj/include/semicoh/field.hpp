#pragma once

#include "semicoh/numeric.hpp"

namespace semicoh {

// Exact coefficient field: rationals (characteristic 0) or Z/p.
struct FieldChoice {
  long p = 0;  // 0 or a prime

  bool is_modular() const { return p != 0; }
};

namespace detail {

inline long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace detail

// Rank of a sparse integer matrix (entries given as triplets) over the field.
// rows x cols with entries (r, c, value); values are small signed integers.
inline int sparse_rank(int nrows, int ncols, const std::vector<std::tuple<int, int, int>>& entries,
                       const FieldChoice& f) {
  if (nrows == 0 || ncols == 0) return 0;
  if (f.is_modular()) {
    long p = f.p;
    std::vector<std::vector<long>> m(nrows, std::vector<long>(ncols, 0));
    for (auto& [r, c, v] : entries) {
      long w = (m[r][c] + v) % p;
      if (w < 0) w += p;
      m[r][c] = w;
    }
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
      int piv = -1;
      for (int i = rank; i < nrows; ++i)
        if (m[i][c] != 0) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      long inv = detail::mod_inv(m[rank][c], p);
      for (int j = c; j < ncols; ++j) m[rank][j] = (m[rank][j] * inv) % p;
      for (int i = 0; i < nrows; ++i) {
        if (i == rank || m[i][c] == 0) continue;
        long f0 = m[i][c];
        for (int j = c; j < ncols; ++j) {
          m[i][j] = (m[i][j] - f0 * m[rank][j]) % p;
          if (m[i][j] < 0) m[i][j] += p;
        }
      }
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(ncols));
  for (auto& [r, c, v] : entries) m[r][c] += v;
  int rank = 0;
  for (int c = 0; c < ncols && rank < nrows; ++c) {
    int piv = -1;
    for (int i = rank; i < nrows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat lead = m[rank][c];
    for (int j = c; j < ncols; ++j) m[rank][j] /= lead;
    for (int i = rank + 1; i < nrows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f0 = m[i][c];
      for (int j = c; j < ncols; ++j) m[i][j] -= f0 * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace semicoh
