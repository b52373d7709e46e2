#pragma once

#include "semicoh/lattice.hpp"

#include <functional>
#include <set>

namespace semicoh {

// ---------------------------------------------------------------------------
// Rational Fourier-Motzkin elimination with witness reconstruction.
// Rows encode  coef . x + cst  >= 0  (or > 0 when strict).
// ---------------------------------------------------------------------------

struct LinRow {
  RatVec coef;
  Rat cst;
  bool strict = false;
};

struct FMSystem {
  int nvars = 0;
  std::vector<LinRow> rows;
};

namespace detail {

inline void normalize_row(LinRow& r) {
  Int l = 1;
  for (const Rat& q : r.coef) l = lcm(l, denominator(q));
  l = lcm(l, denominator(r.cst));
  Int g = 0;
  IntVec w(r.coef.size() + 1);
  for (size_t i = 0; i < r.coef.size(); ++i) {
    w[i] = numerator(r.coef[i]) * (l / denominator(r.coef[i]));
    g = gcd(g, w[i]);
  }
  w.back() = numerator(r.cst) * (l / denominator(r.cst));
  g = gcd(g, w.back());
  if (g == 0) g = 1;
  for (size_t i = 0; i < r.coef.size(); ++i) r.coef[i] = Rat(w[i] / g);
  r.cst = Rat(w.back() / g);
}

inline std::vector<LinRow> dedupe(std::vector<LinRow> rows) {
  std::set<std::pair<std::vector<std::pair<Int, Int>>, int>> seen;
  std::vector<LinRow> out;
  for (LinRow& r : rows) {
    normalize_row(r);
    std::vector<std::pair<Int, Int>> key;
    key.reserve(r.coef.size() + 1);
    for (const Rat& q : r.coef) key.emplace_back(numerator(q), denominator(q));
    key.emplace_back(numerator(r.cst), denominator(r.cst));
    if (seen.insert({key, r.strict ? 1 : 0}).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

// Eliminate variable `var`; rows keep the same length with a zeroed column.
inline FMSystem fm_eliminate(const FMSystem& sys, int var) {
  std::vector<LinRow> pos, neg, zero;
  for (const LinRow& r : sys.rows) {
    int s = sgn(r.coef[var]);
    if (s > 0) pos.push_back(r);
    else if (s < 0) neg.push_back(r);
    else zero.push_back(r);
  }
  FMSystem out;
  out.nvars = sys.nvars;
  out.rows = zero;
  for (const LinRow& p : pos)
    for (const LinRow& n : neg) {
      // p.coef[var] * n - n.coef[var] * p, scaled positive
      Rat a = p.coef[var], b = -n.coef[var];
      LinRow r;
      r.coef.resize(sys.nvars);
      for (int j = 0; j < sys.nvars; ++j) r.coef[j] = b * p.coef[j] + a * n.coef[j];
      r.cst = b * p.cst + a * n.cst;
      r.strict = p.strict || n.strict;
      out.rows.push_back(std::move(r));
    }
  out.rows = detail::dedupe(std::move(out.rows));
  return out;
}

struct FMResult {
  bool feasible = false;
  RatVec witness;
};

// Decide feasibility and produce a rational witness.
inline FMResult fm_feasible(const FMSystem& sys) {
  std::vector<FMSystem> stages(sys.nvars + 1);
  stages[sys.nvars] = sys;
  stages[sys.nvars].rows = detail::dedupe(stages[sys.nvars].rows);
  for (int v = sys.nvars - 1; v >= 0; --v) stages[v] = fm_eliminate(stages[v + 1], v);
  for (const LinRow& r : stages[0].rows) {
    if (r.strict ? !(r.cst > 0) : !(r.cst >= 0)) return {false, {}};
  }
  RatVec x(sys.nvars);
  for (int v = 0; v < sys.nvars; ++v) {
    // bounds on x_v from stage v+1 with x_0..x_{v-1} known
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const LinRow& r : stages[v + 1].rows) {
      if (r.coef[v] == 0) continue;
      Rat rest = r.cst;
      for (int j = 0; j < v; ++j) rest += r.coef[j] * x[j];
      Rat bound = -rest / r.coef[v];
      if (r.coef[v] > 0) {
        if (!has_lo || bound > lo || (bound == lo && r.strict)) {
          lo = bound; lo_strict = r.strict;
        }
        has_lo = true;
      } else {
        if (!has_hi || bound < hi || (bound == hi && r.strict)) {
          hi = bound; hi_strict = r.strict;
        }
        has_hi = true;
      }
    }
    if (has_lo && has_hi) x[v] = (lo == hi) ? lo : Rat((lo + hi) / 2);
    else if (has_lo) x[v] = lo_strict ? Rat(lo + 1) : lo;
    else if (has_hi) x[v] = hi_strict ? Rat(hi - 1) : hi;
    else x[v] = 0;
  }
  return {true, x};
}

// ---------------------------------------------------------------------------
// Exact lattice-coset feasibility: does u + L meet the orthant off `free`?
// ---------------------------------------------------------------------------

enum class Certainty { True, False, Inconclusive };

struct FeasOutcome {
  Certainty status = Certainty::Inconclusive;
  IntVec witness;  // v in u + L with v_i >= 0 for all constrained i (when True)
};

struct SearchBudget {
  long nodes = 400000;  // integer candidates examined in the bounded stage
};

namespace detail {

// bounds for integer w_k in stage k of the cascade given fixed w_0..w_{k-1}
inline bool stage_interval(const FMSystem& stage, int k, const IntVec& partial, Int& lo, Int& hi,
                           bool& has_lo, bool& has_hi) {
  has_lo = has_hi = false;
  Rat rlo, rhi;
  for (const LinRow& r : stage.rows) {
    if (r.coef[k] == 0) {
      // constant row under the partial assignment must hold
      Rat rest = r.cst;
      bool all_known = true;
      for (int j = 0; j < int(r.coef.size()); ++j) {
        if (j == k || r.coef[j] == 0) continue;
        if (j < int(partial.size())) rest += r.coef[j] * Rat(partial[j]);
        else { all_known = false; break; }
      }
      if (all_known && !(rest >= 0)) return false;
      continue;
    }
    Rat rest = r.cst;
    for (int j = 0; j < int(partial.size()); ++j) rest += r.coef[j] * Rat(partial[j]);
    Rat bound = -rest / r.coef[k];
    if (r.coef[k] > 0) {
      if (!has_lo || bound > rlo) rlo = bound;
      has_lo = true;
    } else {
      if (!has_hi || bound < rhi) rhi = bound;
      has_hi = true;
    }
  }
  if (has_lo) lo = rat_ceil(rlo);
  if (has_hi) hi = rat_floor(rhi);
  return true;
}

}  // namespace detail

inline FeasOutcome coset_feasible(const Lattice& l, const IntVec& u,
                                  const std::vector<char>& free_mask,
                                  const SearchBudget& budget = {}) {
  int n = l.ambient_dim;
  std::vector<int> cons;
  for (int i = 0; i < n; ++i)
    if (!free_mask[i]) cons.push_back(i);
  if (cons.empty()) return {Certainty::True, u};

  int r = l.rank();
  if (r == 0) {
    for (int i : cons)
      if (u[i] < 0) return {Certainty::False, {}};
    return {Certainty::True, u};
  }

  // restriction of the basis to constrained coordinates
  IntMat bc(int(cons.size()), r);
  for (int i = 0; i < int(cons.size()); ++i)
    for (int j = 0; j < r; ++j) bc.at(i, j) = l.basis.at(cons[i], j);

  // recession support: coordinates reachable by a nonnegative lattice direction
  IntVec wz(r, Int(0));  // z-coordinates of a combined recession vector
  std::vector<char> in_u(cons.size(), 0);
  for (int i = 0; i < int(cons.size()); ++i) {
    FMSystem sys;
    sys.nvars = r;
    for (int k = 0; k < int(cons.size()); ++k) {
      LinRow row;
      row.coef.resize(r);
      for (int j = 0; j < r; ++j) row.coef[j] = Rat(bc.at(k, j));
      row.cst = (k == i) ? Rat(-1) : Rat(0);
      sys.rows.push_back(std::move(row));
    }
    FMResult fr = fm_feasible(sys);
    if (!fr.feasible) continue;
    in_u[i] = 1;
    Int scale = 1;
    for (const Rat& q : fr.witness) scale = lcm(scale, denominator(q));
    for (int j = 0; j < r; ++j)
      wz[j] += numerator(fr.witness[j]) * (scale / denominator(fr.witness[j]));
  }

  std::vector<int> dcoords;  // constrained coordinates with no recession help
  for (int i = 0; i < int(cons.size()); ++i)
    if (!in_u[i]) dcoords.push_back(i);  // index into cons

  IntVec w_dir = mul(bc, wz);  // recession vector on constrained coords

  auto finish = [&](const IntVec& z0) -> FeasOutcome {
    // v = u + B (z0 + N wz) with N clearing the recession-supported coords
    IntVec base = u;
    IntVec bz = mul(l.basis, z0);
    for (int i = 0; i < n; ++i) base[i] += bz[i];
    Int nsteps = 0;
    for (int i = 0; i < int(cons.size()); ++i) {
      if (!in_u[i]) continue;
      Int cur = base[cons[i]];
      if (cur >= 0) continue;
      Int need = (-cur + w_dir[i] - 1) / w_dir[i];
      if (need > nsteps) nsteps = need;
    }
    IntVec v = base;
    if (nsteps > 0) {
      IntVec step = mul(l.basis, wz);
      for (int i = 0; i < n; ++i) v[i] += nsteps * step[i];
    }
    for (int i : cons)
      if (v[i] < 0) throw std::logic_error("feasibility witness construction failed");
    return {Certainty::True, v};
  };

  if (dcoords.empty()) return finish(IntVec(r, Int(0)));

  // projected lattice on the recession-free coordinates
  IntMat bd(int(dcoords.size()), r);
  for (int i = 0; i < int(dcoords.size()); ++i)
    for (int j = 0; j < r; ++j) bd.at(i, j) = bc.at(dcoords[i], j);
  HermiteData hd = hermite_normal_form(transpose(bd));  // rows of h: generators of the row space
  std::vector<IntVec> gcols, lifts;
  for (int i = 0; i < hd.h.rows; ++i) {
    IntVec g = hd.h.row(i);
    if (is_zero(g)) continue;
    gcols.push_back(g);           // element of the projected lattice
    lifts.push_back(hd.u.row(i)); // its z-coordinates
  }
  int rd = int(gcols.size());
  if (rd == 0) {
    for (int i : dcoords)
      if (u[cons[i]] < 0) return {Certainty::False, {}};
    return finish(IntVec(r, Int(0)));
  }

  // bounded search: G w >= -u_D has a bounded solution set
  FMSystem full;
  full.nvars = rd;
  for (int i = 0; i < int(dcoords.size()); ++i) {
    LinRow row;
    row.coef.resize(rd);
    for (int j = 0; j < rd; ++j) row.coef[j] = Rat(gcols[j][i]);
    row.cst = Rat(u[cons[dcoords[i]]]);
    full.rows.push_back(std::move(row));
  }
  std::vector<FMSystem> stages(rd);
  stages[rd - 1] = full;
  stages[rd - 1].rows = detail::dedupe(stages[rd - 1].rows);
  for (int v = rd - 2; v >= 0; --v) stages[v] = fm_eliminate(stages[v + 1], v + 1);

  long nodes = 0;
  IntVec w;
  std::function<int()> rec = [&]() -> int {  // 1 found, 0 none, -1 budget
    int k = int(w.size());
    Int lo, hi;
    bool has_lo, has_hi;
    if (!detail::stage_interval(stages[k], k, w, lo, hi, has_lo, has_hi)) return 0;
    if (!has_lo || !has_hi) throw std::logic_error("unbounded direction in bounded search");
    for (Int t = lo; t <= hi; ++t) {
      if (++nodes > budget.nodes) return -1;
      w.push_back(t);
      if (int(w.size()) == rd) {
        bool ok = true;
        for (const LinRow& r : full.rows) {
          Rat s = r.cst;
          for (int j = 0; j < rd; ++j) s += r.coef[j] * Rat(w[j]);
          if (!(s >= 0)) { ok = false; break; }
        }
        if (ok) return 1;
      } else {
        int sub = rec();
        if (sub != 0) return sub;
      }
      w.pop_back();
    }
    return 0;
  };
  int res = rec();
  if (res < 0) return {Certainty::Inconclusive, {}};
  if (res == 0) return {Certainty::False, {}};
  IntVec z0(r, Int(0));
  for (int j = 0; j < rd; ++j)
    for (int t = 0; t < r; ++t) z0[t] += w[j] * lifts[j][t];
  return finish(z0);
}

// ∃ x in Z^cols(M): M x = b and x_i >= 0 off `free`.
inline FeasOutcome fiber_feasible(const IntMat& m, const IntVec& b,
                                  const std::vector<char>& free_mask,
                                  const SearchBudget& budget = {}) {
  auto x0 = solve(m, b);
  if (!x0) return {Certainty::False, {}};
  Lattice ker;
  ker.ambient_dim = m.cols;
  ker.basis = kernel_basis(m);
  return coset_feasible(ker, *x0, free_mask, budget);
}

}  // namespace semicoh
