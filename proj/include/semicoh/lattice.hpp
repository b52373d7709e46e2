#pragma once

#include "semicoh/hermite.hpp"

#include <map>

namespace semicoh {

// Sublattice of Z^n given by independent basis columns.
struct Lattice {
  int ambient_dim = 0;
  IntMat basis;  // ambient_dim x rank, columns generate

  int rank() const { return basis.cols; }

  static Lattice from_columns(int n, const std::vector<IntVec>& gens) {
    // reduce a generating set to an independent basis via row HNF of the transpose
    Lattice l;
    l.ambient_dim = n;
    if (gens.empty()) {
      l.basis = IntMat(n, 0);
      return l;
    }
    IntMat g = IntMat::from_rows(gens);  // gens as rows
    HermiteData hd = hermite_normal_form(g);
    std::vector<IntVec> rows;
    for (int i = 0; i < hd.h.rows; ++i) {
      IntVec r = hd.h.row(i);
      if (!is_zero(r)) rows.push_back(r);
    }
    l.basis = transpose(IntMat::from_rows(rows));
    if (l.basis.rows == 0) l.basis = IntMat(n, 0);
    return l;
  }

  bool contains(const IntVec& v) const {
    if (is_zero(v)) return true;
    if (basis.cols == 0) return false;
    return in_column_lattice(basis, v);
  }

  bool same_lattice(const Lattice& o) const {
    if (ambient_dim != o.ambient_dim || basis.cols != o.basis.cols) return false;
    for (int j = 0; j < o.basis.cols; ++j)
      if (!contains(o.basis.col(j))) return false;
    for (int j = 0; j < basis.cols; ++j)
      if (!o.contains(basis.col(j))) return false;
    return true;
  }
};

// Finite quotient L_sat / L with a fixed splitting of Z^n / L.
struct TorsionGroup {
  IntVec invariant_factors;        // all > 1
  std::vector<IntVec> reps;        // one ambient representative per element, reps[0] = 0
  // internals for the splitting
  IntMat proj;                     // rank(L) x n, torsion coords of u are (proj*u) mod factors_all
  IntVec factors_all;              // all smith divisors of L inside L_sat (including 1s)

  Int order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }

  size_t size() const {
    size_t s = 1;
    for (const Int& d : invariant_factors) s *= size_t(d);
    return s;
  }

  // element = coordinates modulo invariant_factors
  IntVec element_of(const IntVec& u) const {
    IntVec y = mul(proj, u);
    IntVec t;
    for (size_t i = 0; i < factors_all.size(); ++i) {
      if (factors_all[i] <= 1) continue;
      Int r = y[i] % factors_all[i];
      if (r < 0) r += factors_all[i];
      t.push_back(r);
    }
    return t;
  }

  IntVec add(const IntVec& s, const IntVec& t) const {
    IntVec r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = (s[i] + t[i]) % invariant_factors[i];
    return r;
  }

  size_t index_of(const IntVec& t) const {
    size_t idx = 0;
    for (size_t i = 0; i < t.size(); ++i) idx = idx * size_t(invariant_factors[i]) + size_t(t[i]);
    return idx;
  }

  IntVec element_at(size_t idx) const {
    IntVec t(invariant_factors.size());
    for (size_t i = invariant_factors.size(); i-- > 0;) {
      t[i] = Int(idx % size_t(invariant_factors[i]));
      idx /= size_t(invariant_factors[i]);
    }
    return t;
  }

  const IntVec& rep_at(size_t idx) const { return reps[idx]; }
};

struct SaturationData {
  Lattice sat;
  TorsionGroup torsion;
};

// L_sat = (Q (x) L) cap Z^n together with T = L_sat / L and a canonical splitting.
inline SaturationData saturate(const Lattice& l) {
  SaturationData out;
  int n = l.ambient_dim;
  if (l.rank() == 0) {
    out.sat = l;
    out.torsion.proj = IntMat(0, n);
    out.torsion.reps = {IntVec(n, Int(0))};
    return out;
  }
  SmithData sd = smith_normal_form(l.basis);  // U * B * V = D (n x r)
  int r = l.rank();
  // L_sat basis: first r columns of U^{-1}; compute U^{-1} by solving U X = I
  // U is unimodular, so its HNF-based inverse is exact; use adjugate-free route:
  // solve for each unit vector.
  IntMat uinv(n, n);
  for (int j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    auto x = solve(sd.u, e);
    for (int i = 0; i < n; ++i) uinv.at(i, j) = (*x)[i];
  }
  IntMat satb(n, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) satb.at(i, j) = uinv.at(i, j);
  out.sat.ambient_dim = n;
  out.sat.basis = satb;

  TorsionGroup t;
  t.factors_all.resize(r);
  IntMat proj(r, n);
  for (int i = 0; i < r; ++i) {
    t.factors_all[i] = sd.s.at(i, i);
    for (int j = 0; j < n; ++j) proj.at(i, j) = sd.u.at(i, j);
  }
  t.proj = proj;
  for (const Int& d : t.factors_all)
    if (d > 1) t.invariant_factors.push_back(d);
  // representatives: uinv * (c, 0) over all coordinate tuples, identity first
  size_t total = t.size();
  t.reps.resize(total);
  for (size_t idx = 0; idx < total; ++idx) {
    IntVec coords = [&] {
      IntVec c(t.invariant_factors.size());
      size_t v = idx;
      for (size_t i = t.invariant_factors.size(); i-- > 0;) {
        c[i] = Int(v % size_t(t.invariant_factors[i]));
        v /= size_t(t.invariant_factors[i]);
      }
      return c;
    }();
    IntVec full(n, Int(0));
    size_t k = 0;
    for (int i = 0; i < r; ++i)
      if (t.factors_all[i] > 1) full[i] = coords[k++];
    IntVec rep = mul(uinv, full);
    t.reps[idx] = rep;
  }
  out.torsion = t;
  return out;
}

// Grading matrix A with ker_Z A = L_sat, rows canonicalized by Hermite form.
// Its rows form a basis of the saturated orthogonal lattice, so A maps Z^n
// onto Z^(n - rank).
inline IntMat grading_matrix(const Lattice& sat) {
  int n = sat.ambient_dim;
  IntMat bt = transpose(sat.basis);  // rank x n
  IntMat k = kernel_basis(bt);       // n x (n - rank), columns
  IntMat rows = transpose(k);
  HermiteData hd = hermite_normal_form(rows);
  std::vector<IntVec> keep;
  for (int i = 0; i < hd.h.rows; ++i)
    if (!is_zero(hd.h.row(i))) keep.push_back(hd.h.row(i));
  IntMat a = IntMat::from_rows(keep);
  if (a.rows == 0) a = IntMat(0, n);
  return a;
}

inline bool row_equivalent(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols) return false;
  auto canon = [](const IntMat& m) {
    HermiteData hd = hermite_normal_form(m);
    std::vector<IntVec> keep;
    for (int i = 0; i < hd.h.rows; ++i)
      if (!is_zero(hd.h.row(i))) keep.push_back(hd.h.row(i));
    return IntMat::from_rows(keep);
  };
  IntMat ca = canon(a), cb = canon(b);
  return ca.rows == cb.rows && ca == cb;
}

// Formal partial character: exponents of roots of unity on the lattice basis.
// Carried for echo and validation only; cohomology dimensions over the chosen
// field never consult the values.
struct PartialCharacter {
  std::vector<Rat> values;  // one exponent in [0,1) per basis column
};

// Fixed resolution of fine degrees: (torsion element, A-degree) <-> coset of L.
struct GradingContext {
  Lattice lattice;
  Lattice sat;
  TorsionGroup torsion;
  IntMat a;  // grading matrix, d' x n

  int n() const { return lattice.ambient_dim; }
  int adim() const { return a.rows; }

  static GradingContext make(const Lattice& l) {
    GradingContext g;
    g.lattice = l;
    SaturationData sd = saturate(l);
    g.sat = sd.sat;
    g.torsion = sd.torsion;
    g.a = grading_matrix(g.sat);
    return g;
  }

  // toric context with a prescribed grading matrix; lattice = ker_Z A
  static GradingContext make_toric(const IntMat& a) {
    GradingContext g;
    g.a = a;
    IntMat k = kernel_basis(a);
    g.lattice.ambient_dim = a.cols;
    g.lattice.basis = k;
    g.sat = g.lattice;
    g.torsion.proj = IntMat(0, a.cols);
    g.torsion.reps = {IntVec(a.cols, Int(0))};
    return g;
  }

  std::pair<IntVec, IntVec> torsion_and_degree(const IntVec& u) const {
    return {torsion.element_of(u), mul(a, u)};
  }

  // a preimage exponent with the given torsion class and A-degree, if the
  // degree lies in ZA
  std::optional<IntVec> resolve(const IntVec& t, const IntVec& adeg) const {
    auto u0 = solve(a, adeg);
    if (!u0) return std::nullopt;
    IntVec cur = torsion.element_of(*u0);
    size_t want = torsion.index_of(t);
    size_t have = torsion.index_of(cur);
    if (want == have) return *u0;
    return *u0 - torsion.rep_at(have) + torsion.rep_at(want);
  }
};

}  // namespace semicoh
