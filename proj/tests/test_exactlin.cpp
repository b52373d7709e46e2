#include <catch2/catch_amalgamated.hpp>

#include "semicoh/feasible.hpp"
#include "semicoh/lattice.hpp"

#include <random>

using namespace semicoh;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("hermite normal form basics") {
  auto [h, u] = hermite_normal_form(IntMat::identity(3));
  CHECK(h == IntMat::identity(3));
  CHECK(u == IntMat::identity(3));

  IntMat d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  auto hd = hermite_normal_form(d);
  CHECK(hd.h == d);
  CHECK(hd.u == IntMat::identity(2));
}

TEST_CASE("hermite normal form random oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat m = random_matrix(rng, 3, 3, -5, 5);
    auto [h, u] = hermite_normal_form(m);
    CHECK(mul(u, m) == h);
    Int du = det(u);
    CHECK((du == 1 || du == -1));
    // echelon shape: pivots move right, entries below are zero
    int last = -1;
    for (int i = 0; i < h.rows; ++i) {
      int p = -1;
      for (int j = 0; j < h.cols; ++j)
        if (h.at(i, j) != 0) { p = j; break; }
      if (p >= 0) {
        CHECK(p > last);
        CHECK(h.at(i, p) > 0);
        last = p;
      }
    }
  }
}

TEST_CASE("smith normal form") {
  SECTION("zero matrix") {
    IntMat z(2, 3);
    auto sd = smith_normal_form(z);
    CHECK(sd.s == z);
    CHECK(sd.u == IntMat::identity(2));
    CHECK(sd.v == IntMat::identity(3));
  }
  SECTION("diag(2,3) -> diag(1,6)") {
    IntMat d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    auto sd = smith_normal_form(d);
    CHECK(sd.s.at(0, 0) == 1);
    CHECK(sd.s.at(1, 1) == 6);
    CHECK(mul(mul(sd.u, d), sd.v) == sd.s);
  }
  SECTION("elementary divisors of the Z/5 demo basis") {
    IntMat m = IntMat::from_cols({int_vec({2, 0, -3, 0}), int_vec({1, -5, 1, 5})});
    auto sd = smith_normal_form(m);
    IntVec dg = sd.diag();
    REQUIRE(dg.size() == 2);
    CHECK(dg[0] == 1);
    CHECK(dg[1] == 5);
  }
  SECTION("random transforms are unimodular") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      IntMat m = random_matrix(rng, 3, 4, -4, 4);
      auto sd = smith_normal_form(m);
      CHECK(mul(mul(sd.u, m), sd.v) == sd.s);
      CHECK(abs(det(sd.u)) == 1);
      CHECK(abs(det(sd.v)) == 1);
      IntVec dg = sd.diag();
      for (size_t i = 0; i + 1 < dg.size(); ++i) {
        if (dg[i + 1] != 0) {
          if (dg[i] == 0) CHECK(dg[i + 1] == 0);
          else CHECK(dg[i + 1] % dg[i] == 0);
        }
      }
    }
  }
}

TEST_CASE("saturation of the Z/5 demo lattice") {
  Lattice l = Lattice::from_columns(4, {int_vec({2, 0, -3, 0}), int_vec({1, -5, 1, 5})});
  auto sd = saturate(l);
  CHECK(sd.sat.rank() == 2);
  CHECK(sd.torsion.order() == 5);

  // published saturation generators (third entry corrected: (-1,-1,2,2) is not
  // in the rational span of L, (-1,-1,2,1) is) span the same sublattice
  Lattice published = Lattice::from_columns(
      4, {int_vec({1, -1, -1, 1}), int_vec({0, -2, 1, 2}), int_vec({-1, -1, 2, 1}),
          int_vec({-2, 0, 3, 0})});
  CHECK(sd.sat.same_lattice(published));

  // representative list: 5 distinct classes, identity first, closed under addition
  REQUIRE(sd.torsion.reps.size() == 5);
  CHECK(is_zero(sd.torsion.reps[0]));
  for (const IntVec& r : sd.torsion.reps) CHECK(sd.sat.contains(r));
  // the published representatives hit all five classes
  std::vector<IntVec> pub = {int_vec({0, 0, 0, 0}), int_vec({-1, 1, 1, -1}),
                             int_vec({0, 2, -1, -2}), int_vec({-1, 3, 0, -3}),
                             int_vec({0, 4, -2, -4})};
  std::set<size_t> classes;
  for (const IntVec& p : pub) classes.insert(sd.torsion.index_of(sd.torsion.element_of(p)));
  CHECK(classes.size() == 5);
  // each published representative is congruent to ours modulo L
  for (const IntVec& p : pub) {
    size_t idx = sd.torsion.index_of(sd.torsion.element_of(p));
    CHECK(l.contains(p - sd.torsion.rep_at(idx)));
  }
}

TEST_CASE("saturation trivial cases") {
  Lattice z = Lattice::from_columns(3, {});
  auto sd = saturate(z);
  CHECK(sd.sat.rank() == 0);
  CHECK(sd.torsion.order() == 1);

  Lattice two = Lattice::from_columns(1, {int_vec({2})});
  auto s2 = saturate(two);
  CHECK(s2.sat.rank() == 1);
  CHECK(s2.sat.contains(int_vec({1})));
  REQUIRE(s2.torsion.invariant_factors.size() == 1);
  CHECK(s2.torsion.invariant_factors[0] == 2);
}

TEST_CASE("grading matrix") {
  SECTION("Z/5 demo lattice") {
    Lattice l = Lattice::from_columns(4, {int_vec({2, 0, -3, 0}), int_vec({1, -5, 1, 5})});
    auto sd = saturate(l);
    IntMat a = grading_matrix(sd.sat);
    CHECK(a.rows == 2);
    IntMat expect = IntMat::from_rows({int_vec({3, 1, 2, 0}), int_vec({0, 1, 0, 1})});
    CHECK(row_equivalent(a, expect));
    for (int j = 0; j < sd.sat.basis.cols; ++j) CHECK(is_zero(mul(a, sd.sat.basis.col(j))));
  }
  SECTION("zero lattice in Z^2") {
    Lattice l = Lattice::from_columns(2, {});
    auto sd = saturate(l);
    IntMat a = grading_matrix(sd.sat);
    CHECK(row_equivalent(a, IntMat::identity(2)));
  }
  SECTION("kernel of the Segre matrix") {
    IntMat segre = IntMat::from_rows(
        {int_vec({0, 1, 1, 0}), int_vec({0, 0, 1, 1}), int_vec({1, 1, 1, 1})});
    Lattice l;
    l.ambient_dim = 4;
    l.basis = kernel_basis(segre);
    CHECK(l.rank() == 1);
    auto sd = saturate(l);
    CHECK(sd.torsion.order() == 1);
    IntMat a = grading_matrix(sd.sat);
    CHECK(row_equivalent(a, segre));
  }
}

TEST_CASE("torsion and degree is constant on cosets and additive") {
  Lattice l = Lattice::from_columns(4, {int_vec({2, 0, -3, 0}), int_vec({1, -5, 1, 5})});
  GradingContext g = GradingContext::make(l);

  // the published generator of T
  IntVec xi = int_vec({-1, 1, 1, -1});
  CHECK(!is_zero(g.torsion.element_of(xi)));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntVec u(4), c(2);
    for (auto& x : u) x = d(rng);
    for (auto& x : c) x = d(rng);
    IntVec shift = mul(l.basis, c);
    auto [t1, a1] = g.torsion_and_degree(u);
    auto [t2, a2] = g.torsion_and_degree(u + shift);
    CHECK(t1 == t2);
    CHECK(a1 == a2);
    IntVec w(4);
    for (auto& x : w) x = d(rng);
    auto [tw, aw] = g.torsion_and_degree(w);
    auto [ts, as] = g.torsion_and_degree(u + w);
    CHECK(ts == g.torsion.add(t1, tw));
    CHECK(as == a1 + aw);
  }
}

TEST_CASE("coset feasibility") {
  SECTION("zero vector always feasible") {
    Lattice l = Lattice::from_columns(3, {int_vec({1, -2, 1})});
    IntVec u(3, Int(0));
    auto out = coset_feasible(l, u, {0, 0, 0});
    CHECK(out.status == Certainty::True);
  }
  SECTION("Segre membership of (0,1,0)") {
    IntMat segre = IntMat::from_rows(
        {int_vec({0, 1, 1, 0}), int_vec({0, 0, 1, 1}), int_vec({1, 1, 1, 1})});
    Lattice l;
    l.ambient_dim = 4;
    l.basis = kernel_basis(segre);
    // preimage of (0,1,0): e3 - e2
    IntVec u = int_vec({0, -1, 1, 0});
    CHECK(mul(segre, u) == int_vec({0, 1, 0}));

    auto none = coset_feasible(l, u, {0, 0, 0, 0});
    CHECK(none.status == Certainty::False);

    auto a1 = coset_feasible(l, u, {1, 0, 0, 0});
    REQUIRE(a1.status == Certainty::True);
    const IntVec& v = a1.witness;
    CHECK(mul(segre, v) == int_vec({0, 1, 0}));
    for (int i = 1; i < 4; ++i) CHECK(v[i] >= 0);
  }
  SECTION("monotone in free and invariant under lattice shifts") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    Lattice l = Lattice::from_columns(4, {int_vec({2, 0, -3, 0}), int_vec({1, -5, 1, 5})});
    for (int trial = 0; trial < 60; ++trial) {
      IntVec u(4);
      for (auto& x : u) x = d(rng);
      std::vector<char> fr(4, 0);
      fr[trial % 4] = 1;
      auto base = coset_feasible(l, u, {0, 0, 0, 0});
      auto wide = coset_feasible(l, u, fr);
      REQUIRE(base.status != Certainty::Inconclusive);
      REQUIRE(wide.status != Certainty::Inconclusive);
      if (base.status == Certainty::True) CHECK(wide.status == Certainty::True);

      IntVec c(2);
      for (auto& x : c) x = d(rng);
      IntVec u2 = u + mul(l.basis, c);
      auto shifted = coset_feasible(l, u2, fr);
      CHECK(shifted.status == wide.status);
    }
  }
  SECTION("brute-force cross check on the Segre kernel line") {
    IntMat segre = IntMat::from_rows(
        {int_vec({0, 1, 1, 0}), int_vec({0, 0, 1, 1}), int_vec({1, 1, 1, 1})});
    Lattice l;
    l.ambient_dim = 4;
    l.basis = kernel_basis(segre);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
      IntVec u(4);
      for (auto& x : u) x = d(rng);
      auto fast = coset_feasible(l, u, {0, 0, 0, 0});
      bool slow = false;
      IntVec b = l.basis.col(0);
      for (int t = -10; t <= 10 && !slow; ++t) {
        bool ok = true;
        for (int i = 0; i < 4; ++i)
          if (u[i] + t * b[i] < 0) { ok = false; break; }
        slow = ok;
      }
      REQUIRE(fast.status != Certainty::Inconclusive);
      CHECK((fast.status == Certainty::True) == slow);
    }
  }
}

TEST_CASE("fiber feasibility") {
  // numerical semigroup <2,3>: 1 is a gap, everything from 2 on is present
  IntMat a(1, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 3;
  CHECK(fiber_feasible(a, int_vec({1}), {0, 0}).status == Certainty::False);
  CHECK(fiber_feasible(a, int_vec({2}), {0, 0}).status == Certainty::True);
  CHECK(fiber_feasible(a, int_vec({7}), {0, 0}).status == Certainty::True);
  // localizing at the generator of degree 2 fills the gaps
  CHECK(fiber_feasible(a, int_vec({1}), {1, 0}).status == Certainty::True);
}
