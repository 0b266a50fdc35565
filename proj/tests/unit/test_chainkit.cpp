#include "doctest.h"

#include "cychom/chainkit.hpp"
#include "cychom/exactlin.hpp"

using namespace cychom;

namespace {

Algebra rationals() { return diagonal_algebra(1); }

}  // namespace

TEST_CASE("cyclic operators on small algebras") {
  Algebra q = rationals();
  auto ops0 = cyclic_operators(q, 0);
  CHECK(ops0.t == SparseMat::identity(1));
  CHECK(ops0.N == SparseMat::identity(1));
  CHECK(ops0.b.rows() == 0);
  auto ops1 = cyclic_operators(q, 1);
  CHECK(ops1.b.column(0).is_zero());
  CHECK(ops1.bprime.column(0) == SparseVec::unit(0));
  Algebra dual = truncated_polynomial(2);
  auto d1 = cyclic_operators(dual, 1);
  CHECK(d1.b.column(3).is_zero());       // x⊗x
  CHECK(d1.bprime.column(3).is_zero());
}

TEST_CASE("bicomplex identities") {
  std::vector<Algebra> algs = {rationals(), diagonal_algebra(2), truncated_polynomial(2),
                               function_algebra_of_group(Group::cyclic(3)).alg, matrix_algebra(rationals(), 2)};
  for (const auto& a : algs) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (a.dim() > 3 && n > 2) continue;
      auto ops = cyclic_operators(a, n);
      SparseMat one_minus_t_low = SparseMat::identity(ops.b.rows()) - cyclic_t(a, n - 1);
      SparseMat one_minus_t = SparseMat::identity(ops.t.rows()) - ops.t;
      CHECK(ops.b * one_minus_t == one_minus_t_low * ops.bprime);
      CHECK(ops.bprime * ops.N == cyclic_norm(a, n - 1) * ops.b);
      if (n >= 2) {
        CHECK((hochschild_b(a, n - 1) * ops.b).is_zero());
        CHECK((bar_bprime(a, n - 1) * ops.bprime).is_zero());
      }
    }
    for (TotMode m : {TotMode::Full, TotMode::CC2, TotMode::CC1, TotMode::Bar}) {
      auto c = tot_cc(a, m, a.dim() > 3 ? 2 : 3);
      CHECK_FALSE(c.d_squared_failure().has_value());
    }
  }
}

TEST_CASE("cyclic homology oracles") {
  CHECK(homology_dims(tot_cc(rationals(), TotMode::Full, 4)) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(homology_dims(tot_cc(rationals(), TotMode::CC1, 4)) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(homology_dims(tot_cc(diagonal_algebra(2), TotMode::Full, 4)) == std::vector<std::size_t>{2, 0, 2, 0, 2});
  auto dual = truncated_polynomial(2);
  CHECK(homology_dims(tot_cc(dual, TotMode::CC2, 3)) == homology_dims(tot_cc(dual, TotMode::CC1, 3)));
  CHECK(homology_dims(tot_cc(rationals(), TotMode::Bar, 3)) == std::vector<std::size_t>{0, 0, 0, 0});
  ChainComplex zero({2, 3}, {SparseMat(0, 2), SparseMat(2, 3)}, false);
  CHECK(homology_dims(zero) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("connes S and homologous") {
  CyclicChain x = CyclicChain::zero(2, 1);
  x.columns[0] = SparseVec::unit(0);
  x.columns[1] = SparseVec::unit(0);
  CHECK(connes_S(x).is_zero());
  x.columns[2] = SparseVec::unit(0, Rational(5));
  auto s = connes_S(x);
  CHECK(s.degree == 0);
  CHECK(s.columns[0] == SparseVec::unit(0, Rational(5)));
  CHECK_THROWS(connes_S(CyclicChain::zero(1, 1)));

  Algebra a = diagonal_algebra(2);
  auto c = tot_cc(a, TotMode::Full, 3);
  SparseVec w = SparseVec::from_terms({{1, Rational(2)}, {5, Rational(-1)}, {9, Rational(3)}});
  SparseVec bdry = c.d(3).apply(w);
  SparseVec y = SparseVec::unit(0);
  SparseVec z0 = *homologous(y, y, c, 0);
  CHECK(z0.is_zero());
  auto cyc = kernel_basis(c.d(2));
  REQUIRE_FALSE(cyc.empty());
  SparseVec y2 = cyc[0];
  auto z = homologous(y2 + bdry, y2, c, 2);
  REQUIRE(z.has_value());
  CHECK(c.d(3).apply(*z) == bdry);
}

TEST_CASE("kill_contractible on trivial and direct sum cases") {
  // X = 0.
  ChainComplex z({1}, {SparseMat(0, 1)}, false);
  ChainComplex x0({0}, {SparseMat(0, 0)}, false);
  SplitSequence s{x0, z, z, {SparseMat(1, 0)}, {SparseMat::identity(1)}, {SparseMat(0, 1)}, {SparseMat::identity(1)},
                  {SparseMat(0, 0)}};
  auto r = kill_contractible(s);
  CHECK(r.all_pass());
  CHECK(r.sigma_tilde[0] == SparseMat::identity(1));
  // X = (Q --id--> Q) in degrees 1 -> 0, Z = Q in degree 0 with zero differential.
  ChainComplex X({1, 1}, {SparseMat(0, 1), SparseMat::identity(1)}, false);
  ChainComplex Y({2, 1}, {SparseMat(0, 2), SparseMat::from_dense({{Rational(1)}, {Rational(0)}})}, false);
  ChainComplex Z({1, 0}, {SparseMat(0, 1), SparseMat(1, 0)}, false);
  SplitSequence t;
  t.X = X;
  t.Y = Y;
  t.Z = Z;
  t.iota = {SparseMat::from_dense({{Rational(1)}, {Rational(0)}}), SparseMat::identity(1)};
  t.pi = {SparseMat::from_dense({{Rational(0), Rational(1)}}), SparseMat(0, 1)};
  t.rho = {SparseMat::from_dense({{Rational(1), Rational(0)}}), SparseMat::identity(1)};
  t.sigma = {SparseMat::from_dense({{Rational(0)}, {Rational(1)}}), SparseMat(1, 0)};
  t.h = {SparseMat::identity(1), SparseMat(0, 1)};
  CHECK(kill_contractible(t).all_pass());
  // Break (ri).
  t.rho[0] = SparseMat::from_dense({{Rational(2), Rational(0)}});
  try {
    kill_contractible(t);
    FAIL("expected identity violation");
  } catch (const IdentityViolation& e) {
    CHECK(e.label() == "ri");
    CHECK(e.degree() == 0);
  }
}

TEST_CASE("kill_contractible on random split sequences") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CAPTURE(seed);
    auto s = random_split_sequence(seed);
    auto r = kill_contractible(s);
    CHECK(r.all_pass());
  }
}

TEST_CASE("bar contraction and the bar split sequence") {
  Algebra q = rationals();
  auto h = bar_contraction(q, 3);
  CHECK(h[0].column(0) == SparseVec::unit(0));
  CHECK(check_bar_contraction(q, h, 3).pass);
  Algebra kz2 = function_algebra_of_group(Group::cyclic(2)).alg;
  CHECK(check_bar_contraction(kz2, bar_contraction(kz2, 3), 3).pass);
  Algebra nil = Algebra::from_table(BasedSpace({"x"}), {});
  CHECK_THROWS(bar_contraction(nil, 2));
  auto r = kill_contractible_dual(bar_split_sequence(kz2, 3));
  CHECK(r.all_pass());
  Algebra row = Algebra::from_table(BasedSpace({"p0", "p1", "i"}),
                                    {{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)}});
  CHECK(kill_contractible_dual(bar_split_sequence(row, 2)).all_pass());
}

TEST_CASE("matrix stability") {
  for (std::size_t n : {1, 2}) {
    auto ms = matrix_stability(rationals(), n, 2);
    for (const auto& c : ms.certificates) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.pass);
    }
  }
  auto ms = matrix_stability(diagonal_algebra(2), 2, 2);
  for (const auto& c : ms.certificates) CHECK(c.pass);
  // tr kills an off-diagonal single entry in degree 0.
  CHECK(trace_map(rationals(), 2, 0).column(matrix_index(2, 1, 0, 1, 0)).is_zero());
}

TEST_CASE("conjugation homotopy") {
  Algebra q = rationals();
  Algebra m = matrix_algebra(q, 2);
  SparseVec swap = SparseVec::from_terms({{matrix_index(2, 1, 0, 1, 0), Rational(1)}, {matrix_index(2, 1, 1, 0, 0), Rational(1)}});
  SparseVec diag = SparseVec::from_terms({{matrix_index(2, 1, 0, 0, 0), Rational(2)}, {matrix_index(2, 1, 1, 1, 0), Rational(1)}});
  for (const SparseVec& g : {*m.unit(), swap, diag}) {
    auto ch = conjugation_homotopy(q, 2, g, 2);
    CAPTURE(ch.certificates[0].witness);
    CHECK(ch.certificates[0].pass);
  }
  CHECK_THROWS(conjugation_homotopy(q, 2, SparseVec::unit(0), 1));
}
