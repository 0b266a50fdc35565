#include "doctest.h"

#include "cychom/exactlin.hpp"
#include "cychom/rowext.hpp"

using namespace cychom;

namespace {

Algebra field() { return diagonal_algebra(1); }

// B = k acting on I = k^r by the identity, ω = 0.
RowExtension triangular(std::size_t r) {
  AugmentedModule am = cocycle_module(field(), {SparseMat::identity(r)}, {SparseVec()});
  return row_extension(am, cocycle_section(r, 1));
}

bool all_pass(const std::vector<Certificate>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

void check_ring_invariants(const RowExtension& re) {
  const std::size_t md = re.ring.dim();
  for (const auto& i : re.ideal)
    for (std::size_t m = 0; m < md; ++m) CHECK(re.ring.mul(i, SparseVec::unit(m)).is_zero());
  for (std::size_t a = 0; a < md; ++a)
    for (std::size_t b = 0; b < md; ++b)
      CHECK(re.eps.apply(re.ring.mul_basis(a, b)) ==
            re.base.mul(re.eps.column(a), re.eps.column(b)));
}

}  // namespace

TEST_CASE("row extension of M = B is B") {
  Algebra b = truncated_polynomial(2);
  AugmentedModule am{b, 2, {b.left_mult_matrix(SparseVec::unit(0)), b.left_mult_matrix(SparseVec::unit(1))},
                     SparseMat::identity(2)};
  RowExtension re = row_extension(am, SparseMat::identity(2));
  CHECK(re.ideal_dim() == 0);
  CHECK(re.ring.mult_matrix() == b.mult_matrix());
  CHECK(re.omega_is_zero());
  auto kc = kernel_contraction(re, 2);
  CHECK(all_pass(kc.certificates));
  auto em = epsilon_chain_map(re, TotMode::Full, 3);
  CHECK(all_pass(em.certificates));
  for (std::size_t n = 0; n <= 3; ++n) CHECK(em.maps[n] == SparseMat::identity(em.maps[n].cols()));
}

TEST_CASE("triangular ring (x,i)(y,j) = (xy, xj)") {
  RowExtension re = triangular(1);
  check_ring_invariants(re);
  // adapted basis: i0, s(p0)
  CHECK(re.adapted.mul_basis(0, 0).is_zero());
  CHECK(re.adapted.mul_basis(0, 1).is_zero());
  CHECK(re.adapted.mul_basis(1, 0) == SparseVec::unit(0));
  CHECK(re.adapted.mul_basis(1, 1) == SparseVec::unit(1));
  CHECK(is_unitary(re));
  auto rep = check_algebra(re.ring);
  CHECK(rep.left_unit.has_value());
  CHECK_FALSE(rep.right_unit.has_value());
}

TEST_CASE("row extension rejects bad data") {
  AugmentedModule am = cocycle_module(field(), {SparseMat::identity(1)}, {SparseVec()});
  CHECK_THROWS_AS(row_extension(am, SparseMat::from_columns(2, {SparseVec::unit(0)})), std::invalid_argument);
  // zero action on I: ε(1·i) = 0 but 1·ε(i) = 1
  AugmentedModule bad = cocycle_module(field(), {SparseMat(1, 1)}, {SparseVec()});
  bad.eps = SparseMat::from_columns(1, {SparseVec::unit(0), SparseVec::unit(0)});
  CHECK(augmented_module_violation(bad).has_value());
  CHECK_THROWS_AS(row_extension(bad, cocycle_section(1, 1)), std::invalid_argument);
}

TEST_CASE("normalize_cocycle") {
  SUBCASE("omega already zero") {
    auto n = normalize_cocycle(triangular(2));
    CHECK(all_pass(n.certificates));
    for (const auto& l : n.lambda) CHECK(l.is_zero());
    CHECK(n.automorphism == SparseMat::identity(3));
  }
  SUBCASE("B = k, I = k, omega(1,1) = 1") {
    // The cocycle identity forces the zero action of B on I here.
    AugmentedModule am = cocycle_module(field(), {SparseMat(1, 1)}, {SparseVec::unit(0)});
    RowExtension re = row_extension(am, cocycle_section(1, 1));
    CHECK_FALSE(re.omega_is_zero());
    CHECK(re.omega[0] == SparseVec::unit(0));
    auto n = normalize_cocycle(re);
    CHECK(all_pass(n.certificates));
    CHECK(n.lambda[0] == SparseVec::unit(0, Rational(-1)));
    CHECK(n.normalized.omega_is_zero());
    // normalized product is the ω = 0 block form with zero action: only s·s = s survives
    CHECK(n.normalized.adapted.mul_basis(1, 1) == SparseVec::unit(1));
    CHECK(n.normalized.adapted.mul_basis(1, 0).is_zero());
  }
  SUBCASE("random cocycles over k², I = k") {
    Algebra b = diagonal_algebra(2);
    std::vector<SparseMat> act = {SparseMat::identity(1), SparseMat(1, 1)};
    auto space = cocycle_space(b, act);
    REQUIRE(!space.empty());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<SparseVec> omega(4);
      for (std::size_t k = 0; k < space.size(); ++k)
        for (std::size_t v = 0; v < 4; ++v) omega[v].add_scaled(space[k][v], Rational(trial - 3 + 2 * static_cast<long>(k)));
      RowExtension re = row_extension(cocycle_module(b, act, omega), cocycle_section(1, 2));
      check_ring_invariants(re);
      auto n = normalize_cocycle(re);
      CHECK(all_pass(n.certificates));
      CHECK(n.normalized.omega_is_zero());
    }
  }
  SUBCASE("no right unit") {
    // B = span{u} with u·u = 0 has no unit
    Algebra b = Algebra::from_table(BasedSpace({"u"}), {});
    AugmentedModule am = cocycle_module(b, {SparseMat(1, 1)}, {SparseVec()});
    RowExtension re = row_extension(am, cocycle_section(1, 1));
    CHECK_THROWS_AS(normalize_cocycle(re), std::invalid_argument);
  }
}

TEST_CASE("kernel contraction") {
  SUBCASE("degree 0 element i") {
    RowExtension re = triangular(1);
    auto kc = kernel_contraction(re, 0);
    // h(i) = -(i, e) with adapted codes i = 0, e = 1
    CHECK(kc.h[0].column(0) == SparseVec::unit(1, Rational(-1)));
    CHECK(kc.h[0].column(1).is_zero());
    CHECK(hochschild_b(re.adapted, 1).apply(kc.h[0].column(0)) == SparseVec::unit(0));
  }
  SUBCASE("B = k, I = k, D = 3") {
    auto kc = kernel_contraction(triangular(1), 3);
    CHECK(all_pass(kc.certificates));
  }
  SUBCASE("B = k, I = k^2, D = 3") {
    auto kc = kernel_contraction(triangular(2), 3);
    CHECK(all_pass(kc.certificates));
  }
  SUBCASE("non-unitary module is rejected") {
    AugmentedModule am = cocycle_module(field(), {SparseMat(1, 1)}, {SparseVec()});
    CHECK_THROWS_AS(kernel_contraction(row_extension(am, cocycle_section(1, 1)), 2), std::invalid_argument);
  }
}

TEST_CASE("epsilon chain map and homotopy equivalence") {
  Algebra b = diagonal_algebra(2);
  std::vector<SparseMat> act = {SparseMat::identity(1), SparseMat(1, 1)};
  RowExtension re = row_extension(cocycle_module(b, act, std::vector<SparseVec>(4)), cocycle_section(1, 2));
  for (TotMode mode : {TotMode::Full, TotMode::CC2, TotMode::CC1, TotMode::Bar})
    CHECK(all_pass(epsilon_chain_map(re, mode, 3).certificates));
  CHECK(homology_dims(tot_cc(re.adapted, TotMode::CC1, 3)) == homology_dims(tot_cc(b, TotMode::CC1, 3)));
  CHECK(homology_dims(tot_cc(re.adapted, TotMode::Full, 3)) == std::vector<std::size_t>{2, 0, 2, 0});
  KillResult k = kill_contractible(epsilon_split_sequence(re, 3));
  CHECK(k.all_pass());
}

TEST_CASE("random augmented modules") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CAPTURE(seed);
    auto [am, sigma] = random_augmented_module(seed);
    CHECK(am.mdim <= 4);
    RowExtension re = row_extension(am, sigma);
    check_ring_invariants(re);
    CHECK(is_unitary(re));
    auto n = normalize_cocycle(re);
    REQUIRE(all_pass(n.certificates));
    const RowExtension& z = n.normalized;
    CHECK(all_pass(kernel_contraction(z, 2).certificates));
    CHECK(all_pass(epsilon_chain_map(z, TotMode::Full, 2).certificates));
    CHECK(kill_contractible(epsilon_split_sequence(z, 2)).all_pass());
    CHECK(homology_dims(tot_cc(z.adapted, TotMode::CC1, 2)) == homology_dims(tot_cc(z.base, TotMode::CC1, 2)));
    CHECK(homology_dims(tot_cc(z.adapted, TotMode::Full, 2)) == homology_dims(tot_cc(z.base, TotMode::Full, 2)));
  }
}
