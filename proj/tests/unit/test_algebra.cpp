#include "doctest.h"

#include "cychom/exactlin.hpp"
#include "cychom/structalg.hpp"

using namespace cychom;

TEST_CASE("tensor codec round trip and power maps") {
  MixedRadix r({2, 3, 4});
  CHECK(r.total() == 24);
  CHECK(r.encode({1, 2, 3}) == 23);
  CHECK(r.decode(17) == std::vector<std::size_t>{1, 1, 1});
  CHECK_THROWS(MixedRadix::power(1u << 16, 5));

  HopfAlgebra kz2 = function_algebra_of_group(Group::cyclic(2));
  SparseMat eps = kz2.coalg.counit_matrix();
  // ε(δ_1)⊗ε(δ_1) on δ_1⊗δ_1 (index 0 is the identity element).
  CHECK(apply_tensor_power(eps, 2, SparseVec::unit(0)) == SparseVec::unit(0));
  CHECK(apply_tensor_power(eps, 2, SparseVec::unit(3)).is_zero());
  SparseMat id = SparseMat::identity(2);
  SparseVec x = SparseVec::from_terms({{1, Rational(2)}, {6, Rational(-1, 2)}});
  CHECK(apply_tensor_power(id, 3, x) == x);
  CHECK(apply_tensor_power(SparseMat(2, 2), 3, x).is_zero());
  SparseMat f = SparseMat::from_dense({{Rational(1), Rational(2)}, {Rational(0), Rational(-1)}, {Rational(3), Rational(1)}});
  SparseMat g = SparseMat::from_dense({{Rational(1), Rational(0), Rational(1)}, {Rational(2), Rational(1), Rational(0)}});
  CHECK(apply_tensor_power(g * f, 3, x) == apply_tensor_power(g, 3, apply_tensor_power(f, 3, x)));
  CHECK(tensor_power_matrix(f, 2) * tensor_power_matrix(id, 2) == tensor_power_matrix(f, 2));
}

TEST_CASE("check_algebra on small examples") {
  Algebra q = Algebra::from_table(BasedSpace({"1"}), {{0, 0, 0, Rational(1)}});
  auto rq = check_algebra(q);
  CHECK(rq.associative);
  CHECK(rq.unital());
  Algebra nil = Algebra::from_table(BasedSpace({"x"}), {});
  auto rn = check_algebra(nil);
  CHECK(rn.associative);
  CHECK_FALSE(rn.left_unital());
  // Row shape over B = k^2, I = k: basis p0, p1, i with p0·i = i and I·M = 0.
  Algebra row = Algebra::from_table(BasedSpace({"p0", "p1", "i"}),
                                    {{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)}});
  auto rr = check_algebra(row);
  CHECK(rr.associative);
  CHECK(rr.left_unital());
  CHECK_FALSE(rr.right_unital());
  Algebra bad = Algebra::unchecked(BasedSpace({"a", "b"}),
                                   {SparseVec::unit(1), SparseVec(), SparseVec::unit(0), SparseVec()});
  auto rb = check_algebra(bad);
  CHECK_FALSE(rb.associative);
  CHECK_THROWS(Algebra::from_products(BasedSpace({"a", "b"}),
                                      {SparseVec::unit(1), SparseVec(), SparseVec::unit(0), SparseVec()}));
}

TEST_CASE("function algebras of groups are Hopf algebras") {
  for (const Group& g : Group::small_groups()) {
    HopfAlgebra h = function_algebra_of_group(g);
    CAPTURE(g.name());
    CHECK(check_hopf(h).ok());
    CHECK(check_coalgebra(h.coalg).ok());
    HopfAlgebra kg = group_algebra(g);
    CHECK(check_hopf(kg).ok());
  }
  HopfAlgebra triv = function_algebra_of_group(Group::cyclic(1));
  CHECK(triv.coalg.comult_basis(0) == SparseVec::unit(0));
  HopfAlgebra kz2 = function_algebra_of_group(Group::cyclic(2));
  // Δ(δ_g) = δ_1⊗δ_g + δ_g⊗δ_1 with 1 = index 0, g = index 1.
  CHECK(kz2.coalg.comult_basis(1) == SparseVec::from_terms({{1, Rational(1)}, {2, Rational(1)}}));
  HopfAlgebra s3 = function_algebra_of_group(Group::symmetric3());
  CHECK(s3.alg.dim() == 6);
  CHECK(s3.antipode * s3.antipode == SparseMat::identity(6));
}

TEST_CASE("small groups") {
  auto gs = Group::small_groups();
  CHECK(gs.size() == 14);
  CHECK(Group::symmetric3().conjugacy_class_count() == 3);
  CHECK(Group::dihedral4().conjugacy_class_count() == 5);
  CHECK(Group::quaternion8().conjugacy_class_count() == 5);
  CHECK_FALSE(Group::quaternion8().is_abelian());
  CHECK(Group::quaternion8().order() == 8);
  CHECK(Group::dihedral4().order() == 8);
  CHECK_THROWS(Group("bad", 2, {0, 0, 0, 0}));
}

TEST_CASE("matrix algebras") {
  Algebra q = diagonal_algebra(1);
  CHECK(matrix_algebra(q, 1).dim() == 1);
  Algebra m2 = matrix_algebra(q, 2);
  CHECK(m2.unit().has_value());
  CHECK(m2.mul_basis(matrix_index(2, 1, 0, 1, 0), matrix_index(2, 1, 1, 0, 0)) ==
        SparseVec::unit(matrix_index(2, 1, 0, 0, 0)));
  Algebra m2b = matrix_algebra(diagonal_algebra(2), 2);
  CHECK(m2b.dim() == 8);
  CHECK(check_algebra(m2b).unital());
  CHECK(check_algebra(truncated_polynomial(3)).unital());
}

TEST_CASE("coalgebra checks, cotraces, characters") {
  HopfAlgebra kz2 = function_algebra_of_group(Group::cyclic(2));
  CHECK(*kz2.coalg.grouplike() == SparseVec::from_terms({{0, Rational(1)}, {1, Rational(1)}}));
  CHECK(cotrace_basis(kz2.coalg).size() == 2);
  Coalgebra k = Coalgebra::from_table(BasedSpace({"1"}), {{0, 0, 0, Rational(1)}}, SparseVec::unit(0));
  CHECK(check_coalgebra(k).ok());
  Coalgebra broken = Coalgebra::unchecked(kz2.coalg.space(),
                                          {kz2.coalg.comult_basis(0), SparseVec::unit(1)}, kz2.coalg.counit());
  auto rep = check_coalgebra(broken);
  CHECK_FALSE(rep.ok());

  Comodule triv{1, {*kz2.coalg.grouplike()}, "trivial"};
  Comodule sign{1, {SparseVec::from_terms({{0, Rational(1)}, {1, Rational(-1)}})}, "sign"};
  CHECK(comodule_character(kz2.coalg, triv) == *kz2.coalg.grouplike());
  CHECK(comodule_character(kz2.coalg, sign) == sign.matrix[0]);
  CHECK(comodule_character(kz2.coalg, direct_sum(triv, sign)) ==
        comodule_character(kz2.coalg, triv) + comodule_character(kz2.coalg, sign));
  CHECK(enough_characters(kz2.coalg, {triv, sign}));
  CHECK(grouplike_candidates(kz2.coalg).size() == 2);

  HopfAlgebra s3 = function_algebra_of_group(Group::symmetric3());
  CHECK(cotrace_basis(s3.coalg).size() == 3);
  Comodule s3triv{1, {*s3.coalg.grouplike()}, "trivial"};
  CHECK_FALSE(enough_characters(s3.coalg, {s3triv}));

  HopfAlgebra gz2 = group_algebra(Group::cyclic(2));
  CHECK(cotrace_basis(gz2.coalg).size() == 2);
  Comodule deg0{1, {SparseVec::unit(0)}, "deg0"}, deg1{1, {SparseVec::unit(1)}, "deg1"};
  CHECK(enough_characters(gz2.coalg, {deg0, deg1}));
}

TEST_CASE("cotrace dimension of k^G counts conjugacy classes") {
  for (const Group& g : Group::small_groups()) {
    CAPTURE(g.name());
    HopfAlgebra h = function_algebra_of_group(g);
    auto basis = cotrace_basis(h.coalg);
    CHECK(basis.size() == g.conjugacy_class_count());
    for (const auto& c : basis) CHECK(is_cotrace(h.coalg, c));
  }
}
