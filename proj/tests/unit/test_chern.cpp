#include "doctest.h"

#include "cychom/chern.hpp"

using namespace cychom;

namespace {

std::string failures(const std::vector<Certificate>& cs) {
  std::string s;
  for (const auto& c : cs)
    if (!c.pass) s += c.name + " [" + c.witness + "] ";
  return s;
}

SparseVec vec(std::initializer_list<std::pair<Index, long long>> t) {
  std::vector<SparseVec::Term> terms;
  for (auto [i, x] : t) terms.emplace_back(i, Rational(x));
  return SparseVec::from_terms(std::move(terms));
}

KSequence unit_sequence(const Algebra& a, std::size_t top) {
  KSequence x;
  SparseVec one = *a.unit();
  SparseVec p = one;
  for (std::size_t m = 0; m <= top; ++m) {
    if (m) p = tensor(p, one, a.dim());
    x.terms.push_back(p);
  }
  return x;
}

SparseVec trace(const Algebra& b, std::size_t size, const SparseVec& e) {
  SparseVec t;
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t k = 0; k < b.dim(); ++k) t.add_scaled(SparseVec::unit(k), e.get(matrix_index(size, b.dim(), s, s, k)));
  return t;
}

struct Bundle {
  ComoduleAlgebra ca;
  GaloisData g;
  StrongConnection ell;
  ESCoring es;
};

Bundle bundle(ComoduleAlgebra ca) {
  GaloisData g = galois_data(ca);
  StrongConnection ell = solve_strong_connection(g, ca);
  ESCoring es = es_coring(g, ca, ell);
  return Bundle{std::move(ca), std::move(g), std::move(ell), std::move(es)};
}

}  // namespace

TEST_CASE("character coefficients") {
  CHECK(character_coefficient(0) == Rational(1));
  CHECK(character_coefficient(1) == Rational(1));
  CHECK(character_coefficient(2) == Rational(-2));
  CHECK(character_coefficient(3) == Rational(-6));
  CHECK(character_coefficient(4) == Rational(12));
  CHECK(character_coefficient(5) == Rational(60));
}

TEST_CASE("abstract character of the unit sequence") {
  Algebra q = diagonal_algebra(1);
  auto ch0 = abstract_character(q, unit_sequence(q, 0), 0);
  CHECK(ch0.cycle.columns[0] == vec({{0, 1}}));
  auto ch1 = abstract_character(q, unit_sequence(q, 2), 1);
  CHECK_MESSAGE(ch1.all_pass(), failures(ch1.certificates));
  CHECK(ch1.cycle.columns[0] == vec({{0, -2}}));
  CHECK(ch1.cycle.columns[1] == vec({{0, 1}}));
  CHECK(ch1.cycle.columns[2] == vec({{0, 1}}));
  auto ch2 = abstract_character(q, unit_sequence(q, 4), 2);
  CHECK_MESSAGE(ch2.all_pass(), failures(ch2.certificates));
  CHECK(ch2.cycle.columns[0] == vec({{0, 12}}));
  CHECK(periodicity(q, ch2.cycle, ch1.cycle).certificate.pass);
}

TEST_CASE("sequence violations are named") {
  Algebra q = diagonal_algebra(1);
  KSequence x = unit_sequence(q, 2);
  x.terms[1] *= Rational(2);
  try {
    abstract_character(q, x, 1);
    FAIL("expected a violation");
  } catch (const KSequenceViolation& e) {
    CHECK(e.condition() == "d_i x_m = x_{m-1}");
    CHECK(e.m() == 1);
  }
  // t fails: x_1 = e_0⊗e_1 over k² is not rotation invariant.
  Algebra k2 = diagonal_algebra(2);
  KSequence y{{vec({{0, 1}}), vec({{1, 1}})}};
  auto certs = ksequence_certificates(k2, y);
  CHECK_FALSE(certs[1].pass);
  CHECK_THROWS_AS(abstract_character(k2, KSequence{{vec({{0, 1}}), vec({{1, 1}}), vec({})}}, 1), KSequenceViolation);
}

TEST_CASE("idempotent Chern character") {
  Algebra q = diagonal_algebra(1);
  SUBCASE("e = 1 in M_1") {
    auto ch = idempotent_chern(q, 1, vec({{0, 1}}), 0);
    CHECK(ch.base.cycle.columns[0] == vec({{0, 1}}));
  }
  SUBCASE("rank-one projector in M_2") {
    SparseVec e = vec({{matrix_index(2, 1, 0, 0, 0), 1}});
    auto ch0 = idempotent_chern(q, 2, e, 0);
    CHECK(ch0.base.cycle.columns[0] == vec({{0, 1}}));
    auto ch1 = idempotent_chern(q, 2, e, 1);
    CHECK_MESSAGE(ch1.base.all_pass(), failures(ch1.base.certificates));
    CHECK(ch1.base.cycle == abstract_character(q, unit_sequence(q, 2), 1).cycle);
    CHECK(periodicity(q, ch1.base.cycle, ch0.base.cycle).certificate.pass);
    CHECK(periodicity(matrix_algebra(q, 2), ch1.upper.cycle, ch0.upper.cycle).certificate.pass);
  }
  SUBCASE("conjugate idempotents have homologous characters") {
    SparseVec e = vec({{matrix_index(2, 1, 0, 0, 0), 1}});
    SparseVec e2 = vec({{matrix_index(2, 1, 0, 0, 0), 1}, {matrix_index(2, 1, 0, 1, 0), -1}});
    Algebra m2 = matrix_algebra(q, 2);
    auto c1 = idempotent_chern(q, 2, e, 1), c2 = idempotent_chern(q, 2, e2, 1);
    CHECK(c1.upper.cycle != c2.upper.cycle);
    auto w = homologous(c1.upper.cycle.to_tot(), c2.upper.cycle.to_tot(), tot_cc(m2, TotMode::Full, 2), 2);
    REQUIRE(w.has_value());
    CHECK_FALSE(w->is_zero());
  }
  SUBCASE("over k²") {
    Algebra k2 = diagonal_algebra(2);
    // diag(e_0, 1) in M_2(k²)
    SparseVec e = vec({{matrix_index(2, 2, 0, 0, 0), 1}, {matrix_index(2, 2, 1, 1, 0), 1}, {matrix_index(2, 2, 1, 1, 1), 1}});
    auto ch = idempotent_chern(k2, 2, e, 1);
    CHECK_MESSAGE(ch.base.all_pass(), failures(ch.base.certificates));
    CHECK(ch.base.cycle.columns[2] == vec({{0, 2}, {1, 1}}));
  }
  CHECK_THROWS_AS(idempotent_chern(q, 1, vec({{0, 2}}), 0), NotIdempotent);
}

TEST_CASE("Chern-Weil chains") {
  SUBCASE("A = H = k^Z2, c = sign") {
    Bundle bd = bundle(hopf_self_coaction(Group::cyclic(2)));
    SparseVec c = vec({{0, 1}, {1, -1}});
    SparseVec x0 = chw_chain(bd.es, bd.ca, bd.ell.ell, c, 0);
    SparseVec lc = bd.ell.ell.apply(c);
    CHECK(bd.es.coords.embed(x0) == flip(lc, 2));
    auto ch = chern_weil(bd.es, bd.ca, bd.ell.ell, c, 0);
    CHECK(ch.base.cycle.columns[0] == vec({{0, 1}}));
  }
  SUBCASE("grouplike gives the unit character") {
    Bundle bd = bundle(z4_over_z2());
    SparseVec e = bd.ca.grouplike();
    SparseVec x0 = chw_chain(bd.es, bd.ca, bd.ell.ell, e, 0);
    SparseVec one = *bd.ca.alg.unit();
    CHECK(bd.es.coords.embed(x0) == tensor(one, one, 4));
    auto ch = chern_weil(bd.es, bd.ca, bd.ell.ell, e, 1);
    const Algebra& b = bd.g.inv.base;
    CHECK(ch.base.cycle == idempotent_chern(b, 1, *b.unit(), 1).base.cycle);
  }
  SUBCASE("Z4 bundle, sign character") {
    Bundle bd = bundle(z4_over_z2());
    SparseVec c = vec({{0, 1}, {1, -1}});
    auto ch0 = chern_weil(bd.es, bd.ca, bd.ell.ell, c, 0);
    auto ch1 = chern_weil(bd.es, bd.ca, bd.ell.ell, c, 1);
    CHECK_MESSAGE(ch1.upper.all_pass(), failures(ch1.upper.certificates));
    CHECK_MESSAGE(ch1.base.all_pass(), failures(ch1.base.certificates));
    CHECK(periodicity(bd.g.inv.base, ch1.base.cycle, ch0.base.cycle).certificate.pass);
    CHECK(periodicity(bd.es.ring.ring, ch1.upper.cycle, ch0.upper.cycle).certificate.pass);
    KSequence up;
    for (std::size_t m = 0; m <= 4; ++m) up.terms.push_back(chw_chain(bd.es, bd.ca, bd.ell.ell, c, m));
    auto certs = ksequence_certificates(bd.es.ring.ring, up);
    CHECK(certs.size() == 9);
    CHECK_MESSAGE(failures(certs).empty(), failures(certs));
  }
  SUBCASE("non-cotrace rejected") {
    Bundle bd = bundle(hopf_self_coaction(Group::symmetric3()));
    CHECK_THROWS_AS(chw_chain(bd.es, bd.ca, bd.ell.ell, SparseVec::unit(1), 0), std::invalid_argument);
  }
}

TEST_CASE("associated idempotent") {
  SUBCASE("trivial comodule") {
    Bundle bd = bundle(z4_over_z2());
    auto ai = associated_idempotent(bd.g, bd.ca, bd.ell.ell, line_comodule(bd.ca.grouplike(), "trivial"));
    const Algebra& b = bd.g.inv.base;
    CHECK(ai.size == b.dim());
    CHECK(trace(b, ai.size, ai.matrix) == *b.unit());
  }
  SUBCASE("sign over k") {
    Bundle bd = bundle(hopf_self_coaction(Group::cyclic(2)));
    auto ai = associated_idempotent(bd.g, bd.ca, bd.ell.ell, sign_comodule());
    CHECK(ai.size == 1);
    CHECK(ai.matrix == vec({{0, 1}}));
  }
  SUBCASE("sign over the Z4 bundle has rank one in each fibre") {
    Bundle bd = bundle(z4_over_z2());
    auto ai = associated_idempotent(bd.g, bd.ca, bd.ell.ell, sign_comodule());
    CHECK(ai.size == 2);
    CHECK(trace(bd.g.inv.base, ai.size, ai.matrix) == *bd.g.inv.base.unit());
    CHECK_MESSAGE(failures(ai.certificates).empty(), failures(ai.certificates));
  }
  SUBCASE("trace powers reproduce the direct expression") {
    Bundle bd = bundle(z4_over_z2());
    Comodule v = sign_comodule();
    auto ai = associated_idempotent(bd.g, bd.ca, bd.ell.ell, v);
    const Algebra& b = bd.g.inv.base;
    SparseVec e = ai.matrix;
    SparseVec p = e;
    for (std::size_t m = 0; m <= 3; ++m) {
      if (m) p = tensor(p, e, ai.size * ai.size * b.dim());
      CHECK(trace_map(b, ai.size, m).apply(p) == chern_galois_direct(bd.g, bd.ca, bd.ell.ell, v, m));
    }
  }
}

TEST_CASE("factorization diagram") {
  for (auto ca : {hopf_self_coaction(Group::cyclic(2)), z4_over_z2()}) {
    Bundle bd = bundle(ca);
    for (std::size_t n = 0; n <= 1; ++n) {
      auto rep = verify_factorization(bd.g, bd.ca, bd.ell.ell, sign_comodule(), n);
      CHECK_MESSAGE(rep.all_pass(), failures(rep.certificates));
    }
    auto triv = verify_factorization(bd.g, bd.ca, bd.ell.ell, line_comodule(bd.ca.grouplike(), "trivial"), 0);
    CHECK(triv.all_pass());
    CHECK(triv.chern_weil.columns[0] == *bd.g.inv.base.unit());
  }
}

TEST_CASE("connection independence") {
  Bundle bd = bundle(z4_over_z2());
  Comodule sign = sign_comodule();
  SparseVec chi = comodule_character(bd.ca.coalg, sign);
  SUBCASE("same connection") {
    auto rep = connection_independence(bd.g, bd.ca, bd.ell.ell, bd.ell.ell, chi, {sign}, 0);
    CHECK(rep.verdict == Verdict::Homologous);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->is_zero());
  }
  SUBCASE("distinct connections") {
    auto space = strong_connection_space(bd.g, bd.ca, false);
    REQUIRE(!space.directions.empty());
    SparseMat ell2 = space.particular + space.directions.back();
    REQUIRE(ell2 != bd.ell.ell);
    CHECK(failures(check_strong_connection(bd.g, bd.ca, ell2, false)).empty());
    Comodule triv = line_comodule(bd.ca.grouplike(), "trivial");
    for (std::size_t n = 0; n <= 1; ++n) {
      auto rep = connection_independence(bd.g, bd.ca, bd.ell.ell, ell2, chi, {triv, sign}, n);
      CHECK(rep.verdict == Verdict::Homologous);
      CHECK_MESSAGE(failures(rep.certificates).empty(), failures(rep.certificates));
    }
  }
  SUBCASE("incomplete comodule list") {
    auto space = strong_connection_space(bd.g, bd.ca, false);
    SparseMat ell2 = space.particular + space.directions.front();
    auto rep = connection_independence(bd.g, bd.ca, bd.ell.ell, ell2, chi, {}, 0);
    CHECK(rep.verdict == Verdict::NotDecidable);
  }
}
