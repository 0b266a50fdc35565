#include "cychom/galois.hpp"

#include <algorithm>
#include <functional>

#include "cychom/exactlin.hpp"

namespace cychom {

namespace {

void check_equal(Certificate& c, const std::string& where, const SparseMat& lhs, const SparseMat& rhs) {
  if (!c.pass || lhs == rhs) return;
  c.pass = false;
  c.witness = where + ": " + matrix_witness(lhs, rhs);
}

void check_vec(Certificate& c, const std::string& where, const SparseVec& lhs, const SparseVec& rhs) {
  if (!c.pass || lhs == rhs) return;
  c.pass = false;
  c.witness = where;
}

SparseMat matrix_of(std::size_t rows, std::size_t cols, const std::function<SparseVec(std::size_t)>& col) {
  std::vector<SparseVec> cs;
  cs.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) cs.push_back(col(j));
  return SparseMat::from_columns(rows, std::move(cs));
}

// x ↦ x⊗e for x in A.
SparseMat tensor_grouplike(std::size_t da, std::size_t dc, const SparseVec& e) {
  return matrix_of(da * dc, da, [&](std::size_t i) {
    std::vector<SparseVec::Term> t;
    for (const auto& [c, x] : e) t.emplace_back(i * dc + c, x);
    return SparseVec::from_sorted(std::move(t));
  });
}

SparseVec unit_tensor(const SparseVec& one, const SparseVec& c, std::size_t cdim) { return tensor(one, c, cdim); }

}  // namespace

const SparseVec& ComoduleAlgebra::grouplike() const {
  if (hopf) {
    const auto& u = hopf->alg.unit();
    if (u) return *u;
  }
  const auto& g = coalg.grouplike();
  if (!g) throw std::invalid_argument("coalgebra has no grouplike element");
  return *g;
}

ComoduleAlgebra comodule_algebra(Algebra a, Coalgebra c,
                                 const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries,
                                 std::optional<HopfAlgebra> hopf, std::string name) {
  const std::size_t da = a.dim(), dc = c.dim();
  std::vector<std::vector<SparseVec::Term>> cols(da);
  for (const auto& [i, j, k, x] : entries) {
    if (i >= da || j >= da || k >= dc) throw std::invalid_argument("coaction entry index out of range");
    cols[i].emplace_back(j * dc + k, x);
  }
  std::vector<SparseVec> vs;
  for (auto& t : cols) vs.push_back(SparseVec::from_terms(std::move(t)));
  ComoduleAlgebra ca{std::move(a), std::move(c), SparseMat::from_columns(da * dc, std::move(vs)), std::move(hopf),
                     std::move(name)};
  if (auto v = comodule_algebra_violation(ca)) throw std::invalid_argument(*v);
  return ca;
}

std::optional<std::string> comodule_algebra_violation(const ComoduleAlgebra& ca) {
  const std::size_t da = ca.adim(), dc = ca.cdim();
  if (ca.coaction.rows() != da * dc || ca.coaction.cols() != da) return "coaction has the wrong shape";
  if (!ca.alg.unit()) return "comodule algebra must be unital";
  const SparseVec* e = nullptr;
  try {
    e = &ca.grouplike();
  } catch (const std::invalid_argument& ex) {
    return std::string(ex.what());
  }
  SparseMat id_a = SparseMat::identity(da);
  SparseMat lhs = kron(ca.coaction, SparseMat::identity(dc)) * ca.coaction;
  SparseMat rhs = kron(id_a, ca.coalg.comult_matrix()) * ca.coaction;
  if (lhs != rhs) return "coaction is not coassociative: " + matrix_witness(lhs, rhs);
  if (kron(id_a, ca.coalg.counit_matrix()) * ca.coaction != id_a) return "coaction is not counital";
  const SparseVec& one = *ca.alg.unit();
  if (ca.coaction.apply(one) != tensor(one, *e, dc)) return "coaction does not send 1 to 1⊗e";
  if (ca.hopf) {
    const Algebra& h = ca.hopf->alg;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        SparseVec prod;
        for (const auto& [u, x] : ca.coaction.column(i))
          for (const auto& [v, y] : ca.coaction.column(j)) {
            SparseVec left = ca.alg.mul_basis(u / dc, v / dc), right = h.mul_basis(u % dc, v % dc);
            prod.add_scaled(tensor(left, right, dc), x * y);
          }
        if (prod != ca.coaction.apply(ca.alg.mul_basis(i, j)))
          return "coaction is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  }
  return std::nullopt;
}

Invariants invariants(const ComoduleAlgebra& ca) {
  const std::size_t da = ca.adim(), dc = ca.cdim();
  SparseMat k = ca.coaction - tensor_grouplike(da, dc, ca.grouplike());
  std::vector<SparseVec> basis = kernel_basis(k);
  SubspaceCoords sc(da, basis);
  const std::size_t db = basis.size();
  std::vector<SparseVec> prods;
  for (std::size_t s = 0; s < db; ++s)
    for (std::size_t t = 0; t < db; ++t) {
      auto c = sc.coords(ca.alg.mul(basis[s], basis[t]));
      if (!c) throw std::logic_error("invariants are not closed under the product");
      prods.push_back(*c);
    }
  auto one = sc.coords(*ca.alg.unit());
  if (!one) throw std::logic_error("unit is not invariant");
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < db; ++s) {
    // Reuse the A label when the basis vector is a single basis element.
    const auto& v = basis[s];
    labels.push_back(v.size() == 1 && v.terms()[0].second.is_one() ? ca.alg.space().label(v.terms()[0].first)
                                                                    : "b" + std::to_string(s));
  }
  Algebra b = Algebra::from_products(BasedSpace(labels), std::move(prods), *one);
  return Invariants{std::move(b), SparseMat::from_columns(da, std::move(basis))};
}

SparseVec BalancedTensor::project(const SparseVec& x) const {
  SparseVec r = relations.reduce(x);
  std::vector<SparseVec::Term> t;
  for (const auto& [i, a] : r) {
    auto it = std::lower_bound(free_positions.begin(), free_positions.end(), i);
    t.emplace_back(static_cast<Index>(it - free_positions.begin()), a);
  }
  return SparseVec::from_sorted(std::move(t));
}

SparseVec BalancedTensor::lift(const SparseVec& q) const {
  std::vector<SparseVec::Term> t;
  for (const auto& [k, a] : q) t.emplace_back(free_positions.at(k), a);
  return SparseVec::from_sorted(std::move(t));
}

GaloisData canonical_map(const ComoduleAlgebra& ca) {
  if (auto v = comodule_algebra_violation(ca)) throw std::invalid_argument(*v);
  const std::size_t da = ca.adim(), dc = ca.cdim(), n2 = da * da;
  GaloisData g{invariants(ca), BalancedTensor{da, {}, Echelon(n2)}, {}, {}, {}, {}, {}, {}, {}};
  const SparseMat& emb = g.inv.embedding;
  std::vector<SparseVec> rels;
  for (std::size_t k = 0; k < emb.cols(); ++k) {
    const SparseVec& b = emb.column(k);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        SparseVec r = tensor(ca.alg.mul(SparseVec::unit(i), b), SparseVec::unit(j), da);
        r -= tensor(SparseVec::unit(i), ca.alg.mul(b, SparseVec::unit(j)), da);
        if (!r.is_zero()) {
          g.quotient.relations.insert(r);
          rels.push_back(std::move(r));
        }
      }
  }
  g.quotient.relations.make_reduced();
  for (Index c = 0; c < n2; ++c)
    if (!g.quotient.relations.is_pivot(c)) g.quotient.free_positions.push_back(c);

  g.can_tensor = matrix_of(da * dc, n2, [&](std::size_t col) {
    const std::size_t i = col / da, j = col % da;
    SparseVec out;
    for (const auto& [u, x] : ca.coaction.column(j))
      out.add_scaled(tensor(ca.alg.mul_basis(i, u / dc), SparseVec::unit(u % dc), dc), x);
    return out;
  });
  Certificate balanced{"can vanishes on B-balancing relations", true, ""};
  for (std::size_t r = 0; r < rels.size() && balanced.pass; ++r)
    if (!g.can_tensor.apply(rels[r]).is_zero()) {
      balanced.pass = false;
      balanced.witness = "relation " + std::to_string(r);
    }
  if (!balanced.pass) throw std::invalid_argument("coaction is not left B-linear; " + balanced.witness);
  const std::size_t qd = g.quotient.dim();
  g.can = matrix_of(da * dc, qd, [&](std::size_t k) { return g.can_tensor.column(g.quotient.free_positions[k]); });
  const std::size_t rk = rank(g.can);
  const std::size_t target = std::max(qd, da * dc);
  if (rk != target || qd != da * dc)
    throw NotGalois("canonical map is not bijective: dim A⊗_B A = " + std::to_string(qd) +
                        ", dim A⊗C = " + std::to_string(da * dc) + ", rank = " + std::to_string(rk) +
                        ", deficit = " + std::to_string(target - rk),
                    target - rk);
  g.can_inverse = *inverse(g.can);
  g.certificates.push_back(balanced);
  g.certificates.push_back({"can bijective", true, ""});
  return g;
}

void entwining(const ComoduleAlgebra& ca, GaloisData& g) {
  const std::size_t da = ca.adim(), dc = ca.cdim();
  const SparseVec& one = *ca.alg.unit();
  SparseMat id_a = SparseMat::identity(da);
  std::vector<SparseMat> right_mult;
  for (std::size_t a = 0; a < da; ++a) right_mult.push_back(kron(id_a, ca.alg.right_mult_matrix(SparseVec::unit(a))));
  g.psi = matrix_of(da * dc, dc * da, [&](std::size_t col) {
    const std::size_t c = col / da, a = col % da;
    SparseVec tau = g.quotient.lift(g.can_inverse.apply(unit_tensor(one, SparseVec::unit(c), dc)));
    return g.can_tensor.apply(right_mult[a].apply(tau));
  });
  auto inv = inverse(g.psi);
  if (!inv) {
    const std::size_t rk = rank(g.psi);
    throw NotGalois("entwining is not bijective: rank " + std::to_string(rk) + " of " + std::to_string(da * dc),
                    da * dc - rk);
  }
  g.psi_inverse = *inv;
  // λ(a) = ψ⁻¹(a⊗e); note ψ⁻¹ρ would collapse to e⊗a since ψ(e⊗a) = ρ(a).
  g.left_coaction = g.psi_inverse * tensor_grouplike(da, dc, ca.grouplike());
  Certificate coassoc{"left coaction coassociative", true, ""}, counit{"left coaction counital", true, ""};
  check_equal(coassoc, "λ", kron(ca.coalg.comult_matrix(), id_a) * g.left_coaction,
              kron(SparseMat::identity(dc), g.left_coaction) * g.left_coaction);
  check_equal(counit, "λ", kron(ca.coalg.counit_matrix(), id_a) * g.left_coaction, id_a);
  g.certificates.push_back({"psi bijective", true, ""});
  g.certificates.push_back(coassoc);
  g.certificates.push_back(counit);
}

GaloisData galois_data(const ComoduleAlgebra& ca) {
  GaloisData g = canonical_map(ca);
  entwining(ca, g);
  return g;
}

SparseVec translation_map(const GaloisData& g, const ComoduleAlgebra& ca, const SparseVec& c) {
  return g.can_inverse.apply(unit_tensor(*ca.alg.unit(), c, ca.cdim()));
}

std::vector<Certificate> check_translation_map(const GaloisData& g, const ComoduleAlgebra& ca) {
  const std::size_t da = ca.adim(), dc = ca.cdim(), qd = g.quotient.dim();
  const SparseVec& one = *ca.alg.unit();
  SparseMat mult = ca.alg.mult_matrix();
  SparseMat id_rho = kron(SparseMat::identity(da), ca.coaction);
  SparseMat lam_id = kron(g.left_coaction, SparseMat::identity(da));
  Certificate norm{"m∘τ = ε(-)1", true, ""}, right{"τ right colinear", true, ""}, left{"τ left colinear", true, ""};
  for (std::size_t c = 0; c < dc; ++c) {
    const std::string where = "basis element " + std::to_string(c);
    SparseVec tau = translation_map(g, ca, SparseVec::unit(c));
    SparseVec lift = g.quotient.lift(tau);
    check_vec(norm, where, mult.apply(lift), ca.coalg.counit().get(c) * one);
    // (id⊗ρ)τ(c) = τ(c_1)⊗c_2 in (A⊗_B A)⊗C
    SparseVec lhs;
    for (const auto& [code, x] : id_rho.apply(lift))
      lhs.add_scaled(tensor(g.quotient.project(SparseVec::unit(code / dc)), SparseVec::unit(code % dc), dc), x);
    SparseVec rhs;
    for (const auto& [code, x] : ca.coalg.comult_basis(c))
      rhs.add_scaled(tensor(translation_map(g, ca, SparseVec::unit(code / dc)), SparseVec::unit(code % dc), dc), x);
    check_vec(right, where, lhs, rhs);
    // (λ⊗id)τ(c) = c_1⊗τ(c_2) in C⊗(A⊗_B A)
    SparseVec lhs2;
    for (const auto& [code, x] : lam_id.apply(lift))
      lhs2.add_scaled(tensor(SparseVec::unit(code / (da * da)), g.quotient.project(SparseVec::unit(code % (da * da))), qd), x);
    SparseVec rhs2;
    for (const auto& [code, x] : ca.coalg.comult_basis(c))
      rhs2.add_scaled(tensor(SparseVec::unit(code / dc), translation_map(g, ca, SparseVec::unit(code % dc)), qd), x);
    check_vec(left, where, lhs2, rhs2);
  }
  return {norm, right, left};
}

bool StrongConnection::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass; });
}

std::vector<Certificate> check_strong_connection(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                                 bool unital) {
  const std::size_t da = ca.adim(), dc = ca.cdim();
  const SparseVec& one = *ca.alg.unit();
  SparseMat id_a = SparseMat::identity(da), id_c = SparseMat::identity(dc);
  Certificate lift{"lifting", true, ""}, left{"left colinear", true, ""}, right{"right colinear", true, ""},
      unit{"unital", true, ""};
  SparseMat one_c = matrix_of(da * dc, dc, [&](std::size_t c) { return tensor(one, SparseVec::unit(c), dc); });
  check_equal(lift, "can∘ℓ = 1⊗id", g.can_tensor * ell, one_c);
  check_equal(left, "(λ⊗id)ℓ = (id⊗ℓ)Δ", kron(g.left_coaction, id_a) * ell, kron(id_c, ell) * ca.coalg.comult_matrix());
  check_equal(right, "(id⊗ρ)ℓ = (ℓ⊗id)Δ", kron(id_a, ca.coaction) * ell, kron(ell, id_c) * ca.coalg.comult_matrix());
  std::vector<Certificate> out{lift, left, right};
  if (unital) {
    check_vec(unit, "ℓ(e)", ell.apply(ca.grouplike()), tensor(one, one, da));
    out.push_back(unit);
  }
  return out;
}

StrongConnectionSpace strong_connection_space(const GaloisData& g, const ComoduleAlgebra& ca, bool unital) {
  const std::size_t da = ca.adim(), dc = ca.cdim(), n2 = da * da;
  const SparseVec& one = *ca.alg.unit();
  SparseMat comult = ca.coalg.comult_matrix();
  SparseMat lam_id = kron(g.left_coaction, SparseMat::identity(da));
  SparseMat id_rho = kron(SparseMat::identity(da), ca.coaction);
  auto var = [&](std::size_t c, Index r) { return c * n2 + r; };
  std::vector<std::vector<SparseVec::Term>> cols(dc * n2);
  std::vector<SparseVec::Term> rhs;
  Index base = 0;
  // lifting: can(ℓ(c)) = 1⊗c
  const Index blk1 = da * dc;
  for (std::size_t c = 0; c < dc; ++c) {
    for (Index r = 0; r < n2; ++r)
      for (const auto& [o, x] : g.can_tensor.column(r)) cols[var(c, r)].emplace_back(base + c * blk1 + o, x);
    for (const auto& [o, x] : tensor(one, SparseVec::unit(c), dc)) rhs.emplace_back(base + c * blk1 + o, x);
  }
  base += dc * blk1;
  // left colinearity in C⊗A⊗A
  const Index blk2 = dc * n2;
  for (std::size_t c = 0; c < dc; ++c) {
    for (Index r = 0; r < n2; ++r)
      for (const auto& [o, x] : lam_id.column(r)) cols[var(c, r)].emplace_back(base + c * blk2 + o, x);
    for (const auto& [code, k] : comult.column(c)) {
      const std::size_t c1 = code / dc, c2 = code % dc;
      for (Index r = 0; r < n2; ++r) cols[var(c2, r)].emplace_back(base + c * blk2 + c1 * n2 + r, -k);
    }
  }
  base += dc * blk2;
  // right colinearity in A⊗A⊗C
  for (std::size_t c = 0; c < dc; ++c) {
    for (Index r = 0; r < n2; ++r)
      for (const auto& [o, x] : id_rho.column(r)) cols[var(c, r)].emplace_back(base + c * blk2 + o, x);
    for (const auto& [code, k] : comult.column(c)) {
      const std::size_t c1 = code / dc, c2 = code % dc;
      for (Index r = 0; r < n2; ++r) cols[var(c1, r)].emplace_back(base + c * blk2 + r * dc + c2, -k);
    }
  }
  base += dc * blk2;
  if (unital) {
    for (const auto& [c, x] : ca.grouplike())
      for (Index r = 0; r < n2; ++r) cols[var(c, r)].emplace_back(base + r, x);
    for (const auto& [r, x] : tensor(one, one, da)) rhs.emplace_back(base + r, x);
    base += n2;
  }
  std::vector<SparseVec> vs;
  for (auto& t : cols) vs.push_back(SparseVec::from_terms(std::move(t)));
  SparseMat system = SparseMat::from_columns(base, std::move(vs));
  auto sol = solve_affine(system, SparseVec::from_terms(std::move(rhs)));
  if (!sol) throw std::runtime_error("no strong connection: the lifting system is inconsistent");
  auto to_matrix = [&](const SparseVec& v) {
    std::vector<std::vector<SparseVec::Term>> mc(dc);
    for (const auto& [i, x] : v) mc[i / n2].emplace_back(i % n2, x);
    std::vector<SparseVec> out;
    for (auto& t : mc) out.push_back(SparseVec::from_sorted(std::move(t)));
    return SparseMat::from_columns(n2, std::move(out));
  };
  StrongConnectionSpace s{to_matrix(sol->particular), {}};
  for (const auto& k : sol->kernel) s.directions.push_back(to_matrix(k));
  return s;
}

StrongConnection solve_strong_connection(const GaloisData& g, const ComoduleAlgebra& ca, bool unital) {
  StrongConnectionSpace s = strong_connection_space(g, ca, unital);
  StrongConnection out{s.particular, check_strong_connection(g, ca, s.particular, unital)};
  return out;
}

std::vector<SparseVec> cotensor(const GaloisData& g, const ComoduleAlgebra& ca) {
  const std::size_t da = ca.adim();
  SparseMat id_a = SparseMat::identity(da);
  return kernel_basis(kron(ca.coaction, id_a) - kron(id_a, g.left_coaction));
}

ESCoring es_coring(const GaloisData& g, const ComoduleAlgebra& ca, const StrongConnection& ell) {
  const std::size_t da = ca.adim(), n2 = da * da;
  const SparseVec& one = *ca.alg.unit();
  std::vector<SparseVec> basis = cotensor(g, ca);
  SubspaceCoords coords(n2, basis);
  const std::size_t dm = basis.size();
  const Algebra& b = g.inv.base;
  const std::size_t db = b.dim();
  SubspaceCoords bcoords(da, g.inv.embedding.columns());
  SparseMat mult = ca.alg.mult_matrix();
  auto in_m = [&](const SparseVec& x, const char* what) {
    auto c = coords.coords(x);
    if (!c) throw std::logic_error(std::string(what) + " escapes the cotensor product");
    return *c;
  };
  SparseMat counit = matrix_of(db, dm, [&](std::size_t s) {
    auto c = bcoords.coords(mult.apply(basis[s]));
    if (!c) throw std::logic_error("coring counit does not land in B");
    return *c;
  });
  SparseMat sigma = matrix_of(dm, db, [&](std::size_t k) {
    auto c = coords.coords(tensor(g.inv.embedding.column(k), one, da));
    if (!c) throw std::invalid_argument("σ(b) = b⊗1 does not land in M; invariants are wrong");
    return *c;
  });
  std::vector<SparseMat> action;
  for (std::size_t k = 0; k < db; ++k) {
    SparseMat lb = kron(ca.alg.left_mult_matrix(g.inv.embedding.column(k)), SparseMat::identity(da));
    action.push_back(matrix_of(dm, dm, [&](std::size_t s) { return in_m(lb.apply(basis[s]), "B-action"); }));
  }
  AugmentedModule am{b, dm, std::move(action), counit};

  // Δ_M(a⊗a′) = a_(0)⊗ℓ(a_(1))⊗a′, coordinates in M⊗M.
  SparseMat id_a = SparseMat::identity(da);
  SparseMat lift4 = kron(kron(id_a, ell.ell), id_a) * kron(ca.coaction, id_a);
  SparseMat embed = SparseMat::from_columns(n2, basis);
  SparseMat proj = matrix_of(dm, n2, [&](std::size_t u) { return coords.project_basis(u); });
  SparseMat raw = lift4 * embed;
  SparseMat comult = kron(proj, proj) * raw;
  Certificate in_mm{"Δ_M lands in M⊗M", true, ""}, cl{"coring left counit", true, ""}, cr{"coring right counit", true, ""},
      coassoc{"coring coassociative", true, ""}, sec{"ε_M∘σ = id", true, ""}, smul{"σ multiplicative", true, ""};
  check_equal(in_mm, "Δ_M", kron(embed, embed) * comult, raw);
  for (std::size_t s = 0; s < dm; ++s) {
    SparseVec lhs, rhs;
    for (const auto& [code, x] : comult.column(s)) {
      const std::size_t p = code / dm, q = code % dm;
      // ε(m_p)·m_q and m_p·ε(m_q) in A⊗A
      SparseVec ep = g.inv.embedding.apply(counit.column(p)), eq = g.inv.embedding.apply(counit.column(q));
      lhs.add_scaled(kron(ca.alg.left_mult_matrix(ep), id_a).apply(basis[q]), x);
      rhs.add_scaled(kron(id_a, ca.alg.right_mult_matrix(eq)).apply(basis[p]), x);
    }
    check_vec(cl, "basis element " + std::to_string(s), lhs, basis[s]);
    check_vec(cr, "basis element " + std::to_string(s), rhs, basis[s]);
  }
  SparseMat id_m = SparseMat::identity(dm);
  check_equal(coassoc, "Δ_M", kron(comult, id_m) * comult, kron(id_m, comult) * comult);
  check_equal(sec, "σ", counit * sigma, SparseMat::identity(db));
  RowExtension re = row_extension(am, sigma);
  for (std::size_t j = 0; j < db && smul.pass; ++j)
    for (std::size_t l = 0; l < db; ++l)
      check_vec(smul, "basis pair (" + std::to_string(j) + "," + std::to_string(l) + ")",
                re.ring.mul(sigma.column(j), sigma.column(l)), sigma.apply(b.mul_basis(j, l)));
  std::vector<Certificate> certs{in_mm, cl, cr, coassoc, sec, smul};
  if (ca.hopf) {
    // closure under (a⊗a′)(x⊗x′) = ax⊗x′a′
    Certificate closed{"M closed in A⊗A^op", true, ""};
    for (std::size_t s = 0; s < dm && closed.pass; ++s)
      for (std::size_t t = 0; t < dm; ++t) {
        SparseVec prod;
        for (const auto& [u, x] : basis[s])
          for (const auto& [v, y] : basis[t])
            prod.add_scaled(tensor(ca.alg.mul_basis(u / da, v / da), ca.alg.mul_basis(v % da, u % da), da), x * y);
        if (!coords.coords(prod)) {
          closed.pass = false;
          closed.witness = "basis pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
          break;
        }
      }
    certs.push_back(closed);
  }
  return ESCoring{std::move(basis), std::move(coords), counit, comult, sigma, std::move(am), std::move(re), certs};
}

RowIso row_iso_omega(const GaloisData& g, const ComoduleAlgebra& ca, const ESCoring& es) {
  if (!ca.hopf) throw std::invalid_argument("row isomorphism needs Hopf mode");
  const std::size_t da = ca.adim(), dc = ca.cdim(), n2 = da * da;
  const Algebra& h = ca.hopf->alg;
  const SparseVec& e = ca.grouplike();
  SparseMat mult = ca.alg.mult_matrix();
  // rows 0..da-1: multiplication; then the diagonal coaction minus x⊗e
  SparseMat sys = matrix_of(da + n2 * dc, n2, [&](std::size_t col) {
    const std::size_t a = col / da, a2 = col % da;
    std::vector<SparseVec::Term> t;
    for (const auto& [r, x] : mult.column(col)) t.emplace_back(r, x);
    for (const auto& [u, x] : ca.coaction.column(a))
      for (const auto& [v, y] : ca.coaction.column(a2))
        for (const auto& [w, z] : h.mul_basis(u % dc, v % dc))
          t.emplace_back(da + ((u / dc) * da + v / dc) * dc + w, x * y * z);
    for (const auto& [c, x] : e) t.emplace_back(da + col * dc + c, -x);
    return SparseVec::from_terms(std::move(t));
  });
  RowIso out;
  out.omega_basis = kernel_basis(sys);
  out.b_dim = g.inv.base.dim();
  out.omega_dim = out.omega_basis.size();
  SubspaceCoords oc(n2, out.omega_basis);
  const std::size_t dm = es.basis.size(), db = out.b_dim;
  Certificate lands{"image in B ⊕ Ω¹(A)^coH", true, ""}, bij{"bijective", true, ""}, mul{"multiplicative", true, ""};
  std::vector<SparseVec> cols;
  auto phi = [&](const SparseVec& mcoords) -> std::optional<SparseVec> {
    SparseVec bpart = es.counit.apply(mcoords);
    SparseVec x = es.coords.embed(mcoords);
    x -= es.coords.embed(es.sigma.apply(bpart));  // Σ a da′ = Σ a⊗a′ - aa′⊗1
    auto w = oc.coords(x);
    if (!w) return std::nullopt;
    SparseVec v = bpart;
    for (const auto& [k, y] : *w) v.add_scaled(SparseVec::unit(db + k), y);
    return v;
  };
  for (std::size_t s = 0; s < dm; ++s) {
    auto v = phi(SparseVec::unit(s));
    if (!v) {
      if (lands.pass) lands.witness = "basis element " + std::to_string(s);
      lands.pass = false;
      cols.emplace_back();
    } else {
      cols.push_back(*v);
    }
  }
  out.map = SparseMat::from_columns(db + out.omega_dim, std::move(cols));
  if (!lands.pass || db + out.omega_dim != dm || !inverse(out.map)) {
    bij.pass = false;
    bij.witness = "dim M = " + std::to_string(dm) + ", blocks (" + std::to_string(db) + ", " +
                  std::to_string(out.omega_dim) + "), rank " + std::to_string(rank(out.map));
  }
  // (b, ω)(b′, ω′) = (bb′, b·ω′)
  auto block_product = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec bx, by, wy;
    for (const auto& [k, a] : x)
      if (k < db) bx.add_scaled(SparseVec::unit(k), a);
    for (const auto& [k, a] : y) {
      if (k < db) by.add_scaled(SparseVec::unit(k), a);
      else wy.add_scaled(out.omega_basis[k - db], a);
    }
    SparseVec res = g.inv.base.mul(bx, by);
    SparseVec act = kron(ca.alg.left_mult_matrix(g.inv.embedding.apply(bx)), SparseMat::identity(da)).apply(wy);
    auto w = oc.coords(act);
    if (!w) throw std::logic_error("B-action leaves Ω¹(A)^coH");
    for (const auto& [k, a] : *w) res.add_scaled(SparseVec::unit(db + k), a);
    return res;
  };
  if (lands.pass)
    for (std::size_t s = 0; s < dm && mul.pass; ++s)
      for (std::size_t t = 0; t < dm; ++t) {
        SparseVec lhs = out.map.apply(es.ring.ring.mul_basis(s, t));
        SparseVec rhs = block_product(out.map.column(s), out.map.column(t));
        if (lhs != rhs) {
          mul.pass = false;
          mul.witness = "basis pair (" + std::to_string(s) + "," + std::to_string(t) + ")";
          break;
        }
      }
  else
    mul.pass = false;
  out.certificates = {lands, bij, mul};
  return out;
}

ComoduleAlgebra trivial_coaction(const Algebra& a) {
  HopfAlgebra k = function_algebra_of_group(Group::cyclic(1));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> rho;
  for (std::size_t i = 0; i < a.dim(); ++i) rho.emplace_back(i, i, 0, Rational(1));
  return comodule_algebra(a, k.coalg, rho, k, "trivial");
}

ComoduleAlgebra hopf_self_coaction(const Group& grp) {
  HopfAlgebra h = function_algebra_of_group(grp);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> rho;
  const std::size_t n = grp.order();
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [code, v] : h.coalg.comult_basis(x)) rho.emplace_back(x, code / n, code % n, v);
  return comodule_algebra(h.alg, h.coalg, rho, h, "k^" + grp.name() + " over itself");
}

ComoduleAlgebra z4_over_z2() {
  HopfAlgebra a = function_algebra_of_group(Group::cyclic(4));
  HopfAlgebra h = function_algebra_of_group(Group::cyclic(2));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> rho;
  for (std::size_t x = 0; x < 4; ++x) {
    rho.emplace_back(x, x, 0, Rational(1));
    rho.emplace_back(x, (x + 2) % 4, 1, Rational(1));
  }
  return comodule_algebra(a.alg, h.coalg, rho, h, "k^Z4 over k^Z2");
}

ComoduleAlgebra trivial_bundle(const Algebra& b, const Group& grp) {
  HopfAlgebra h = function_algebra_of_group(grp);
  Algebra a = tensor_algebra(b, h.alg);
  const std::size_t n = grp.order();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> rho;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& [code, v] : h.coalg.comult_basis(x)) rho.emplace_back(i * n + x, i * n + code / n, code % n, v);
  return comodule_algebra(a, h.coalg, rho, h, "trivial bundle");
}

ComoduleAlgebra nonfree_z2_on_k2() {
  HopfAlgebra h = function_algebra_of_group(Group::cyclic(2));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> rho;
  // ρ(a) = a⊗1 with 1 = δ_0 + δ_1
  for (std::size_t i = 0; i < 2; ++i) {
    rho.emplace_back(i, i, 0, Rational(1));
    rho.emplace_back(i, i, 1, Rational(1));
  }
  return comodule_algebra(diagonal_algebra(2), h.coalg, rho, h, "Z2 acting trivially on k^2");
}

}  // namespace cychom
