#include "cychom/structcoalg.hpp"

#include <stdexcept>

#include "cychom/exactlin.hpp"

namespace cychom {

Coalgebra Coalgebra::unchecked(BasedSpace space, std::vector<SparseVec> comult, SparseVec counit,
                               std::optional<SparseVec> grouplike) {
  if (comult.size() != space.dim()) throw std::invalid_argument("comultiplication table has wrong size");
  Coalgebra c;
  c.space_ = std::move(space);
  c.comult_ = std::move(comult);
  c.counit_ = std::move(counit);
  c.grouplike_ = std::move(grouplike);
  const Index n = c.dim();
  for (const auto& d : c.comult_)
    if (d.max_index_plus_one() > n * n) throw std::invalid_argument("comultiplication index out of range");
  if (c.counit_.max_index_plus_one() > n) throw std::invalid_argument("counit index out of range");
  return c;
}

Coalgebra Coalgebra::from_table(BasedSpace space, const std::vector<Entry>& comult, SparseVec counit,
                                std::optional<SparseVec> grouplike) {
  const std::size_t n = space.dim();
  std::vector<std::vector<SparseVec::Term>> terms(n);
  for (const auto& [i, j, k, a] : comult) {
    if (i >= n || j >= n || k >= n) throw std::invalid_argument("comultiplication entry out of range");
    terms[i].emplace_back(j * n + k, a);
  }
  std::vector<SparseVec> cols;
  for (auto& t : terms) cols.push_back(SparseVec::from_terms(std::move(t)));
  Coalgebra c = unchecked(std::move(space), std::move(cols), std::move(counit), std::move(grouplike));
  auto rep = check_coalgebra(c);
  if (!rep.coassociative)
    throw std::invalid_argument("comultiplication not coassociative at basis element " +
                                c.space().label(*rep.coassoc_witness));
  if (!rep.counital)
    throw std::invalid_argument("counit law fails at basis element " + c.space().label(*rep.counit_witness));
  if (!rep.grouplike_ok) throw std::invalid_argument("distinguished element is not grouplike");
  return c;
}

SparseVec Coalgebra::comult(const SparseVec& c) const {
  std::vector<SparseVec::Term> acc;
  for (const auto& [i, a] : c)
    for (const auto& [k, b] : comult_.at(i)) acc.emplace_back(k, a * b);
  return SparseVec::from_terms(std::move(acc));
}

Rational Coalgebra::counit_of(const SparseVec& c) const {
  Rational s;
  for (const auto& [i, a] : c) s += a * counit_.get(i);
  return s;
}

SparseMat Coalgebra::comult_matrix() const { return SparseMat::from_columns(dim() * dim(), comult_); }

SparseMat Coalgebra::counit_matrix() const {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(SparseVec::unit(0, counit_.get(i)));
  return SparseMat::from_columns(1, std::move(cols));
}

SparseVec Coalgebra::iterated_comult(const SparseVec& c, std::size_t legs) const {
  if (legs == 0) throw std::invalid_argument("iterated comultiplication needs at least one leg");
  SparseVec x = c;
  // Expand the last leg each time.
  for (std::size_t k = 1; k < legs; ++k) {
    std::vector<SparseVec::Term> acc;
    for (const auto& [code, a] : x) {
      Index head = code / dim(), last = code % dim();
      for (const auto& [d, b] : comult_[last]) acc.emplace_back(head * dim() * dim() + d, a * b);
    }
    x = SparseVec::from_terms(std::move(acc));
  }
  return x;
}

CoalgebraReport check_coalgebra(const Coalgebra& c) {
  CoalgebraReport rep;
  const std::size_t n = c.dim();
  SparseMat delta = c.comult_matrix();
  SparseMat id = SparseMat::identity(n);
  SparseMat eps = c.counit_matrix();
  for (std::size_t i = 0; i < n && rep.coassociative; ++i) {
    const SparseVec& d = c.comult_basis(i);
    SparseVec left = apply_tensor_maps({&delta, &id}, d);
    SparseVec right = apply_tensor_maps({&id, &delta}, d);
    if (left != right) {
      rep.coassociative = false;
      rep.coassoc_witness = i;
    }
  }
  for (std::size_t i = 0; i < n && rep.counital; ++i) {
    const SparseVec& d = c.comult_basis(i);
    if (apply_tensor_maps({&eps, &id}, d) != SparseVec::unit(i) ||
        apply_tensor_maps({&id, &eps}, d) != SparseVec::unit(i)) {
      rep.counital = false;
      rep.counit_witness = i;
    }
  }
  if (c.grouplike()) {
    const SparseVec& e = *c.grouplike();
    rep.grouplike_ok = c.comult(e) == tensor(e, e, n) && c.counit_of(e).is_one();
  }
  return rep;
}

SparseVec flip(const SparseVec& x, std::size_t dim) {
  return x.remap([dim](Index code) { return (code % dim) * dim + code / dim; });
}

std::optional<std::string> comodule_violation(const Coalgebra& c, const Comodule& v) {
  const std::size_t n = v.dim;
  if (v.matrix.size() != n * n) return "comodule matrix has " + std::to_string(v.matrix.size()) + " entries";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec rhs;
      for (std::size_t j = 0; j < n; ++j) rhs += tensor(v.entry(i, j), v.entry(j, k), c.dim());
      if (c.comult(v.entry(i, k)) != rhs)
        return "coassociativity of the comodule matrix fails at entry (" + std::to_string(i) + "," +
               std::to_string(k) + ")";
      if (c.counit_of(v.entry(i, k)) != Rational(i == k ? 1 : 0))
        return "counit condition fails at entry (" + std::to_string(i) + "," + std::to_string(k) + ")";
    }
  return std::nullopt;
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  Comodule s;
  s.dim = a.dim + b.dim;
  s.name = a.name + "+" + b.name;
  s.matrix.assign(s.dim * s.dim, SparseVec());
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) s.matrix[i * s.dim + j] = a.entry(i, j);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) s.matrix[(a.dim + i) * s.dim + a.dim + j] = b.entry(i, j);
  return s;
}

std::vector<SparseVec> cotrace_basis(const Coalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    const SparseVec& d = c.comult_basis(i);
    cols.push_back(d - flip(d, n));
  }
  return kernel_basis(SparseMat::from_columns(n * n, std::move(cols)));
}

bool is_cotrace(const Coalgebra& c, const SparseVec& x) {
  SparseVec d = c.comult(x);
  return d == flip(d, c.dim());
}

SparseVec comodule_character(const Coalgebra& c, const Comodule& v) {
  if (auto err = comodule_violation(c, v)) throw std::invalid_argument(*err);
  SparseVec chi;
  for (std::size_t i = 0; i < v.dim; ++i) chi += v.entry(i, i);
  if (!is_cotrace(c, chi)) throw std::logic_error("character is not a cotrace");
  return chi;
}

bool enough_characters(const Coalgebra& c, const std::vector<Comodule>& vs) {
  std::vector<SparseVec> chars;
  for (const auto& v : vs) chars.push_back(comodule_character(c, v));
  const std::size_t tr = cotrace_basis(c).size();
  return rank(SparseMat::from_columns(c.dim(), std::move(chars))) == tr;
}

std::vector<SparseVec> grouplike_candidates(const Coalgebra& c) {
  const std::size_t n = c.dim();
  if (n > 8) throw std::invalid_argument("grouplike search limited to dimension 8");
  std::vector<SparseVec> found;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<SparseVec::Term> t;
    std::size_t r = code;
    for (std::size_t i = 0; i < n; ++i, r /= 3) {
      int digit = static_cast<int>(r % 3);
      if (digit == 1) t.emplace_back(i, Rational(1));
      if (digit == 2) t.emplace_back(i, Rational(-1));
    }
    SparseVec x = SparseVec::from_sorted(std::move(t));
    if (c.counit_of(x).is_one() && c.comult(x) == tensor(x, x, n)) found.push_back(std::move(x));
  }
  return found;
}

}  // namespace cychom
