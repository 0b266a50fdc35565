#include "cychom/structalg.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "cychom/exactlin.hpp"

namespace cychom {

Algebra Algebra::unchecked(BasedSpace space, std::vector<SparseVec> products) {
  const std::size_t n = space.dim();
  if (products.size() != n * n) throw std::invalid_argument("multiplication table has wrong size");
  for (const auto& p : products)
    if (p.max_index_plus_one() > n) throw std::invalid_argument("multiplication entry out of range");
  Algebra a;
  a.space_ = std::move(space);
  a.products_ = std::move(products);
  return a;
}

Algebra Algebra::from_products(BasedSpace space, std::vector<SparseVec> products, std::optional<SparseVec> unit) {
  Algebra a = unchecked(std::move(space), std::move(products));
  AlgebraReport rep = check_algebra(a);
  if (!rep.associative) {
    const auto& w = *rep.assoc_witness;
    throw std::invalid_argument("multiplication not associative on (" + a.space_.label(w[0]) + ", " +
                                a.space_.label(w[1]) + ", " + a.space_.label(w[2]) + ")");
  }
  a.detect_units();
  if (unit) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      SparseVec ej = SparseVec::unit(j);
      if (a.mul(*unit, ej) != ej || a.mul(ej, *unit) != ej)
        throw std::invalid_argument("declared unit is not a two-sided unit");
    }
    a.unit_ = unit;
    a.left_unit_ = unit;
    a.right_unit_ = unit;
  }
  return a;
}

Algebra Algebra::from_table(BasedSpace space, const std::vector<Entry>& mult, std::optional<SparseVec> unit) {
  const std::size_t n = space.dim();
  std::vector<std::vector<SparseVec::Term>> terms(n * n);
  for (const auto& [i, j, k, c] : mult) {
    if (i >= n || j >= n || k >= n) throw std::invalid_argument("multiplication entry out of range");
    terms[i * n + j].emplace_back(k, c);
  }
  std::vector<SparseVec> products;
  products.reserve(n * n);
  for (auto& t : terms) products.push_back(SparseVec::from_terms(std::move(t)));
  return from_products(std::move(space), std::move(products), std::move(unit));
}

void Algebra::detect_units() {
  left_unit_ = find_unit(*this, true);
  right_unit_ = find_unit(*this, false);
  unit_.reset();
  if (left_unit_ && right_unit_) {
    // Both exist, so they coincide and the unit is unique.
    unit_ = mul(*left_unit_, *right_unit_);
    left_unit_ = unit_;
    right_unit_ = unit_;
  }
}

void Algebra::set_left_unit(SparseVec e) {
  for (std::size_t j = 0; j < dim(); ++j)
    if (mul(e, SparseVec::unit(j)) != SparseVec::unit(j)) throw std::invalid_argument("not a left unit");
  left_unit_ = std::move(e);
}

SparseVec Algebra::mul(const SparseVec& a, const SparseVec& b) const {
  std::vector<SparseVec::Term> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Rational xy = x * y;
      for (const auto& [k, c] : products_[i * dim() + j]) acc.emplace_back(k, xy * c);
    }
  return SparseVec::from_terms(std::move(acc));
}

SparseMat Algebra::mult_matrix() const { return SparseMat::from_columns(dim(), products_); }

SparseMat Algebra::left_mult_matrix(const SparseVec& a) const {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(a, SparseVec::unit(j)));
  return SparseMat::from_columns(dim(), std::move(cols));
}

SparseMat Algebra::right_mult_matrix(const SparseVec& a) const {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(SparseVec::unit(j), a));
  return SparseMat::from_columns(dim(), std::move(cols));
}

std::optional<SparseVec> find_unit(const Algebra& a, bool left) {
  const std::size_t n = a.dim();
  if (n == 0) return SparseVec();
  // Unknown e = Σ e_i; equation block j: e·e_j = e_j (or e_j·e = e_j).
  std::vector<SparseVec> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVec::Term> t;
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& p = left ? a.mul_basis(i, j) : a.mul_basis(j, i);
      for (const auto& [k, c] : p) t.emplace_back(j * n + k, c);
    }
    cols[i] = SparseVec::from_terms(std::move(t));
  }
  std::vector<SparseVec::Term> rhs;
  for (std::size_t j = 0; j < n; ++j) rhs.emplace_back(j * n + j, Rational(1));
  auto sol = solve_affine(SparseMat::from_columns(n * n, std::move(cols)), SparseVec::from_sorted(std::move(rhs)));
  if (!sol) return std::nullopt;
  return sol->particular;
}

AlgebraReport check_algebra(const Algebra& a) {
  AlgebraReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n && rep.associative; ++i)
    for (std::size_t j = 0; j < n && rep.associative; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec ek = SparseVec::unit(k), ei = SparseVec::unit(i);
        if (a.mul(a.mul_basis(i, j), ek) != a.mul(ei, a.mul_basis(j, k))) {
          rep.associative = false;
          rep.assoc_witness = std::array<std::size_t, 3>{i, j, k};
          break;
        }
      }
  rep.left_unit = find_unit(a, true);
  rep.right_unit = find_unit(a, false);
  if (rep.left_unit && rep.right_unit) rep.unit = a.mul(*rep.left_unit, *rep.right_unit);
  return rep;
}

// ---- groups ----

Group::Group(std::string name, std::size_t order, std::vector<std::size_t> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != order_ * order_) throw std::invalid_argument("group table has wrong size");
  for (std::size_t v : table_)
    if (v >= order_) throw std::invalid_argument("group table entry out of range");
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group table has no identity");
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      for (std::size_t z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw std::invalid_argument("group table not associative");
  inverse_.assign(order_, order_);
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) inverse_[x] = y;
  for (std::size_t x = 0; x < order_; ++x)
    if (inverse_[x] == order_ || mul(inverse_[x], x) != identity_)
      throw std::invalid_argument("group table lacks inverses");
}

namespace {

// Closure of a set of permutations under composition; (p*q)(i) = p(q(i)).
Group permutation_group(const std::string& name, const std::vector<std::vector<std::size_t>>& gens) {
  using Perm = std::vector<std::size_t>;
  std::size_t deg = gens.front().size();
  Perm id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = i;
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> pos{{id, 0}};
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm r = compose(elems[k], g);
      if (!pos.count(r)) {
        pos[r] = elems.size();
        elems.push_back(r);
      }
    }
  std::size_t n = elems.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = pos.at(compose(elems[x], elems[y]));
  return Group(name, n, std::move(table));
}

}  // namespace

Group Group::cyclic(std::size_t n) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  return Group("Z" + std::to_string(n), n, std::move(table));
}

Group Group::product(const Group& a, const Group& b) {
  std::size_t n = a.order() * b.order();
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return Group(a.name() + "x" + b.name(), n, std::move(table));
}

Group Group::symmetric3() { return permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}); }

Group Group::dihedral4() { return permutation_group("D4", {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

Group Group::quaternion8() {
  // Left regular representation of i and j on the 8 quaternion units.
  // Unit u coded as 2*q + s with q in {1,i,j,k} and s the sign bit.
  static const int kUnitMul[4][4][2] = {
      // {result unit, sign flip}
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left_mul = [&](std::size_t q) {
    std::vector<std::size_t> p(8);
    for (std::size_t x = 0; x < 8; ++x) {
      std::size_t r = x / 2, s = x % 2;
      const int* m = kUnitMul[q][r];
      p[x] = 2 * static_cast<std::size_t>(m[0]) + (s ^ static_cast<std::size_t>(m[1]));
    }
    return p;
  };
  return permutation_group("Q8", {left_mul(1), left_mul(2)});
}

std::vector<Group> Group::small_groups() {
  std::vector<Group> gs;
  for (std::size_t n = 1; n <= 8; ++n) gs.push_back(cyclic(n));
  gs.push_back(product(cyclic(2), cyclic(2)));
  gs.push_back(symmetric3());
  gs.push_back(product(cyclic(2), cyclic(4)));
  gs.push_back(product(product(cyclic(2), cyclic(2)), cyclic(2)));
  gs.push_back(dihedral4());
  gs.push_back(quaternion8());
  return gs;
}

std::size_t Group::conjugacy_class_count() const {
  std::vector<char> seen(order_, 0);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < order_; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (std::size_t g = 0; g < order_; ++g) seen[mul(mul(g, x), inverse(g))] = 1;
  }
  return classes;
}

bool Group::is_abelian() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

// ---- Hopf algebras ----

namespace {

SparseVec tensor_mul(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  const std::size_t n = a.dim();
  std::vector<SparseVec::Term> acc;
  for (const auto& [p, s] : x)
    for (const auto& [q, t] : y) {
      SparseVec l = a.mul_basis(p / n, q / n);
      SparseVec r = a.mul_basis(p % n, q % n);
      for (const auto& [i, u] : l)
        for (const auto& [j, v] : r) acc.emplace_back(i * n + j, s * t * u * v);
    }
  return SparseVec::from_terms(std::move(acc));
}

}  // namespace

HopfReport check_hopf(const HopfAlgebra& h) {
  HopfReport rep;
  const Algebra& a = h.alg;
  const Coalgebra& c = h.coalg;
  const std::size_t n = a.dim();
  if (c.dim() != n) throw std::invalid_argument("algebra and coalgebra dimensions differ");
  if (!a.unit()) throw std::invalid_argument("Hopf algebra without unit");
  const SparseVec& one = *a.unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec ei = SparseVec::unit(i), ej = SparseVec::unit(j);
      if (rep.comult_multiplicative &&
          c.comult(a.mul_basis(i, j)) != tensor_mul(a, c.comult_basis(i), c.comult_basis(j))) {
        rep.comult_multiplicative = false;
        rep.witness = "Δ(ab) != Δ(a)Δ(b) at (" + a.space().label(i) + ", " + a.space().label(j) + ")";
      }
      if (rep.counit_multiplicative && c.counit_of(a.mul_basis(i, j)) != c.counit_of(ei) * c.counit_of(ej)) {
        rep.counit_multiplicative = false;
        rep.witness = "ε(ab) != ε(a)ε(b)";
      }
      if (rep.antipode_anti_multiplicative &&
          h.antipode.apply(a.mul_basis(i, j)) != a.mul(h.antipode.column(j), h.antipode.column(i))) {
        rep.antipode_anti_multiplicative = false;
        rep.witness = "S(ab) != S(b)S(a)";
      }
    }
  rep.unit_grouplike = c.comult(one) == tensor(one, one, n) && c.counit_of(one).is_one();
  SparseMat id = SparseMat::identity(n);
  SparseMat m = a.mult_matrix();
  for (std::size_t i = 0; i < n && rep.antipode_ok; ++i) {
    SparseVec expected = c.counit_of(SparseVec::unit(i)) * one;
    SparseVec l = m.apply(apply_tensor_maps({&h.antipode, &id}, c.comult_basis(i)));
    SparseVec r = m.apply(apply_tensor_maps({&id, &h.antipode}, c.comult_basis(i)));
    if (l != expected || r != expected) {
      rep.antipode_ok = false;
      rep.witness = "antipode axiom fails at " + a.space().label(i);
    }
  }
  return rep;
}

HopfAlgebra function_algebra_of_group(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("d" + std::to_string(x));
  BasedSpace space(labels);
  std::vector<Algebra::Entry> mult;
  std::vector<SparseVec::Term> one;
  for (std::size_t x = 0; x < n; ++x) {
    mult.emplace_back(x, x, x, Rational(1));
    one.emplace_back(x, Rational(1));
  }
  Algebra alg = Algebra::from_table(space, mult, SparseVec::from_sorted(one));
  std::vector<Coalgebra::Entry> comult;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) comult.emplace_back(g.mul(h, k), h, k, Rational(1));
  Coalgebra coalg = Coalgebra::from_table(space, comult, SparseVec::unit(g.identity()), SparseVec::from_sorted(one));
  std::vector<SparseVec> s;
  for (std::size_t x = 0; x < n; ++x) s.push_back(SparseVec::unit(g.inverse(x)));
  return HopfAlgebra{std::move(alg), std::move(coalg), SparseMat::from_columns(n, std::move(s))};
}

HopfAlgebra group_algebra(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("g" + std::to_string(x));
  BasedSpace space(labels);
  std::vector<Algebra::Entry> mult;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) mult.emplace_back(x, y, g.mul(x, y), Rational(1));
  Algebra alg = Algebra::from_table(space, mult, SparseVec::unit(g.identity()));
  std::vector<Coalgebra::Entry> comult;
  std::vector<SparseVec::Term> eps;
  for (std::size_t x = 0; x < n; ++x) {
    comult.emplace_back(x, x, x, Rational(1));
    eps.emplace_back(x, Rational(1));
  }
  Coalgebra coalg = Coalgebra::from_table(space, comult, SparseVec::from_sorted(eps), SparseVec::unit(g.identity()));
  std::vector<SparseVec> s;
  for (std::size_t x = 0; x < n; ++x) s.push_back(SparseVec::unit(g.inverse(x)));
  return HopfAlgebra{std::move(alg), std::move(coalg), SparseMat::from_columns(n, std::move(s))};
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.space().label(i) + "*" + b.space().label(j));
  std::vector<SparseVec> products(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      products[p * n + q] = tensor(a.mul_basis(p / nb, q / nb), b.mul_basis(p % nb, q % nb), nb);
  std::optional<SparseVec> unit;
  if (a.unit() && b.unit()) unit = tensor(*a.unit(), *b.unit(), nb);
  return Algebra::from_products(BasedSpace(labels), std::move(products), unit);
}

Algebra diagonal_algebra(std::size_t n) {
  std::vector<Algebra::Entry> mult;
  std::vector<SparseVec::Term> one;
  for (std::size_t i = 0; i < n; ++i) {
    mult.emplace_back(i, i, i, Rational(1));
    one.emplace_back(i, Rational(1));
  }
  return Algebra::from_table(BasedSpace::numbered(n, "p"), mult, SparseVec::from_sorted(one));
}

Algebra truncated_polynomial(std::size_t n) {
  std::vector<Algebra::Entry> mult;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    for (std::size_t j = 0; i + j < n; ++j) mult.emplace_back(i, j, i + j, Rational(1));
  }
  return Algebra::from_table(BasedSpace(labels), mult, n ? std::optional<SparseVec>(SparseVec::unit(0)) : std::nullopt);
}

Algebra matrix_algebra(const Algebra& b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  const std::size_t bd = b.dim(), dim = n * n * bd;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < bd; ++k)
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + b.space().label(k) + ")");
  std::vector<SparseVec> products(dim * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < bd; ++k)
          for (std::size_t k2 = 0; k2 < bd; ++k2) {
            Index p = matrix_index(n, bd, i, j, k), q = matrix_index(n, bd, j, l, k2);
            products[p * dim + q] = b.mul_basis(k, k2).remap([&](Index r) { return matrix_index(n, bd, i, l, r); });
          }
  std::optional<SparseVec> unit;
  if (b.unit()) {
    SparseVec u;
    for (std::size_t i = 0; i < n; ++i)
      u += b.unit()->remap([&](Index r) { return matrix_index(n, bd, i, i, r); });
    unit = u;
  }
  return Algebra::from_products(BasedSpace(labels), std::move(products), unit);
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVec> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = a.mul_basis(j, i);
  return Algebra::from_products(a.space(), std::move(products), a.unit());
}

}  // namespace cychom
