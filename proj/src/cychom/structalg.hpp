#ifndef CYCHOM_STRUCTALG_HPP
#define CYCHOM_STRUCTALG_HPP

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cychom/structcoalg.hpp"
#include "cychom/tenalg.hpp"

namespace cychom {

/// Associative, possibly non-unital algebra given by structure constants.
class Algebra {
 public:
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;

  /// entries (i, j, k, a) mean e_i·e_j contains a·e_k. Associativity is checked
  /// eagerly; a declared unit must be a two-sided unit. Units are detected.
  static Algebra from_table(BasedSpace space, const std::vector<Entry>& mult,
                            std::optional<SparseVec> unit = std::nullopt);
  /// products[i*dim+j] = e_i·e_j.
  static Algebra from_products(BasedSpace space, std::vector<SparseVec> products,
                               std::optional<SparseVec> unit = std::nullopt);
  /// No associativity check; for negative tests.
  static Algebra unchecked(BasedSpace space, std::vector<SparseVec> products);

  [[nodiscard]] const BasedSpace& space() const noexcept { return space_; }
  [[nodiscard]] std::size_t dim() const noexcept { return space_.dim(); }
  [[nodiscard]] const SparseVec& mul_basis(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }
  [[nodiscard]] SparseVec mul(const SparseVec& a, const SparseVec& b) const;

  /// Two-sided unit when it exists.
  [[nodiscard]] const std::optional<SparseVec>& unit() const noexcept { return unit_; }
  /// Some left unit (the two-sided unit when present).
  [[nodiscard]] const std::optional<SparseVec>& left_unit() const noexcept { return left_unit_; }
  [[nodiscard]] const std::optional<SparseVec>& right_unit() const noexcept { return right_unit_; }
  /// Pins the left unit used by constructions that insert one.
  void set_left_unit(SparseVec e);

  /// Multiplication A⊗A -> A as a dim x dim² matrix.
  [[nodiscard]] SparseMat mult_matrix() const;
  [[nodiscard]] SparseMat left_mult_matrix(const SparseVec& a) const;
  [[nodiscard]] SparseMat right_mult_matrix(const SparseVec& a) const;

 private:
  void detect_units();

  BasedSpace space_;
  std::vector<SparseVec> products_;
  std::optional<SparseVec> unit_, left_unit_, right_unit_;
};

struct AlgebraReport {
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> assoc_witness;
  std::optional<SparseVec> left_unit, right_unit, unit;
  [[nodiscard]] bool left_unital() const { return left_unit.has_value(); }
  [[nodiscard]] bool right_unital() const { return right_unit.has_value(); }
  [[nodiscard]] bool unital() const { return unit.has_value(); }
};

AlgebraReport check_algebra(const Algebra& a);

/// Solves e·a = a (side = left) or a·e = a for all a; nullopt if none.
std::optional<SparseVec> find_unit(const Algebra& a, bool left);

/// Finite group by multiplication table, element 0 need not be the identity.
class Group {
 public:
  Group(std::string name, std::size_t order, std::vector<std::size_t> table);

  static Group cyclic(std::size_t n);
  static Group product(const Group& a, const Group& b);
  static Group symmetric3();
  static Group dihedral4();
  static Group quaternion8();
  /// All groups of order <= 8 up to isomorphism.
  static std::vector<Group> small_groups();

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t mul(std::size_t x, std::size_t y) const { return table_[x * order_ + y]; }
  [[nodiscard]] std::size_t identity() const noexcept { return identity_; }
  [[nodiscard]] std::size_t inverse(std::size_t x) const { return inverse_.at(x); }
  [[nodiscard]] std::size_t conjugacy_class_count() const;
  [[nodiscard]] bool is_abelian() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

struct HopfAlgebra {
  Algebra alg;
  Coalgebra coalg;
  SparseMat antipode;
};

struct HopfReport {
  bool comult_multiplicative = true;
  bool counit_multiplicative = true;
  bool unit_grouplike = true;
  bool antipode_ok = true;
  bool antipode_anti_multiplicative = true;
  std::optional<std::string> witness;
  [[nodiscard]] bool ok() const {
    return comult_multiplicative && counit_multiplicative && unit_grouplike && antipode_ok &&
           antipode_anti_multiplicative;
  }
};

HopfReport check_hopf(const HopfAlgebra& h);

/// k^G: pointwise product, Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k, ε(δ_g) = [g = 1], S(δ_g) = δ_{g⁻¹}.
HopfAlgebra function_algebra_of_group(const Group& g);
/// kG: group product, Δ(g) = g⊗g.
HopfAlgebra group_algebra(const Group& g);

/// Product in A⊗B.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// k^n with idempotent basis.
Algebra diagonal_algebra(std::size_t n);
/// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
Algebra truncated_polynomial(std::size_t n);
/// M_n(B) with basis E_ij(e_k) at index (i*n + j)*dim B + k.
Algebra matrix_algebra(const Algebra& b, std::size_t n);
/// Index of E_ij(e_k) in matrix_algebra(b, n).
inline Index matrix_index(std::size_t n, std::size_t bdim, std::size_t i, std::size_t j, std::size_t k) {
  return (static_cast<Index>(i) * n + j) * bdim + k;
}

/// Opposite algebra.
Algebra opposite(const Algebra& a);

}  // namespace cychom

#endif
