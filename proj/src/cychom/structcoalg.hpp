#ifndef CYCHOM_STRUCTCOALG_HPP
#define CYCHOM_STRUCTCOALG_HPP

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cychom/tenalg.hpp"

namespace cychom {

/// Coalgebra given by structure constants; Δ(e_i) is coded over C⊗C.
class Coalgebra {
 public:
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;

  /// entries (i, j, k, a) mean Δ(e_i) contains a·e_j⊗e_k. Validates the axioms
  /// and throws std::invalid_argument naming the first violation.
  static Coalgebra from_table(BasedSpace space, const std::vector<Entry>& comult, SparseVec counit,
                              std::optional<SparseVec> grouplike = std::nullopt);
  /// No validation; for negative tests and report generation.
  static Coalgebra unchecked(BasedSpace space, std::vector<SparseVec> comult, SparseVec counit,
                             std::optional<SparseVec> grouplike = std::nullopt);

  [[nodiscard]] const BasedSpace& space() const noexcept { return space_; }
  [[nodiscard]] std::size_t dim() const noexcept { return space_.dim(); }
  [[nodiscard]] const SparseVec& comult_basis(std::size_t i) const { return comult_.at(i); }
  [[nodiscard]] const SparseVec& counit() const noexcept { return counit_; }
  [[nodiscard]] const std::optional<SparseVec>& grouplike() const noexcept { return grouplike_; }
  void set_grouplike(SparseVec e) { grouplike_ = std::move(e); }

  [[nodiscard]] SparseVec comult(const SparseVec& c) const;
  [[nodiscard]] Rational counit_of(const SparseVec& c) const;
  /// Δ as a dim² x dim matrix.
  [[nodiscard]] SparseMat comult_matrix() const;
  /// ε as a 1 x dim matrix.
  [[nodiscard]] SparseMat counit_matrix() const;
  /// Iterated comultiplication into C^{⊗(legs)}; legs >= 1.
  [[nodiscard]] SparseVec iterated_comult(const SparseVec& c, std::size_t legs) const;

 private:
  BasedSpace space_;
  std::vector<SparseVec> comult_;
  SparseVec counit_;
  std::optional<SparseVec> grouplike_;
};

struct CoalgebraReport {
  bool coassociative = true;
  std::optional<std::size_t> coassoc_witness;  // basis index where (Δ⊗id)Δ != (id⊗Δ)Δ
  bool counital = true;
  std::optional<std::size_t> counit_witness;
  bool grouplike_ok = true;
  [[nodiscard]] bool ok() const { return coassociative && counital && grouplike_ok; }
};

CoalgebraReport check_coalgebra(const Coalgebra& c);

/// Swap of the two legs of C⊗C.
SparseVec flip(const SparseVec& x, std::size_t dim);

/// Finite-dimensional right comodule as a matrix (c_ij) of elements of C.
struct Comodule {
  std::size_t dim = 0;
  std::vector<SparseVec> matrix;  // row-major, dim*dim entries
  std::string name;

  [[nodiscard]] const SparseVec& entry(std::size_t i, std::size_t j) const { return matrix.at(i * dim + j); }
};

/// Δ(c_ik) = Σ_j c_ij⊗c_jk and ε(c_ij) = δ_ij; returns a description of the first violation.
std::optional<std::string> comodule_violation(const Coalgebra& c, const Comodule& v);

Comodule direct_sum(const Comodule& a, const Comodule& b);

/// Basis of ker(Δ - flip∘Δ).
std::vector<SparseVec> cotrace_basis(const Coalgebra& c);
bool is_cotrace(const Coalgebra& c, const SparseVec& x);

/// χ(V) = Σ_i c_ii, checked to be a cotrace. Throws on a comodule axiom failure.
SparseVec comodule_character(const Coalgebra& c, const Comodule& v);

/// True iff the characters of vs span the cotrace space.
bool enough_characters(const Coalgebra& c, const std::vector<Comodule>& vs);

/// Grouplikes among ±-combinations of basis vectors (dim <= 8), in code order.
std::vector<SparseVec> grouplike_candidates(const Coalgebra& c);

}  // namespace cychom

#endif
