#ifndef CYCHOM_GALOIS_HPP
#define CYCHOM_GALOIS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cychom/exactlin.hpp"
#include "cychom/rowext.hpp"

namespace cychom {

/// Right C-comodule algebra. coaction is (dimA·dimC) x dimA with ρ(a_i) coded
/// over A⊗C, A leg most significant. hopf carries the algebra structure of C
/// when C is a Hopf algebra with unit e.
struct ComoduleAlgebra {
  Algebra alg;
  Coalgebra coalg;
  SparseMat coaction;
  std::optional<HopfAlgebra> hopf;
  std::string name;

  [[nodiscard]] std::size_t adim() const { return alg.dim(); }
  [[nodiscard]] std::size_t cdim() const { return coalg.dim(); }
  [[nodiscard]] const SparseVec& grouplike() const;
};

/// entries (i, j, k, a): ρ(a_i) contains a·a_j⊗c_k.
ComoduleAlgebra comodule_algebra(Algebra a, Coalgebra c,
                                 const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries,
                                 std::optional<HopfAlgebra> hopf = std::nullopt, std::string name = {});

/// First failure of coassociativity, counitality, ρ(1) = 1⊗e, or (Hopf mode)
/// multiplicativity of ρ.
std::optional<std::string> comodule_algebra_violation(const ComoduleAlgebra& ca);

/// Raised when can or ψ is not bijective; deficit = dim - rank.
class NotGalois : public std::runtime_error {
 public:
  NotGalois(const std::string& what, std::size_t deficit) : std::runtime_error(what), deficit_(deficit) {}
  [[nodiscard]] std::size_t deficit() const { return deficit_; }

 private:
  std::size_t deficit_;
};

struct Invariants {
  Algebra base;          // B with basis given by the embedding columns
  SparseMat embedding;   // dimA x dimB
};

/// B = ker(ρ - (·⊗e)), closed under the product and containing 1_A.
Invariants invariants(const ComoduleAlgebra& ca);

/// A⊗_B A as A⊗A modulo the span of ab⊗a′ - a⊗ba′, with reduced-echelon representatives.
struct BalancedTensor {
  std::size_t adim = 0;
  std::vector<Index> free_positions;  // A⊗A codes spanning the quotient
  Echelon relations;                  // reduced
  [[nodiscard]] std::size_t dim() const { return free_positions.size(); }
  [[nodiscard]] SparseVec project(const SparseVec& x) const;  // A⊗A -> quotient coordinates
  [[nodiscard]] SparseVec lift(const SparseVec& q) const;     // quotient -> A⊗A representative
};

struct GaloisData {
  Invariants inv;
  BalancedTensor quotient;
  SparseMat can_tensor;   // A⊗A -> A⊗C
  SparseMat can;          // quotient -> A⊗C
  SparseMat can_inverse;  // A⊗C -> quotient
  SparseMat psi;          // C⊗A -> A⊗C
  SparseMat psi_inverse;
  SparseMat left_coaction;  // A -> C⊗A
  std::vector<Certificate> certificates;
};

/// Invariants, the balanced tensor product and the canonical map. Throws NotGalois.
GaloisData canonical_map(const ComoduleAlgebra& ca);
/// Adds ψ, ψ⁻¹ and λ(a) = ψ⁻¹(a⊗e) with coassociativity/counit certificates. Throws NotGalois.
void entwining(const ComoduleAlgebra& ca, GaloisData& g);
/// Both steps.
GaloisData galois_data(const ComoduleAlgebra& ca);

/// τ(c) = can⁻¹(1⊗c) in quotient coordinates.
SparseVec translation_map(const GaloisData& g, const ComoduleAlgebra& ca, const SparseVec& c);
/// m∘τ = ε(-)1 and bicolinearity of τ on a basis of C.
std::vector<Certificate> check_translation_map(const GaloisData& g, const ComoduleAlgebra& ca);

struct StrongConnection {
  SparseMat ell;  // A⊗A x C
  std::vector<Certificate> certificates;
  [[nodiscard]] bool all_pass() const;
};

/// Certificates for lifting, left and right colinearity, and (optionally) ℓ(e) = 1⊗1.
std::vector<Certificate> check_strong_connection(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                                 bool unital = true);

struct StrongConnectionSpace {
  SparseMat particular;            // echelon-minimal solution
  std::vector<SparseMat> directions;  // kernel of the homogeneous system
};

/// Affine space of solutions; throws std::runtime_error when empty.
StrongConnectionSpace strong_connection_space(const GaloisData& g, const ComoduleAlgebra& ca, bool unital = true);
StrongConnection solve_strong_connection(const GaloisData& g, const ComoduleAlgebra& ca, bool unital = true);

/// Basis of A□^C A = ker(ρ⊗id - id⊗λ) in A⊗A coordinates.
std::vector<SparseVec> cotensor(const GaloisData& g, const ComoduleAlgebra& ca);

struct ESCoring {
  std::vector<SparseVec> basis;     // M inside A⊗A
  SubspaceCoords coords;            // A⊗A -> M
  SparseMat counit;                 // ε_M: M -> B
  SparseMat comult;                 // Δ_M: M -> M⊗M through the ℓ-lift
  SparseMat sigma;                  // b -> b⊗1
  AugmentedModule module;
  RowExtension ring;
  std::vector<Certificate> certificates;
};

ESCoring es_coring(const GaloisData& g, const ComoduleAlgebra& ca, const StrongConnection& ell);

struct RowIso {
  std::size_t b_dim = 0, omega_dim = 0;
  std::vector<SparseVec> omega_basis;  // Ω¹(A)^{coH} in A⊗A coordinates
  SparseMat map;                       // M -> B ⊕ Ω¹(A)^{coH}
  std::vector<Certificate> certificates;
};

/// Σa⊗a′ ↦ (Σaa′, Σa da′) with da = 1⊗a - a⊗1; Hopf mode only.
RowIso row_iso_omega(const GaloisData& g, const ComoduleAlgebra& ca, const ESCoring& es);

// Bundled examples.
ComoduleAlgebra trivial_coaction(const Algebra& a);
/// H = k^G coacting on itself by Δ.
ComoduleAlgebra hopf_self_coaction(const Group& g);
/// A = k^{ℤ/4}, H = k^{ℤ/2}, coaction from x ↦ x + 2.
ComoduleAlgebra z4_over_z2();
/// A = B⊗k^G with coaction id⊗Δ.
ComoduleAlgebra trivial_bundle(const Algebra& b, const Group& g);
/// ℤ/2 acting trivially on k²: not Galois.
ComoduleAlgebra nonfree_z2_on_k2();

}  // namespace cychom

#endif
