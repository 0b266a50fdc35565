#ifndef CYCHOM_ROWEXT_HPP
#define CYCHOM_ROWEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cychom/chainkit.hpp"

namespace cychom {

/// Left B-module M with a left B-linear map ε: M -> B.
struct AugmentedModule {
  Algebra base;                 // B
  std::size_t mdim = 0;         // dim M
  std::vector<SparseMat> action;  // action[k]: M -> M, left multiplication by the k-th basis vector of B
  SparseMat eps;                // dim B x dim M

  [[nodiscard]] SparseVec act(const SparseVec& b, const SparseVec& m) const;
};

/// Returns a description of the first failure of the module axioms or of
/// left B-linearity of ε.
std::optional<std::string> augmented_module_violation(const AugmentedModule& am);

/// Ring structure m·m′ = ε(m)m′ on M with a section σ: B -> M.
/// The adapted basis lists a basis of I = ker ε first, then σ(b_k).
struct RowExtension {
  Algebra base;
  Algebra ring;                   // M, original basis
  SparseMat eps;                  // M -> B
  SparseMat sigma;                // B -> M
  std::vector<SparseVec> ideal;   // basis of I in M coordinates
  SparseMat from_adapted;         // adapted -> M coordinates
  SparseMat to_adapted;           // inverse
  Algebra adapted;                // M in the adapted basis
  std::vector<SparseVec> omega;   // omega[j*dimB + j'] = σ(b_j)σ(b_j') - σ(b_j b_j'), in I coordinates

  [[nodiscard]] std::size_t ideal_dim() const { return ideal.size(); }
  [[nodiscard]] bool omega_is_zero() const;
};

/// Builds the ring on M. Throws std::invalid_argument when ε is not left
/// B-linear, ε∘σ != id, or associativity fails.
RowExtension row_extension(const AugmentedModule& am, const SparseMat& sigma);

/// B-module I ⊕ B with j·(i′, j′) = (j·i′ + ω(j, j′), jj′); ε the projection onto B.
/// i_action[k]: I -> I for the k-th basis vector of B; omega[j*dimB + j'] in I.
AugmentedModule cocycle_module(const Algebra& base, const std::vector<SparseMat>& i_action,
                               const std::vector<SparseVec>& omega);
/// Basis of the solutions ω of j·ω(j′, j″) - ω(jj′, j″) + ω(j, j′j″) = 0, each
/// flattened as omega[j*dimB + j′] stacked over I coordinates.
std::vector<std::vector<SparseVec>> cocycle_space(const Algebra& base, const std::vector<SparseMat>& i_action);
/// Section j -> (0, j) of a cocycle_module.
SparseMat cocycle_section(std::size_t idim, std::size_t bdim);

struct Normalization {
  RowExtension normalized;      // same ring, section σ′ = σ - λ, so ω′ = 0
  std::vector<SparseVec> lambda;  // λ(b_j) in I coordinates
  SparseMat automorphism;       // (i, j) -> (i + λ(j), j) on adapted coordinates of the input
  std::vector<Certificate> certificates;
};

/// λ(j) = -ω(j, e) for a right unit e of B. Throws if B has no right unit.
Normalization normalize_cocycle(const RowExtension& re);

/// Left unit e of B acting as identity on M.
bool is_unitary(const RowExtension& re);

struct KernelContraction {
  std::vector<SparseMat> h;     // adapted M^{⊗(n+1)} -> M^{⊗(n+2)}, zero off the kernel
  std::vector<Certificate> certificates;
};

/// h(m_1..m_p, i, b_1..b_q) = (-1)^{p+1}(m_1..m_p, i, e, b_1..b_q) on the kernel of
/// ε^{⊗(n+1)}, n = 0..D; certifies bh + hb = Id there. Requires ω = 0.
KernelContraction kernel_contraction(const RowExtension& re, std::size_t D);

/// True iff the adapted basis tensor has at least one I factor.
bool in_kernel_basis(Index code, std::size_t mdim, std::size_t idim, std::size_t len);

struct EpsilonChainMap {
  std::vector<SparseMat> maps;  // Tot_n(M) -> Tot_n(B), adapted coordinates on M
  std::vector<Certificate> certificates;
};

/// ε^{⊗•+1} in the selected mode through degree D, with commutation certificates
/// for b, b′, t, N on tensor lengths 1..D+1 and for the total differential.
EpsilonChainMap epsilon_chain_map(const RowExtension& re, TotMode mode, std::size_t D);

/// 0 -> ker -> CC^{1}(M) -> CC^{1}(B) -> 0 in adapted coordinates through degree D,
/// with the kernel contraction as h. Requires ω = 0.
SplitSequence epsilon_split_sequence(const RowExtension& re, std::size_t D);

/// Random augmented module with dim M <= 4 over B in {k, k², k[x]/(x²)} and a
/// section perturbed by a random non-B-linear map into I.
std::pair<AugmentedModule, SparseMat> random_augmented_module(std::uint64_t seed);

}  // namespace cychom

#endif
