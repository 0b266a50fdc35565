#ifndef CYCHOM_CHERN_HPP
#define CYCHOM_CHERN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cychom/galois.hpp"

namespace cychom {

/// Raised when a sequence x_0, x_1, ... fails t(x_m) = (-1)^m x_m or d_i x_m = x_{m-1}.
class KSequenceViolation : public std::runtime_error {
 public:
  KSequenceViolation(const std::string& condition, std::size_t m);
  [[nodiscard]] const std::string& condition() const noexcept { return condition_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }

 private:
  std::string condition_;
  std::size_t m_;
};

/// terms[m] in A^{⊗(m+1)}.
struct KSequence {
  std::vector<SparseVec> terms;
};

/// One certificate per m for cyclic symmetry and one per m >= 1 for the faces.
std::vector<Certificate> ksequence_certificates(const Algebra& a, const KSequence& x);

/// (-1)^{⌊m/2⌋} m!/⌊m/2⌋!.
Rational character_coefficient(std::size_t m);

struct CharacterClass {
  std::size_t n = 0;   // degree 2n
  CyclicChain cycle;   // column p holds coefficient·x_{2n-p}
  std::vector<Certificate> certificates;
  [[nodiscard]] bool all_pass() const;
};

/// ch_n(x) in Tot CC_{2n}(A). Needs terms 0..2n and throws KSequenceViolation
/// on the first failed condition.
CharacterClass abstract_character(const Algebra& a, const KSequence& x, std::size_t n);

/// Character of a chain living on two algebras: the upper one where the
/// sequence is built and its image in Tot CC(B).
struct ChernCharacter {
  CharacterClass upper;
  CharacterClass base;
};

class NotIdempotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// e is an element of matrix_algebra(b, size). Pushes ch_n(c(e)) to B with the trace map.
ChernCharacter idempotent_chern(const Algebra& b, std::size_t size, const SparseVec& e, std::size_t n);

/// Raised when a circular evaluation leaves M^{⊗(m+1)}.
class ChainEscapes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c_m(ℓ)(c) in M^{⊗(m+1)}, M coordinates of the ES coring. c must be a cotrace.
SparseVec chw_chain(const ESCoring& es, const ComoduleAlgebra& ca, const SparseMat& ell, const SparseVec& c,
                    std::size_t m);

/// Chern-Weil character: the sequence c_m(ℓ)(c), m = 0..2n, its character in
/// Tot CC(M) and the ε_M-image in Tot CC(B).
ChernCharacter chern_weil(const ESCoring& es, const ComoduleAlgebra& ca, const SparseMat& ell, const SparseVec& c,
                          std::size_t n);

/// ε_M^{⊗} applied columnwise.
CyclicChain push_to_base(const ESCoring& es, const CyclicChain& x);

/// Certificate that S(next) is homologous to prev in Tot CC(a), with the witness
/// chain when found.
struct PeriodicityCheck {
  Certificate certificate;
  std::optional<SparseVec> witness;
};
PeriodicityCheck periodicity(const Algebra& a, const CyclicChain& next, const CyclicChain& prev);

/// V as a left C-comodule v_i ↦ Σ_j c_ij⊗v_j. With a basis w_s of A□V and
/// ℓ(c_ij)⊗v_j = Σ_s g_is⊗w_s, E_st = Σ_i (w_s)_i g_it. Entries lie in B.
struct AssociatedIdempotent {
  std::size_t size = 0;                 // dim A□V
  std::vector<SparseVec> cotensor_basis;  // in A⊗V coordinates, code a·dim V + i
  SparseVec matrix;                     // element of matrix_algebra(B, size)
  std::vector<Certificate> certificates;
};
AssociatedIdempotent associated_idempotent(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                           const Comodule& v);

/// Σ over index cycles of ⊗_k ℓ(c_{i_k i_{k+1}})^{⟨2⟩} ℓ(c_{i_{k+1} i_{k+2}})^{⟨1⟩} in B^{⊗(m+1)}.
SparseVec chern_galois_direct(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                              const Comodule& v, std::size_t m);

struct FactorizationReport {
  CyclicChain chern_weil, direct, idempotent;  // all in Tot CC_{2n}(B)
  std::optional<SparseVec> witness;            // (a) - (c) = d(witness)
  std::vector<Certificate> certificates;
  [[nodiscard]] bool all_pass() const;
};
FactorizationReport verify_factorization(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                         const Comodule& v, std::size_t n);

enum class Verdict { Homologous, NotHomologous, NotDecidable };
std::string verdict_name(Verdict v);

struct IndependenceReport {
  Verdict verdict = Verdict::NotDecidable;
  bool observed_homologous = false;  // computed even when the verdict is NotDecidable
  std::optional<SparseVec> witness;
  std::vector<Rational> decomposition;  // c over the characters of the given comodules
  std::vector<Certificate> certificates;
};
/// Compares the B-level Chern-Weil classes of c for two strong connections.
/// The verdict is NotDecidable when c is outside the span of the characters of
/// `comodules` and these do not span the cotraces.
IndependenceReport connection_independence(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell1,
                                           const SparseMat& ell2, const SparseVec& c,
                                           const std::vector<Comodule>& comodules, std::size_t n);

/// One-dimensional comodule with matrix (c) for a grouplike c.
Comodule line_comodule(const SparseVec& c, std::string name);
/// δ_0 - δ_1 in k^{ℤ/2}.
Comodule sign_comodule();

}  // namespace cychom

#endif
