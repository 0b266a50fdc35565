#ifndef CYCHOM_CHAINKIT_HPP
#define CYCHOM_CHAINKIT_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cychom/structalg.hpp"

namespace cychom {

/// Operators on A^{⊗(n+1)}. b and b′ map to A^{⊗n}; for n = 0 they are 0 x dim.
struct CyclicOps {
  SparseMat b, bprime, t, N;
};

SparseMat hochschild_b(const Algebra& a, std::size_t n);
SparseMat bar_bprime(const Algebra& a, std::size_t n);
SparseMat cyclic_t(const Algebra& a, std::size_t n);
SparseMat cyclic_norm(const Algebra& a, std::size_t n);
/// i-th face d_i: A^{⊗(n+1)} -> A^{⊗n}, 0 <= i <= n, d_n the wrap-around face.
SparseMat face_map(const Algebra& a, std::size_t n, std::size_t i);
CyclicOps cyclic_operators(const Algebra& a, std::size_t n);

/// Bounded chain complex C_0 <- C_1 <- ... <- C_top. d(n): C_n -> C_{n-1} for
/// 1 <= n <= top. A truncated complex has unknown C_{top+1}, so its homology
/// is only reported below top.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::size_t> dims, std::vector<SparseMat> d, bool truncated);

  [[nodiscard]] std::size_t top() const noexcept { return dims_.size() - 1; }
  [[nodiscard]] std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// C_n -> C_{n-1}; zero matrices outside 1..top.
  [[nodiscard]] SparseMat d(std::size_t n) const;
  [[nodiscard]] bool truncated() const noexcept { return truncated_; }
  /// Lowest n with d(n-1)∘d(n) != 0.
  [[nodiscard]] std::optional<std::size_t> d_squared_failure() const;
  [[nodiscard]] std::size_t rank_d(std::size_t n) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<SparseMat> d_;  // d_[0] unused
  bool truncated_ = false;
  mutable std::map<std::size_t, std::size_t> rank_cache_;
};

/// dim ker d_n - rank d_{n+1} for every degree whose homology is determined.
std::vector<std::size_t> homology_dims(const ChainComplex& c);

enum class TotMode { Full, CC2, CC1, Bar };
TotMode parse_mode(const std::string& s);
std::string mode_name(TotMode m);

/// Column indices p present in total degree n.
std::vector<std::size_t> tot_columns(TotMode mode, std::size_t n);
/// Offset of column p in Tot_n, and dimension of Tot_n, for an algebra of dimension dim.
Index tot_offset(TotMode mode, std::size_t dim, std::size_t n, std::size_t p);
Index tot_dim(TotMode mode, std::size_t dim, std::size_t n);

/// Total complex of the selected sub-bicomplex in degrees 0..D+1, so that
/// homology is determined through degree D. Bar mode is (A^{⊗(n+1)}, b′).
ChainComplex tot_cc(const Algebra& a, TotMode mode, std::size_t D);
/// Single total differential Tot_n -> Tot_{n-1}.
SparseMat tot_differential(const Algebra& a, TotMode mode, std::size_t n);

/// Element of Tot CC in a fixed degree; columns[p] lives in A^{⊗(degree-p+1)}.
struct CyclicChain {
  std::size_t degree = 0;
  std::size_t dim = 0;  // dimension of the algebra
  std::vector<SparseVec> columns;

  static CyclicChain zero(std::size_t degree, std::size_t dim);
  [[nodiscard]] SparseVec to_tot(TotMode mode = TotMode::Full) const;
  static CyclicChain from_tot(const SparseVec& v, std::size_t degree, std::size_t dim, TotMode mode = TotMode::Full);
  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const CyclicChain& a, const CyclicChain& b) {
    return a.degree == b.degree && a.dim == b.dim && a.columns == b.columns;
  }
  CyclicChain& operator+=(const CyclicChain& o);
  CyclicChain& operator-=(const CyclicChain& o);
  friend CyclicChain operator-(CyclicChain a, const CyclicChain& b) { return a -= b; }
};

/// Total boundary of a chain.
CyclicChain total_boundary(const Algebra& a, const CyclicChain& x);

/// Drops columns 0 and 1 and shifts the rest down by two.
CyclicChain connes_S(const CyclicChain& x);

/// z with x - y = d(z) in degree n of c, or nullopt. Throws if x or y is not a cycle.
std::optional<SparseVec> homologous(const SparseVec& x, const SparseVec& y, const ChainComplex& c, std::size_t n);

// ---- homotopy lemmas ----

/// Error naming the violated identity and a witness basis vector.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(std::string label, std::size_t degree, std::size_t witness);
  const std::string& label() const noexcept { return label_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t witness() const noexcept { return witness_; }

 private:
  std::string label_;
  std::size_t degree_, witness_;
};

/// Graded-split short exact sequence 0 -> X -> Y -> Z -> 0 with a contraction h
/// of X. All per-degree vectors are indexed by degree 0..top, where top is the
/// common top degree; h[n]: X_n -> X_{n+1}.
struct SplitSequence {
  ChainComplex X, Y, Z;
  std::vector<SparseMat> iota, pi, rho, sigma, h;
};

struct Certificate {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct KillResult {
  std::vector<SparseMat> sigma_tilde;  // Z_n -> Y_n
  std::vector<SparseMat> h_tilde;      // Y_n -> Y_{n+1}
  std::vector<SparseMat> rho_tilde;    // dual form: Y_n -> X_n
  std::vector<Certificate> certificates;
  [[nodiscard]] bool all_pass() const;
};

/// Checks the splitting identities, then returns σ̃ = (1 - h̃d)σ and h̃ = ιhρ with
/// certificates πσ̃ = 1, dσ̃ = σ̃d, σ̃π + dh̃ + h̃d = 1.
KillResult kill_contractible(const SplitSequence& s);

/// Dual form for a contractible quotient (h contracts Z): ρ̃ = ρ(1 - dh̃) with
/// h̃ = σhπ, certified by ρ̃ι = 1, dρ̃ = ρ̃d, ιρ̃ + dh̃ + h̃d = 1.
KillResult kill_contractible_dual(const SplitSequence& s);

/// Cone-plus-twist generator: contractible X, random Z, random basis changes.
SplitSequence random_split_sequence(std::uint64_t seed, std::size_t max_dim = 4, std::size_t length = 5);

/// CC^{1} -> Tot CC^{2} -> (second column, a shifted bar complex) through degree D;
/// h contracts the quotient.
SplitSequence bar_split_sequence(const Algebra& a, std::size_t D);

/// h(x) = e⊗x on A^{⊗(n+1)} for n = 0..D, e the left unit.
std::vector<SparseMat> bar_contraction(const Algebra& a, std::size_t D);
/// b′h + hb′ = 1 through degree D.
Certificate check_bar_contraction(const Algebra& a, const std::vector<SparseMat>& h, std::size_t D);

struct MatrixStability {
  Algebra matrices;
  std::vector<SparseMat> inc, tr, h;  // per degree 0..D
  std::vector<Certificate> certificates;
};

/// inc: C(B) -> C(M_n(B)), tr its trace left inverse, and h with id - inc∘tr = bh + hb.
MatrixStability matrix_stability(const Algebra& b, std::size_t n, std::size_t D);

/// Trace map C_k(M_n(B)) -> C_k(B).
SparseMat trace_map(const Algebra& b, std::size_t n, std::size_t k);

struct ConjugationHomotopy {
  Algebra matrices;
  SparseVec gamma, gamma_inv;
  std::vector<SparseMat> conj, h;
  std::vector<Certificate> certificates;
};

/// Homotopy between id and conjugation by γ on C(M_n(B)) through degree D.
ConjugationHomotopy conjugation_homotopy(const Algebra& b, std::size_t n, const SparseVec& gamma, std::size_t D);

/// Inverse of an element of a unital algebra, or nullopt.
std::optional<SparseVec> algebra_inverse(const Algebra& a, const SparseVec& x);

/// First basis vector where two matrices of equal shape differ, as text.
std::string matrix_witness(const SparseMat& lhs, const SparseMat& rhs);

}  // namespace cychom

#endif
