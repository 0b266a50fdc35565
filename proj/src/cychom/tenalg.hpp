#ifndef CYCHOM_TENALG_HPP
#define CYCHOM_TENALG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cychom/sparse.hpp"

namespace cychom {

/// Finite-dimensional vector space with named basis vectors.
class BasedSpace {
 public:
  BasedSpace() = default;
  explicit BasedSpace(std::vector<std::string> labels);
  /// Basis labelled prefix0, prefix1, ...
  static BasedSpace numbered(std::size_t dim, const std::string& prefix = "e");

  [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const BasedSpace& a, const BasedSpace& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Mixed-radix code of multi-indices; the first factor is most significant.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> dims);
  static MixedRadix power(std::size_t dim, std::size_t n) { return MixedRadix(std::vector<std::size_t>(n, dim)); }

  [[nodiscard]] std::size_t arity() const noexcept { return dims_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// Number of multi-indices (product of dims; 1 for arity 0).
  [[nodiscard]] Index total() const noexcept { return total_; }

  [[nodiscard]] Index encode(const std::vector<std::size_t>& digits) const;
  [[nodiscard]] std::vector<std::size_t> decode(Index code) const;
  void decode_into(Index code, std::vector<std::size_t>& digits) const;

 private:
  std::vector<std::size_t> dims_;
  Index total_ = 1;
};

/// Element of V_1 ⊗ ... ⊗ V_n.
struct TensorElem {
  std::vector<BasedSpace> factors;
  SparseVec coeffs;

  [[nodiscard]] MixedRadix radix() const;
};

/// (f_1 ⊗ ... ⊗ f_n)(x), where f_k: V_k -> W_k is a W_k.dim x V_k.dim matrix
/// and x is coded over the radix of the V_k.
SparseVec apply_tensor_maps(const std::vector<const SparseMat*>& maps, const SparseVec& x);

/// Matrix of f⊗g with the f leg most significant.
SparseMat kron(const SparseMat& f, const SparseMat& g);

/// f^{⊗n}(x) for x coded over V^{⊗n}.
SparseVec apply_tensor_power(const SparseMat& f, std::size_t n, const SparseVec& x);

/// Same, with factor spaces checked.
TensorElem apply_tensor_power(const SparseMat& f, const BasedSpace& target, std::size_t n, const TensorElem& x);

/// Matrix of f^{⊗n}.
SparseMat tensor_power_matrix(const SparseMat& f, std::size_t n);

/// x ⊗ y for x coded over radix Dx and y of dimension ydim (y is the least significant block).
SparseVec tensor(const SparseVec& x, const SparseVec& y, Index ydim);

}  // namespace cychom

#endif
