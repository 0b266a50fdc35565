#include "cychom/tenalg.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace cychom {

BasedSpace::BasedSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("basis labels must be unique");
}

BasedSpace BasedSpace::numbered(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return BasedSpace(std::move(labels));
}

MixedRadix::MixedRadix(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  total_ = 1;
  for (std::size_t d : dims_) {
    if (d != 0 && total_ > std::numeric_limits<Index>::max() / d)
      throw std::overflow_error("tensor space too large for a 64-bit multi-index code");
    total_ *= d;
  }
}

Index MixedRadix::encode(const std::vector<std::size_t>& digits) const {
  if (digits.size() != dims_.size()) throw std::invalid_argument("multi-index arity mismatch");
  Index code = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] >= dims_[k]) throw std::out_of_range("multi-index digit out of range");
    code = code * dims_[k] + digits[k];
  }
  return code;
}

std::vector<std::size_t> MixedRadix::decode(Index code) const {
  std::vector<std::size_t> digits;
  decode_into(code, digits);
  return digits;
}

void MixedRadix::decode_into(Index code, std::vector<std::size_t>& digits) const {
  if (code >= total_) throw std::out_of_range("multi-index code out of range");
  digits.resize(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    digits[k] = code % dims_[k];
    code /= dims_[k];
  }
}

MixedRadix TensorElem::radix() const {
  std::vector<std::size_t> dims;
  for (const auto& f : factors) dims.push_back(f.dim());
  return MixedRadix(dims);
}

SparseVec apply_tensor_maps(const std::vector<const SparseMat*>& maps, const SparseVec& x) {
  std::vector<std::size_t> in_dims, out_dims;
  for (const auto* f : maps) {
    in_dims.push_back(f->cols());
    out_dims.push_back(f->rows());
  }
  MixedRadix in(in_dims), out(out_dims);
  std::vector<SparseVec::Term> acc;
  std::vector<std::size_t> digits;
  std::vector<SparseVec::Term> partial, next;
  for (const auto& [code, a] : x) {
    in.decode_into(code, digits);
    partial.assign(1, {0, a});
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const SparseVec& col = maps[k]->column(digits[k]);
      next.clear();
      for (const auto& [p, c] : partial)
        for (const auto& [i, b] : col) next.emplace_back(p * out_dims[k] + i, c * b);
      partial.swap(next);
      if (partial.empty()) break;
    }
    for (auto& t : partial) acc.push_back(std::move(t));
  }
  return SparseVec::from_terms(std::move(acc));
}

SparseVec apply_tensor_power(const SparseMat& f, std::size_t n, const SparseVec& x) {
  std::vector<const SparseMat*> maps(n, &f);
  return apply_tensor_maps(maps, x);
}

TensorElem apply_tensor_power(const SparseMat& f, const BasedSpace& target, std::size_t n, const TensorElem& x) {
  if (x.factors.size() != n) throw std::invalid_argument("tensor arity does not match power");
  for (const auto& v : x.factors)
    if (v.dim() != f.cols() || !(v == x.factors.front()))
      throw std::invalid_argument("tensor factor does not match map domain");
  if (target.dim() != f.rows()) throw std::invalid_argument("target space does not match map codomain");
  TensorElem out;
  out.factors.assign(n, target);
  out.coeffs = apply_tensor_power(f, n, x.coeffs);
  return out;
}

SparseMat tensor_power_matrix(const SparseMat& f, std::size_t n) {
  MixedRadix in = MixedRadix::power(f.cols(), n);
  MixedRadix out = MixedRadix::power(f.rows(), n);
  std::vector<SparseVec> cols;
  cols.reserve(in.total());
  for (Index c = 0; c < in.total(); ++c) cols.push_back(apply_tensor_power(f, n, SparseVec::unit(c)));
  return SparseMat::from_columns(out.total(), std::move(cols));
}

SparseVec tensor(const SparseVec& x, const SparseVec& y, Index ydim) {
  std::vector<SparseVec::Term> t;
  t.reserve(x.size() * y.size());
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) t.emplace_back(i * ydim + j, a * b);
  return SparseVec::from_sorted(std::move(t));
}

SparseMat kron(const SparseMat& f, const SparseMat& g) {
  const Index gr = g.rows();
  std::vector<SparseVec> cols;
  cols.reserve(f.cols() * g.cols());
  for (std::size_t j1 = 0; j1 < f.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
      std::vector<SparseVec::Term> t;
      t.reserve(f.column(j1).size() * g.column(j2).size());
      for (const auto& [i1, a] : f.column(j1))
        for (const auto& [i2, b] : g.column(j2)) t.emplace_back(i1 * gr + i2, a * b);
      cols.push_back(SparseVec::from_sorted(std::move(t)));
    }
  return SparseMat::from_columns(f.rows() * gr, std::move(cols));
}

}  // namespace cychom
