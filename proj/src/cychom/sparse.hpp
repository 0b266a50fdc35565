#ifndef CYCHOM_SPARSE_HPP
#define CYCHOM_SPARSE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cychom/rational.hpp"

namespace cychom {

using Index = std::uint64_t;

/// Sparse vector: terms sorted by strictly increasing index, no zero values.
template <class F>
class SparseVecT {
 public:
  using Term = std::pair<Index, F>;

  SparseVecT() = default;

  /// Sums duplicate indices and drops zeros.
  static SparseVecT from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    SparseVecT out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second += t.second;
      } else {
        if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
    return out;
  }

  /// Caller guarantees sorted unique indices and nonzero values.
  static SparseVecT from_sorted(std::vector<Term> terms) {
    SparseVecT out;
    out.terms_ = std::move(terms);
    return out;
  }

  static SparseVecT unit(Index i, F value = F(1)) {
    SparseVecT out;
    if (!value.is_zero()) out.terms_.emplace_back(i, std::move(value));
    return out;
  }

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  [[nodiscard]] F get(Index i) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const Term& t, Index k) { return t.first < k; });
    if (it != terms_.end() && it->first == i) return it->second;
    return F();
  }

  [[nodiscard]] Index max_index_plus_one() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

  /// this += c * o
  void add_scaled(const SparseVecT& o, const F& c) {
    if (c.is_zero() || o.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a));
        ++a;
      } else if (a == terms_.end() || b->first < a->first) {
        merged.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        F v = a->second + c * b->second;
        if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  SparseVecT& operator+=(const SparseVecT& o) {
    add_scaled(o, F(1));
    return *this;
  }
  SparseVecT& operator-=(const SparseVecT& o) {
    add_scaled(o, F(-1));
    return *this;
  }
  SparseVecT& operator*=(const F& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }
  friend SparseVecT operator+(SparseVecT a, const SparseVecT& b) { return a += b; }
  friend SparseVecT operator-(SparseVecT a, const SparseVecT& b) { return a -= b; }
  friend SparseVecT operator*(const F& c, SparseVecT a) { return a *= c; }
  friend bool operator==(const SparseVecT& a, const SparseVecT& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparseVecT& a, const SparseVecT& b) { return !(a == b); }

  /// Index-wise remap; duplicates after remapping are summed.
  template <class Fn>
  [[nodiscard]] SparseVecT remap(Fn&& fn) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(fn(t.first), t.second);
    return from_terms(std::move(out));
  }

 private:
  std::vector<Term> terms_;
};

/// Column-compressed sparse matrix over F.
template <class F>
class SparseMatT {
 public:
  using Vec = SparseVecT<F>;

  SparseMatT() = default;
  SparseMatT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatT identity(std::size_t n) {
    SparseMatT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i] = Vec::unit(i);
    return m;
  }

  static SparseMatT from_columns(std::size_t rows, std::vector<Vec> columns) {
    SparseMatT m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].max_index_plus_one() > rows)
        throw std::out_of_range("column entry exceeds row count");
      m.columns_[j] = std::move(columns[j]);
    }
    return m;
  }

  /// Dense row-major constructor, convenient in tests.
  static SparseMatT from_dense(const std::vector<std::vector<F>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    SparseMatT m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<typename Vec::Term> terms;
      for (std::size_t i = 0; i < r; ++i)
        if (!rows[i][j].is_zero()) terms.emplace_back(i, rows[i][j]);
      m.columns_[j] = Vec::from_sorted(std::move(terms));
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const Vec& column(std::size_t j) const { return columns_.at(j); }
  [[nodiscard]] const std::vector<Vec>& columns() const noexcept { return columns_; }
  void set_column(std::size_t j, Vec v) {
    if (v.max_index_plus_one() > rows_) throw std::out_of_range("column entry exceeds row count");
    columns_.at(j) = std::move(v);
  }

  [[nodiscard]] F at(std::size_t i, std::size_t j) const { return columns_.at(j).get(i); }

  [[nodiscard]] std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : columns_)
      if (!c.is_zero()) return false;
    return true;
  }

  [[nodiscard]] Vec apply(const Vec& v) const {
    std::vector<typename Vec::Term> acc;
    for (const auto& [j, x] : v) {
      if (j >= cols_) throw std::out_of_range("vector index exceeds column count");
      for (const auto& [i, a] : columns_[j]) acc.emplace_back(i, a * x);
    }
    return Vec::from_terms(std::move(acc));
  }

  [[nodiscard]] SparseMatT transpose() const {
    std::vector<std::vector<typename Vec::Term>> rows(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, a] : columns_[j]) rows[i].emplace_back(j, a);
    SparseMatT t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) t.columns_[i] = Vec::from_sorted(std::move(rows[i]));
    return t;
  }

  friend SparseMatT operator*(const SparseMatT& a, const SparseMatT& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                  std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                  std::to_string(b.cols_));
    SparseMatT c(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) c.columns_[j] = a.apply(b.columns_[j]);
    return c;
  }

  friend SparseMatT operator+(SparseMatT a, const SparseMatT& b) {
    a.check_same_shape(b);
    for (std::size_t j = 0; j < a.cols_; ++j) a.columns_[j] += b.columns_[j];
    return a;
  }
  friend SparseMatT operator-(SparseMatT a, const SparseMatT& b) {
    a.check_same_shape(b);
    for (std::size_t j = 0; j < a.cols_; ++j) a.columns_[j] -= b.columns_[j];
    return a;
  }
  friend SparseMatT operator*(const F& c, SparseMatT a) {
    for (auto& col : a.columns_) col *= c;
    return a;
  }
  friend bool operator==(const SparseMatT& a, const SparseMatT& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }
  friend bool operator!=(const SparseMatT& a, const SparseMatT& b) { return !(a == b); }

  /// First column where a and b differ, or cols() when equal.
  [[nodiscard]] std::size_t first_difference(const SparseMatT& b) const {
    check_same_shape(b);
    for (std::size_t j = 0; j < cols_; ++j)
      if (columns_[j] != b.columns_[j]) return j;
    return cols_;
  }

  /// Entrywise conversion into another field.
  template <class G, class Conv>
  [[nodiscard]] SparseMatT<G> convert(Conv&& conv) const {
    std::vector<SparseVecT<G>> cols;
    cols.reserve(cols_);
    for (const auto& c : columns_) {
      std::vector<typename SparseVecT<G>::Term> t;
      for (const auto& [i, a] : c) t.emplace_back(i, conv(a));
      cols.push_back(SparseVecT<G>::from_terms(std::move(t)));
    }
    return SparseMatT<G>::from_columns(rows_, std::move(cols));
  }

 private:
  void check_same_shape(const SparseMatT& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> columns_;
};

using SparseVec = SparseVecT<Rational>;
using SparseMat = SparseMatT<Rational>;

/// Block matrix helpers.
template <class F>
SparseMatT<F> hstack(const std::vector<SparseMatT<F>>& blocks, std::size_t rows) {
  std::vector<SparseVecT<F>> cols;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    for (const auto& c : b.columns()) cols.push_back(c);
  }
  return SparseMatT<F>::from_columns(rows, std::move(cols));
}

template <class F>
SparseMatT<F> vstack(const std::vector<SparseMatT<F>>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  std::vector<std::vector<typename SparseVecT<F>::Term>> out(cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [i, a] : b.column(j)) out[j].emplace_back(i + off, a);
    off += b.rows();
  }
  std::vector<SparseVecT<F>> vs;
  vs.reserve(cols);
  for (auto& t : out) vs.push_back(SparseVecT<F>::from_sorted(std::move(t)));
  return SparseMatT<F>::from_columns(rows, std::move(vs));
}

}  // namespace cychom

#endif
