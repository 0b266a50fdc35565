#ifndef CYCHOM_EXACTLIN_HPP
#define CYCHOM_EXACTLIN_HPP

// Exact Gaussian elimination over Q or F_p.
//
// Pivoting is deterministic: rows are consumed in index order and each row's
// pivot is its smallest surviving column. Every basis produced here is
// therefore a pure function of the input matrix.

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "cychom/sparse.hpp"

namespace cychom {

/// Incremental row echelon form over a fixed number of columns.
template <class F>
class EchelonT {
 public:
  using Vec = SparseVecT<F>;

  explicit EchelonT(std::size_t width)
      : width_(width), pivot_of_col_(width, kNone), scratch_(width), mark_(width, 0) {}

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<Vec>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<Index>& pivots() const noexcept { return pivot_cols_; }
  [[nodiscard]] bool is_pivot(Index c) const { return pivot_of_col_.at(c) != kNone; }

  /// v reduced against every pivot; the result has no entry in a pivot column.
  /// Columns >= limit are never used as pivots for reduction.
  [[nodiscard]] Vec reduce(const Vec& v) const {
    std::vector<Index> touched;
    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
    for (const auto& [i, a] : v) {
      check(i);
      scratch_[i] = a;
      mark_[i] = 1;
      touched.push_back(i);
      heap.push(i);
    }
    std::vector<typename Vec::Term> out;
    while (!heap.empty()) {
      Index i = heap.top();
      heap.pop();
      if (scratch_[i].is_zero()) continue;
      std::size_t p = pivot_of_col_[i];
      if (p == kNone) {
        out.emplace_back(i, scratch_[i]);
        continue;
      }
      F coef = scratch_[i];
      for (const auto& [j, b] : rows_[p]) {
        if (!mark_[j]) {
          mark_[j] = 1;
          touched.push_back(j);
          heap.push(j);
        }
        scratch_[j] -= coef * b;
      }
    }
    for (Index t : touched) {
      scratch_[t] = F();
      mark_[t] = 0;
    }
    return Vec::from_sorted(std::move(out));
  }

  /// Reduces v and adds it as a new pivot row when nonzero. The stored row is
  /// scaled so that its pivot entry is 1. Returns true if the rank grew.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.is_zero()) return false;
    F lead = r.terms().front().second;
    if (!lead.is_one()) r *= lead.inverse();
    Index c = r.terms().front().first;
    pivot_of_col_[c] = rows_.size();
    pivot_cols_.push_back(c);
    rows_.push_back(std::move(r));
    return true;
  }

  /// Back-substitution to reduced row echelon form.
  void make_reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    // Eliminate from right to left so each pivot row is final when used.
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_cols_[a] > pivot_cols_[b]; });
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Vec& row = rows_[k];
      // Repeatedly remove entries sitting in other pivot columns, largest first.
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
          Index c = it->first;
          if (c == pivot_cols_[k]) continue;
          std::size_t p = pivot_of_col_[c];
          if (p == kNone) continue;
          F coef = it->second;
          row.add_scaled(rows_[p], -coef);
          changed = true;
          break;
        }
      }
    }
    reduced_ = true;
  }

  [[nodiscard]] bool is_reduced() const noexcept { return reduced_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  void check(Index i) const {
    if (i >= width_) throw std::out_of_range("vector index outside echelon width");
  }

  std::size_t width_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<Index> pivot_cols_;
  std::vector<Vec> rows_;
  bool reduced_ = false;
  mutable std::vector<F> scratch_;
  mutable std::vector<char> mark_;
};

template <class F>
struct AffineSolutionT {
  SparseVecT<F> particular;
  std::vector<SparseVecT<F>> kernel;
};

/// rank(m), exactly. Orientation and processing order are chosen for speed;
/// neither affects the result.
template <class F>
std::size_t rank(const SparseMatT<F>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const bool use_columns = m.rows() <= m.cols();
  SparseMatT<F> t;
  const SparseMatT<F>* src = &m;
  if (!use_columns) {
    t = m.transpose();
    src = &t;
  }
  std::vector<std::size_t> order(src->cols());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return src->column(a).size() < src->column(b).size();
  });
  EchelonT<F> ech(src->rows());
  const std::size_t cap = std::min(m.rows(), m.cols());
  for (std::size_t j : order) {
    ech.insert(src->column(j));
    if (ech.rank() == cap) break;
  }
  return ech.rank();
}

namespace detail {

/// RREF of the rows of m (optionally widened by extra columns).
template <class F>
EchelonT<F> row_rref(const SparseMatT<F>& m, const SparseVecT<F>* extra_col = nullptr) {
  SparseMatT<F> rows = m.transpose();
  const std::size_t width = m.cols() + (extra_col ? 1 : 0);
  EchelonT<F> ech(width);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (extra_col) {
      SparseVecT<F> r = rows.column(i);
      F b = extra_col->get(i);
      if (!b.is_zero()) r += SparseVecT<F>::unit(m.cols(), b);
      ech.insert(r);
    } else {
      ech.insert(rows.column(i));
    }
  }
  ech.make_reduced();
  return ech;
}

template <class F>
std::vector<SparseVecT<F>> kernel_from_rref(const EchelonT<F>& ech, std::size_t ncols) {
  std::vector<std::vector<typename SparseVecT<F>::Term>> free_terms(ncols);
  std::vector<char> is_free(ncols, 1);
  for (Index c : ech.pivots())
    if (c < ncols) is_free[c] = 0;
  for (std::size_t k = 0; k < ech.rows().size(); ++k) {
    Index pc = ech.pivots()[k];
    if (pc >= ncols) continue;
    for (const auto& [f, a] : ech.rows()[k])
      if (f < ncols && f != pc && is_free[f]) free_terms[f].emplace_back(pc, -a);
  }
  std::vector<SparseVecT<F>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (!is_free[f]) continue;
    auto& t = free_terms[f];
    t.emplace_back(f, F(1));
    basis.push_back(SparseVecT<F>::from_terms(std::move(t)));
  }
  return basis;
}

}  // namespace detail

/// Basis of {v : m v = 0}, one vector per free column in increasing order.
template <class F>
std::vector<SparseVecT<F>> kernel_basis(const SparseMatT<F>& m) {
  auto ech = detail::row_rref(m);
  return detail::kernel_from_rref(ech, m.cols());
}

/// Solutions of m x = rhs: the particular solution with all free variables
/// zero plus a kernel basis; nullopt when inconsistent.
template <class F>
std::optional<AffineSolutionT<F>> solve_affine(const SparseMatT<F>& m, const SparseVecT<F>& rhs) {
  if (rhs.max_index_plus_one() > m.rows()) throw std::invalid_argument("rhs length exceeds row count");
  auto ech = detail::row_rref(m, &rhs);
  for (Index c : ech.pivots())
    if (c == m.cols()) return std::nullopt;
  std::vector<typename SparseVecT<F>::Term> part;
  for (std::size_t k = 0; k < ech.rows().size(); ++k) {
    F v = ech.rows()[k].get(m.cols());
    if (!v.is_zero()) part.emplace_back(ech.pivots()[k], v);
  }
  AffineSolutionT<F> sol;
  sol.particular = SparseVecT<F>::from_terms(std::move(part));
  sol.kernel = detail::kernel_from_rref(ech, m.cols());
  return sol;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<SparseMatT<F>> inverse(const SparseMatT<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  SparseMatT<F> rows = m.transpose();
  EchelonT<F> ech(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVecT<F> r = rows.column(i);
    r += SparseVecT<F>::unit(n + i);
    ech.insert(r);
  }
  ech.make_reduced();
  if (ech.rank() != n) return std::nullopt;
  std::vector<std::vector<typename SparseVecT<F>::Term>> cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    Index pc = ech.pivots()[k];
    if (pc >= n) return std::nullopt;
    for (const auto& [j, a] : ech.rows()[k])
      if (j >= n) cols[j - n].emplace_back(pc, a);
  }
  // Row pc of the inverse is the right half of pivot row pc.
  std::vector<SparseVecT<F>> out;
  out.reserve(n);
  for (auto& c : cols) out.push_back(SparseVecT<F>::from_terms(std::move(c)));
  return SparseMatT<F>::from_columns(n, std::move(out));
}

/// Coordinates with respect to a fixed family of independent vectors.
template <class F>
class SubspaceCoordsT {
 public:
  using Vec = SparseVecT<F>;

  /// basis: independent vectors in an ambient space of dimension `ambient`.
  SubspaceCoordsT(std::size_t ambient, std::vector<Vec> basis)
      : ambient_(ambient), basis_(std::move(basis)), ech_(ambient + basis_.size()) {
    const std::size_t r = basis_.size();
    for (std::size_t k = 0; k < r; ++k) {
      Vec row = basis_[k];
      row += Vec::unit(ambient_ + k);
      ech_.insert(row);
    }
    ech_.make_reduced();
    if (ech_.rank() != r) throw std::invalid_argument("subspace basis is not independent");
    for (std::size_t k = 0; k < r; ++k)
      if (ech_.pivots()[k] >= ambient_) throw std::invalid_argument("subspace basis is not independent");
    // Left inverse supported on pivot coordinates: x = sum_k v[p_k] * T_k.
    left_inverse_cols_.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<typename Vec::Term> t;
      for (const auto& [j, a] : ech_.rows()[k])
        if (j >= ambient_) t.emplace_back(j - ambient_, a);
      left_inverse_cols_[k] = Vec::from_sorted(std::move(t));
    }
  }

  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }
  [[nodiscard]] const std::vector<Vec>& basis() const noexcept { return basis_; }

  /// Coordinates of v; nullopt when v is outside the span.
  [[nodiscard]] std::optional<Vec> coords(const Vec& v) const {
    Vec x = project(v);
    if (embed(x) != v) return std::nullopt;
    return x;
  }

  /// Pivot-based left inverse; agrees with coords() on the span.
  [[nodiscard]] Vec project(const Vec& v) const {
    std::vector<typename Vec::Term> acc;
    for (std::size_t k = 0; k < ech_.rank(); ++k) {
      F a = v.get(ech_.pivots()[k]);
      if (a.is_zero()) continue;
      for (const auto& [i, b] : left_inverse_cols_[k]) acc.emplace_back(i, a * b);
    }
    return Vec::from_terms(std::move(acc));
  }

  /// Image of ambient basis vector a under project(), for building tensor powers.
  [[nodiscard]] Vec project_basis(Index a) const { return project(Vec::unit(a)); }

  [[nodiscard]] Vec embed(const Vec& x) const {
    Vec out;
    std::vector<typename Vec::Term> acc;
    for (const auto& [k, a] : x)
      for (const auto& [i, b] : basis_.at(k)) acc.emplace_back(i, a * b);
    return Vec::from_terms(std::move(acc));
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  EchelonT<F> ech_;
  std::vector<Vec> left_inverse_cols_;
};

using Echelon = EchelonT<Rational>;
using AffineSolution = AffineSolutionT<Rational>;
using SubspaceCoords = SubspaceCoordsT<Rational>;

}  // namespace cychom

#endif
