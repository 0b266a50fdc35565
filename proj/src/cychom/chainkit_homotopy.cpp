#include <stdexcept>

#include "cychom/chainkit.hpp"
#include "cychom/exactlin.hpp"

namespace cychom {

namespace {

Index ipow(Index base, std::size_t e) { return MixedRadix::power(base, e).total(); }

SparseMat identity_or_empty(std::size_t n) { return SparseMat::identity(n); }

Certificate certify(const std::string& name, const std::vector<std::pair<SparseMat, SparseMat>>& eqs) {
  Certificate c{name, true, ""};
  for (std::size_t n = 0; n < eqs.size(); ++n) {
    std::string w = matrix_witness(eqs[n].first, eqs[n].second);
    if (!w.empty()) {
      c.pass = false;
      c.witness = "degree " + std::to_string(n) + ", " + w;
      break;
    }
  }
  return c;
}

// Block embedding of a k-dimensional space at offset off in a space of dimension total.
SparseMat embed_block(Index total, Index off, Index k) {
  std::vector<SparseVec> cols;
  cols.reserve(k);
  for (Index j = 0; j < k; ++j) cols.push_back(SparseVec::unit(off + j));
  return SparseMat::from_columns(total, std::move(cols));
}

}  // namespace

std::vector<SparseMat> bar_contraction(const Algebra& a, std::size_t D) {
  if (!a.left_unit()) throw std::invalid_argument("bar contraction needs a left unit");
  const SparseVec& e = *a.left_unit();
  std::vector<SparseMat> h;
  for (std::size_t n = 0; n <= D; ++n) {
    Index in = ipow(a.dim(), n + 1);
    std::vector<SparseVec> cols;
    cols.reserve(in);
    for (Index c = 0; c < in; ++c) cols.push_back(tensor(e, SparseVec::unit(c), in));
    h.push_back(SparseMat::from_columns(in * a.dim(), std::move(cols)));
  }
  return h;
}

Certificate check_bar_contraction(const Algebra& a, const std::vector<SparseMat>& h, std::size_t D) {
  std::vector<std::pair<SparseMat, SparseMat>> eqs;
  for (std::size_t n = 0; n <= D; ++n) {
    SparseMat lhs = bar_bprime(a, n + 1) * h.at(n);
    if (n > 0) lhs = lhs + h.at(n - 1) * bar_bprime(a, n);
    eqs.emplace_back(lhs, identity_or_empty(ipow(a.dim(), n + 1)));
  }
  return certify("b'h+hb'=1", eqs);
}

SplitSequence bar_split_sequence(const Algebra& a, std::size_t D) {
  // Column 0 is a subcomplex of Tot CC^{2}; the quotient is column 1, i.e. the
  // bar complex shifted up by one with differential -b′.
  const std::size_t dim = a.dim();
  SplitSequence s;
  s.Y = tot_cc(a, TotMode::CC2, D);
  s.X = tot_cc(a, TotMode::CC1, D);
  auto hb = bar_contraction(a, D + 1);
  const std::size_t top = D + 1;
  std::vector<std::size_t> zd(top + 1);
  std::vector<SparseMat> dz(top + 1);
  for (std::size_t n = 0; n <= top; ++n) zd[n] = n == 0 ? 0 : ipow(dim, n);
  for (std::size_t n = 1; n <= top; ++n)
    dz[n] = n == 1 ? SparseMat(0, zd[1]) : Rational(-1) * bar_bprime(a, n - 1);
  s.Z = ChainComplex(zd, dz, true);
  for (std::size_t n = 0; n <= top; ++n) {
    Index ydim = tot_dim(TotMode::CC2, dim, n), xdim = ipow(dim, n + 1);
    s.iota.push_back(embed_block(ydim, 0, xdim));
    s.rho.push_back(embed_block(ydim, 0, xdim).transpose());
    s.sigma.push_back(embed_block(ydim, xdim, zd[n]));
    s.pi.push_back(embed_block(ydim, xdim, zd[n]).transpose());
    if (n < top) s.h.push_back(n == 0 ? SparseMat(zd[1], 0) : Rational(-1) * hb[n - 1]);
  }
  return s;
}

SparseMat trace_map(const Algebra& b, std::size_t n, std::size_t k) {
  const std::size_t bd = b.dim(), md = n * n * bd;
  MixedRadix r = MixedRadix::power(md, k + 1);
  std::vector<SparseVec> cols;
  cols.reserve(r.total());
  std::vector<std::size_t> dg;
  for (Index code = 0; code < r.total(); ++code) {
    r.decode_into(code, dg);
    bool ok = true;
    Index out = 0;
    for (std::size_t j = 0; j <= k && ok; ++j) {
      std::size_t rs = dg[j] / bd, c = dg[j] % bd;
      std::size_t col = rs % n;
      std::size_t next_row = (dg[(j + 1) % (k + 1)] / bd) / n;
      ok = col == next_row;
      out = out * bd + c;
    }
    cols.push_back(ok ? SparseVec::unit(out) : SparseVec());
  }
  return SparseMat::from_columns(ipow(bd, k + 1), std::move(cols));
}

MatrixStability matrix_stability(const Algebra& b, std::size_t n, std::size_t D) {
  if (!b.unit()) throw std::invalid_argument("matrix stability needs a unital algebra");
  const std::size_t bd = b.dim();
  MatrixStability out{matrix_algebra(b, n), {}, {}, {}, {}};
  const std::size_t md = out.matrices.dim();
  SparseVec one = *b.unit();
  std::vector<SparseVec> inc_cols;
  for (std::size_t c = 0; c < bd; ++c) inc_cols.push_back(SparseVec::unit(matrix_index(n, bd, 0, 0, c)));
  SparseMat inc1 = SparseMat::from_columns(md, std::move(inc_cols));
  for (std::size_t k = 0; k <= D; ++k) {
    out.inc.push_back(tensor_power_matrix(inc1, k + 1));
    out.tr.push_back(trace_map(b, n, k));
    MixedRadix r = MixedRadix::power(md, k + 1);
    std::vector<SparseVec> cols;
    cols.reserve(r.total());
    std::vector<std::size_t> dg;
    const Index out_rows = ipow(md, k + 2);
    for (Index code = 0; code < r.total(); ++code) {
      r.decode_into(code, dg);
      std::vector<SparseVec::Term> acc;
      for (std::size_t m = 0; m <= k; ++m) {
        // Index chain i_0 -> i_1 -> ... -> i_{m+1} forced by the single entries of β^0..β^m.
        bool chain = true;
        for (std::size_t j = 0; j < m && chain; ++j)
          chain = (dg[j] / bd) % n == (dg[j + 1] / bd) / n;
        if (!chain) continue;
        Index prefix = matrix_index(n, bd, (dg[0] / bd) / n, 0, dg[0] % bd);
        for (std::size_t j = 1; j <= m; ++j) prefix = prefix * md + matrix_index(n, bd, 0, 0, dg[j] % bd);
        std::size_t last_col = (dg[m] / bd) % n;
        Index suffix = 0, suffix_size = 1;
        for (std::size_t j = m + 1; j <= k; ++j) {
          suffix = suffix * md + dg[j];
          suffix_size *= md;
        }
        Rational sign(m % 2 ? -1 : 1);
        for (const auto& [c, a] : one)
          acc.emplace_back((prefix * md + matrix_index(n, bd, 0, last_col, c)) * suffix_size + suffix, sign * a);
      }
      cols.push_back(SparseVec::from_terms(std::move(acc)));
    }
    out.h.push_back(SparseMat::from_columns(out_rows, std::move(cols)));
  }
  std::vector<std::pair<SparseMat, SparseMat>> left, homotopy;
  for (std::size_t k = 0; k <= D; ++k) {
    left.emplace_back(out.tr[k] * out.inc[k], SparseMat::identity(ipow(bd, k + 1)));
    SparseMat rhs = hochschild_b(out.matrices, k + 1) * out.h[k];
    if (k > 0) rhs = rhs + out.h[k - 1] * hochschild_b(out.matrices, k);
    homotopy.emplace_back(SparseMat::identity(ipow(md, k + 1)) - out.inc[k] * out.tr[k], rhs);
  }
  out.certificates = {certify("tr*inc=id", left), certify("id-inc*tr=bh+hb", homotopy)};
  return out;
}

std::optional<SparseVec> algebra_inverse(const Algebra& a, const SparseVec& x) {
  if (!a.unit()) throw std::invalid_argument("inverse needs a unital algebra");
  auto sol = solve_affine(a.left_mult_matrix(x), *a.unit());
  if (!sol) return std::nullopt;
  if (a.mul(sol->particular, x) != *a.unit()) return std::nullopt;
  return sol->particular;
}

ConjugationHomotopy conjugation_homotopy(const Algebra& b, std::size_t n, const SparseVec& gamma, std::size_t D) {
  Algebra m = matrix_algebra(b, n);
  auto ginv = algebra_inverse(m, gamma);
  if (!ginv) throw std::invalid_argument("γ is not invertible");
  ConjugationHomotopy out{m, gamma, *ginv, {}, {}, {}};
  const std::size_t md = m.dim();
  SparseMat right_inv = m.right_mult_matrix(*ginv);
  SparseMat conj1 = m.left_mult_matrix(gamma) * right_inv;
  for (std::size_t k = 0; k <= D; ++k) {
    out.conj.push_back(tensor_power_matrix(conj1, k + 1));
    MixedRadix r = MixedRadix::power(md, k + 1);
    std::vector<SparseVec> cols;
    cols.reserve(r.total());
    for (Index code = 0; code < r.total(); ++code) {
      SparseVec acc;
      for (std::size_t i = 0; i <= k; ++i) {
        // (β0γ⁻¹, γβ1γ⁻¹, ..., γβ^iγ⁻¹, γ, β^{i+1}, ..., β^k)
        Index suffix_size = ipow(md, k - i);
        Index prefix = code / suffix_size, suffix = code % suffix_size;
        std::vector<const SparseMat*> maps(i + 1, &conj1);
        maps[0] = &right_inv;
        SparseVec head = apply_tensor_maps(maps, SparseVec::unit(prefix));
        SparseVec with_gamma = tensor(head, gamma, md);
        SparseVec term = tensor(with_gamma, SparseVec::unit(suffix), suffix_size);
        acc.add_scaled(term, Rational(i % 2 ? -1 : 1));
      }
      cols.push_back(std::move(acc));
    }
    out.h.push_back(SparseMat::from_columns(ipow(md, k + 2), std::move(cols)));
  }
  std::vector<std::pair<SparseMat, SparseMat>> eqs;
  for (std::size_t k = 0; k <= D; ++k) {
    SparseMat rhs = hochschild_b(m, k + 1) * out.h[k];
    if (k > 0) rhs = rhs + out.h[k - 1] * hochschild_b(m, k);
    eqs.emplace_back(SparseMat::identity(ipow(md, k + 1)) - out.conj[k], rhs);
  }
  out.certificates = {certify("id-conj=bh+hb", eqs)};
  return out;
}

}  // namespace cychom
