#include "cychom/chainkit.hpp"

#include <random>

#include "cychom/exactlin.hpp"

namespace cychom {

namespace {

Index ipow(Index base, std::size_t e) {
  return MixedRadix::power(base, e).total();
}

// Applies a per-column builder to every basis tensor of A^{⊗len}.
template <class Fn>
SparseMat build_on_tensors(std::size_t dim, std::size_t len, Index out_rows, Fn&& column) {
  MixedRadix r = MixedRadix::power(dim, len);
  std::vector<SparseVec> cols;
  cols.reserve(r.total());
  std::vector<std::size_t> digits;
  for (Index code = 0; code < r.total(); ++code) {
    r.decode_into(code, digits);
    cols.push_back(column(digits));
  }
  return SparseMat::from_columns(out_rows, std::move(cols));
}

// Encodes prefix ⊗ v ⊗ suffix where v is a vector in A.
void emit_with_product(std::vector<SparseVec::Term>& out, const std::vector<std::size_t>& prefix,
                       const SparseVec& v, const std::vector<std::size_t>& suffix, std::size_t dim,
                       const Rational& sign) {
  Index pre = 0;
  for (std::size_t x : prefix) pre = pre * dim + x;
  Index suf = 0, sufsize = 1;
  for (std::size_t x : suffix) {
    suf = suf * dim + x;
    sufsize *= dim;
  }
  for (const auto& [k, c] : v) out.emplace_back(((pre * dim) + k) * sufsize + suf, sign * c);
}

SparseVec face_column(const Algebra& a, const std::vector<std::size_t>& dg, std::size_t i, const Rational& sign,
                      std::vector<SparseVec::Term>* sink = nullptr) {
  const std::size_t n = dg.size() - 1;
  std::vector<SparseVec::Term> local;
  auto& out = sink ? *sink : local;
  if (i < n) {
    std::vector<std::size_t> prefix(dg.begin(), dg.begin() + static_cast<long>(i));
    std::vector<std::size_t> suffix(dg.begin() + static_cast<long>(i) + 2, dg.end());
    emit_with_product(out, prefix, a.mul_basis(dg[i], dg[i + 1]), suffix, a.dim(), sign);
  } else {
    std::vector<std::size_t> suffix(dg.begin() + 1, dg.end() - 1);
    emit_with_product(out, {}, a.mul_basis(dg[n], dg[0]), suffix, a.dim(), sign);
  }
  if (sink) return {};
  return SparseVec::from_terms(std::move(local));
}

SparseMat alternating_faces(const Algebra& a, std::size_t n, bool with_wrap) {
  const std::size_t dim = a.dim();
  Index rows = n == 0 ? 0 : ipow(dim, n);
  return build_on_tensors(dim, n + 1, rows, [&](const std::vector<std::size_t>& dg) {
    if (n == 0) return SparseVec();
    std::vector<SparseVec::Term> out;
    const std::size_t last = with_wrap ? n : n - 1;
    for (std::size_t i = 0; i <= last; ++i) face_column(a, dg, i, Rational(i % 2 ? -1 : 1), &out);
    return SparseVec::from_terms(std::move(out));
  });
}

}  // namespace

SparseMat face_map(const Algebra& a, std::size_t n, std::size_t i) {
  if (n == 0 || i > n) throw std::invalid_argument("face index out of range");
  return build_on_tensors(a.dim(), n + 1, ipow(a.dim(), n),
                          [&](const std::vector<std::size_t>& dg) { return face_column(a, dg, i, Rational(1)); });
}

SparseMat hochschild_b(const Algebra& a, std::size_t n) { return alternating_faces(a, n, true); }

SparseMat bar_bprime(const Algebra& a, std::size_t n) { return alternating_faces(a, n, false); }

SparseMat cyclic_t(const Algebra& a, std::size_t n) {
  const std::size_t dim = a.dim();
  Index total = ipow(dim, n + 1);
  Index low = ipow(dim, n);
  Rational sign(n % 2 ? -1 : 1);
  std::vector<SparseVec> cols;
  cols.reserve(total);
  for (Index code = 0; code < total; ++code) {
    // (a_0, ..., a_n) -> (a_n, a_0, ..., a_{n-1})
    Index last = code % dim;
    cols.push_back(SparseVec::unit(last * low + code / dim, sign));
  }
  return SparseMat::from_columns(total, std::move(cols));
}

SparseMat cyclic_norm(const Algebra& a, std::size_t n) {
  SparseMat t = cyclic_t(a, n);
  SparseMat acc = SparseMat::identity(t.rows());
  SparseMat power = acc;
  for (std::size_t k = 1; k <= n; ++k) {
    power = t * power;
    acc = acc + power;
  }
  return acc;
}

CyclicOps cyclic_operators(const Algebra& a, std::size_t n) {
  return CyclicOps{hochschild_b(a, n), bar_bprime(a, n), cyclic_t(a, n), cyclic_norm(a, n)};
}

// ---- chain complexes ----

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<SparseMat> d, bool truncated)
    : dims_(std::move(dims)), d_(std::move(d)), truncated_(truncated) {
  if (dims_.empty()) throw std::invalid_argument("chain complex needs degree 0");
  if (d_.size() != dims_.size()) throw std::invalid_argument("one differential slot per degree expected");
  for (std::size_t n = 1; n < dims_.size(); ++n)
    if (d_[n].rows() != dims_[n - 1] || d_[n].cols() != dims_[n])
      throw std::invalid_argument("differential in degree " + std::to_string(n) + " has wrong shape");
  d_[0] = SparseMat(0, dims_[0]);
}

SparseMat ChainComplex::d(std::size_t n) const {
  if (n == 0) return SparseMat(0, dim(0));
  if (n <= top()) return d_[n];
  return SparseMat(dim(n - 1), 0);
}

std::optional<std::size_t> ChainComplex::d_squared_failure() const {
  for (std::size_t n = 2; n <= top(); ++n)
    if (!(d_[n - 1] * d_[n]).is_zero()) return n;
  return std::nullopt;
}

std::size_t ChainComplex::rank_d(std::size_t n) const {
  if (n == 0 || n > top()) return 0;
  auto it = rank_cache_.find(n);
  if (it != rank_cache_.end()) return it->second;
  std::size_t r = rank(d_[n]);
  rank_cache_[n] = r;
  return r;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  std::vector<std::size_t> out;
  const std::size_t last = c.truncated() ? c.top() : c.top() + 1;
  for (std::size_t n = 0; n < last; ++n) out.push_back(c.dim(n) - c.rank_d(n) - c.rank_d(n + 1));
  return out;
}

TotMode parse_mode(const std::string& s) {
  if (s == "full") return TotMode::Full;
  if (s == "cc2") return TotMode::CC2;
  if (s == "cc1") return TotMode::CC1;
  if (s == "bar") return TotMode::Bar;
  throw std::invalid_argument("unknown complex mode '" + s + "'");
}

std::string mode_name(TotMode m) {
  switch (m) {
    case TotMode::Full: return "full";
    case TotMode::CC2: return "cc2";
    case TotMode::CC1: return "cc1";
    case TotMode::Bar: return "bar";
  }
  return "?";
}

std::vector<std::size_t> tot_columns(TotMode mode, std::size_t n) {
  std::size_t last = n;
  if (mode == TotMode::CC2) last = std::min<std::size_t>(n, 1);
  if (mode == TotMode::CC1 || mode == TotMode::Bar) last = 0;
  std::vector<std::size_t> cols;
  for (std::size_t p = 0; p <= last; ++p) cols.push_back(p);
  return cols;
}

Index tot_offset(TotMode mode, std::size_t dim, std::size_t n, std::size_t p) {
  Index off = 0;
  for (std::size_t q : tot_columns(mode, n)) {
    if (q == p) return off;
    off += ipow(dim, n - q + 1);
  }
  throw std::out_of_range("column not present in this total degree");
}

Index tot_dim(TotMode mode, std::size_t dim, std::size_t n) {
  Index total = 0;
  for (std::size_t q : tot_columns(mode, n)) total += ipow(dim, n - q + 1);
  return total;
}

namespace {

// Shifts every row and column index of a block into place.
void place_block(std::vector<std::vector<SparseVec::Term>>& cols, const SparseMat& block, Index row_off,
                 Index col_off, const Rational& scale) {
  for (std::size_t j = 0; j < block.cols(); ++j)
    for (const auto& [i, c] : block.column(j)) cols[col_off + j].emplace_back(row_off + i, scale * c);
}

struct OpCache {
  const Algebra& a;
  std::map<std::size_t, SparseMat> b, bp, t, N;
  const SparseMat& get(std::map<std::size_t, SparseMat>& m, std::size_t n, SparseMat (*f)(const Algebra&, std::size_t)) {
    auto it = m.find(n);
    if (it == m.end()) it = m.emplace(n, f(a, n)).first;
    return it->second;
  }
};

SparseMat tot_differential_cached(OpCache& ops, TotMode mode, std::size_t n) {
  const Algebra& a = ops.a;
  const std::size_t dim = a.dim();
  if (n == 0) return SparseMat(0, tot_dim(mode, dim, 0));
  if (mode == TotMode::Bar) return ops.get(ops.bp, n, bar_bprime);
  const Index rows = tot_dim(mode, dim, n - 1), cols = tot_dim(mode, dim, n);
  std::vector<std::vector<SparseVec::Term>> out(cols);
  for (std::size_t p : tot_columns(mode, n)) {
    const std::size_t q = n - p;
    const Index src = tot_offset(mode, dim, n, p);
    if (q > 0) {
      const Index dst = tot_offset(mode, dim, n - 1, p);
      if (p % 2 == 0)
        place_block(out, ops.get(ops.b, q, hochschild_b), dst, src, Rational(1));
      else
        place_block(out, ops.get(ops.bp, q, bar_bprime), dst, src, Rational(-1));
    }
    if (p > 0) {
      const Index dst = tot_offset(mode, dim, n - 1, p - 1);
      if (p % 2 == 1) {
        SparseMat one_minus_t = SparseMat::identity(ipow(dim, q + 1)) - ops.get(ops.t, q, cyclic_t);
        place_block(out, one_minus_t, dst, src, Rational(1));
      } else {
        place_block(out, ops.get(ops.N, q, cyclic_norm), dst, src, Rational(1));
      }
    }
  }
  std::vector<SparseVec> vs;
  vs.reserve(cols);
  for (auto& t : out) vs.push_back(SparseVec::from_terms(std::move(t)));
  return SparseMat::from_columns(rows, std::move(vs));
}

}  // namespace

SparseMat tot_differential(const Algebra& a, TotMode mode, std::size_t n) {
  OpCache ops{a, {}, {}, {}, {}};
  return tot_differential_cached(ops, mode, n);
}

ChainComplex tot_cc(const Algebra& a, TotMode mode, std::size_t D) {
  OpCache ops{a, {}, {}, {}, {}};
  std::vector<std::size_t> dims;
  std::vector<SparseMat> ds;
  for (std::size_t n = 0; n <= D + 1; ++n) {
    dims.push_back(tot_dim(mode, a.dim(), n));
    ds.push_back(tot_differential_cached(ops, mode, n));
  }
  return ChainComplex(std::move(dims), std::move(ds), true);
}

// ---- cyclic chains ----

CyclicChain CyclicChain::zero(std::size_t degree, std::size_t dim) {
  CyclicChain c;
  c.degree = degree;
  c.dim = dim;
  c.columns.assign(degree + 1, SparseVec());
  return c;
}

SparseVec CyclicChain::to_tot(TotMode mode) const {
  std::vector<SparseVec::Term> t;
  for (std::size_t p = 0; p < columns.size(); ++p) {
    if (columns[p].is_zero()) continue;
    const auto present = tot_columns(mode, degree);
    if (p >= present.size()) throw std::invalid_argument("chain has a column outside the selected complex");
    Index off = tot_offset(mode, dim, degree, p);
    for (const auto& [i, c] : columns[p]) t.emplace_back(off + i, c);
  }
  return SparseVec::from_sorted(std::move(t));
}

CyclicChain CyclicChain::from_tot(const SparseVec& v, std::size_t degree, std::size_t dim, TotMode mode) {
  CyclicChain c = zero(degree, dim);
  const auto present = tot_columns(mode, degree);
  std::vector<std::vector<SparseVec::Term>> parts(degree + 1);
  for (const auto& [i, a] : v) {
    std::size_t p = present.back();
    for (std::size_t q : present)
      if (i < tot_offset(mode, dim, degree, q) + ipow(dim, degree - q + 1)) {
        p = q;
        break;
      }
    parts[p].emplace_back(i - tot_offset(mode, dim, degree, p), a);
  }
  for (std::size_t p = 0; p <= degree; ++p) c.columns[p] = SparseVec::from_sorted(std::move(parts[p]));
  return c;
}

bool CyclicChain::is_zero() const {
  for (const auto& c : columns)
    if (!c.is_zero()) return false;
  return true;
}

CyclicChain& CyclicChain::operator+=(const CyclicChain& o) {
  if (o.degree != degree || o.dim != dim) throw std::invalid_argument("adding chains of different degree");
  for (std::size_t p = 0; p < columns.size(); ++p) columns[p] += o.columns[p];
  return *this;
}

CyclicChain& CyclicChain::operator-=(const CyclicChain& o) {
  if (o.degree != degree || o.dim != dim) throw std::invalid_argument("subtracting chains of different degree");
  for (std::size_t p = 0; p < columns.size(); ++p) columns[p] -= o.columns[p];
  return *this;
}

CyclicChain total_boundary(const Algebra& a, const CyclicChain& x) {
  if (x.degree == 0) return CyclicChain::zero(0, a.dim());
  SparseMat d = tot_differential(a, TotMode::Full, x.degree);
  return CyclicChain::from_tot(d.apply(x.to_tot()), x.degree - 1, a.dim());
}

CyclicChain connes_S(const CyclicChain& x) {
  if (x.degree < 2) throw std::invalid_argument("S needs total degree at least 2");
  CyclicChain y = CyclicChain::zero(x.degree - 2, x.dim);
  for (std::size_t p = 2; p <= x.degree; ++p) y.columns[p - 2] = x.columns[p];
  return y;
}

std::optional<SparseVec> homologous(const SparseVec& x, const SparseVec& y, const ChainComplex& c, std::size_t n) {
  SparseMat dn = c.d(n);
  if (!dn.apply(x).is_zero() || !dn.apply(y).is_zero()) throw std::invalid_argument("input is not a cycle");
  if (n + 1 > c.top()) throw std::invalid_argument("complex too short to decide homology in this degree");
  auto sol = solve_affine(c.d(n + 1), x - y);
  if (!sol) return std::nullopt;
  return sol->particular;
}

// ---- kill_contractible ----

IdentityViolation::IdentityViolation(std::string label, std::size_t degree, std::size_t witness)
    : std::runtime_error("identity (" + label + ") fails in degree " + std::to_string(degree) +
                         " on basis vector " + std::to_string(witness)),
      label_(std::move(label)),
      degree_(degree),
      witness_(witness) {}

bool KillResult::all_pass() const {
  for (const auto& c : certificates)
    if (!c.pass) return false;
  return true;
}

std::string matrix_witness(const SparseMat& lhs, const SparseMat& rhs) {
  std::size_t j = lhs.first_difference(rhs);
  if (j == lhs.cols()) return "";
  return "basis vector " + std::to_string(j);
}

namespace {

SparseMat slot(const std::vector<SparseMat>& v, std::size_t n, std::size_t rows, std::size_t cols) {
  if (n < v.size()) {
    if (v[n].rows() != rows || v[n].cols() != cols)
      throw std::invalid_argument("map in degree " + std::to_string(n) + " has wrong shape");
    return v[n];
  }
  return SparseMat(rows, cols);
}

void require(const std::string& label, std::size_t n, const SparseMat& lhs, const SparseMat& rhs) {
  std::size_t j = lhs.first_difference(rhs);
  if (j != lhs.cols()) throw IdentityViolation(label, n, j);
}

}  // namespace

namespace {

struct SplitMaps {
  const SplitSequence& s;
  bool contract_z;
  std::size_t T;
  SparseMat iota(std::size_t n) const { return slot(s.iota, n, s.Y.dim(n), s.X.dim(n)); }
  SparseMat pi(std::size_t n) const { return slot(s.pi, n, s.Z.dim(n), s.Y.dim(n)); }
  SparseMat rho(std::size_t n) const { return slot(s.rho, n, s.X.dim(n), s.Y.dim(n)); }
  SparseMat sigma(std::size_t n) const { return slot(s.sigma, n, s.Y.dim(n), s.Z.dim(n)); }
  const ChainComplex& contracted() const { return contract_z ? s.Z : s.X; }
  SparseMat h(std::size_t n) const {
    return slot(s.h, n, contracted().dim(n + 1), contracted().dim(n));
  }
};

SplitMaps check_split_identities(const SplitSequence& s, bool contract_z) {
  const ChainComplex &X = s.X, &Y = s.Y, &Z = s.Z;
  if (X.top() != Y.top() || Y.top() != Z.top()) throw std::invalid_argument("complexes must share their top degree");
  // Degrees 0..T are certified; truncated complexes provide degree T+1 for d and the splitting.
  SplitMaps m{s, contract_z, Y.truncated() ? Y.top() - 1 : Y.top()};
  auto id = [](std::size_t k) { return SparseMat::identity(k); };
  for (const ChainComplex* c : {&X, &Y, &Z})
    if (auto f = c->d_squared_failure()) {
      SparseMat sq = c->d(*f - 1) * c->d(*f);
      require("dd", *f, sq, SparseMat(sq.rows(), sq.cols()));
    }
  const ChainComplex& C = m.contracted();
  for (std::size_t n = 0; n <= m.T; ++n) {
    if (n > 0) {
      require("di", n, Y.d(n) * m.iota(n), m.iota(n - 1) * X.d(n));
      require("dp", n, Z.d(n) * m.pi(n), m.pi(n - 1) * Y.d(n));
    }
    require("pi", n, m.pi(n) * m.iota(n), SparseMat(Z.dim(n), X.dim(n)));
    require("ps", n, m.pi(n) * m.sigma(n), id(Z.dim(n)));
    require("ri", n, m.rho(n) * m.iota(n), id(X.dim(n)));
    require("sp+ir", n, m.sigma(n) * m.pi(n) + m.iota(n) * m.rho(n), id(Y.dim(n)));
    require("rs", n, m.rho(n) * m.sigma(n), SparseMat(X.dim(n), Z.dim(n)));
    SparseMat hd = n > 0 ? m.h(n - 1) * C.d(n) : SparseMat(C.dim(n), C.dim(n));
    require("hd", n, hd + C.d(n + 1) * m.h(n), id(C.dim(n)));
  }
  return m;
}

void record_failure(Certificate& c, std::size_t n, const SparseMat& l, const SparseMat& r) {
  std::string w = matrix_witness(l, r);
  if (!w.empty() && c.pass) {
    c.pass = false;
    c.witness = "degree " + std::to_string(n) + ", " + w;
  }
}

}  // namespace

KillResult kill_contractible(const SplitSequence& s) {
  SplitMaps m = check_split_identities(s, false);
  const ChainComplex &Y = s.Y, &Z = s.Z;
  const std::size_t T = m.T;
  KillResult out;
  for (std::size_t n = 0; n <= T; ++n) out.h_tilde.push_back(m.iota(n + 1) * m.h(n) * m.rho(n));
  for (std::size_t n = 0; n <= T; ++n) {
    SparseMat corr = n > 0 ? out.h_tilde[n - 1] * Y.d(n) * m.sigma(n) : SparseMat(Y.dim(n), Z.dim(n));
    out.sigma_tilde.push_back(m.sigma(n) - corr);
  }
  Certificate right_inverse{"right_inverse", true, ""}, chain_map{"chain_map", true, ""},
      ho_inverse{"ho_inverse", true, ""};
  for (std::size_t n = 0; n <= T; ++n) {
    record_failure(right_inverse, n, m.pi(n) * out.sigma_tilde[n], SparseMat::identity(Z.dim(n)));
    if (n > 0) record_failure(chain_map, n, Y.d(n) * out.sigma_tilde[n], out.sigma_tilde[n - 1] * Z.d(n));
    SparseMat lhs = out.sigma_tilde[n] * m.pi(n) + Y.d(n + 1) * out.h_tilde[n];
    if (n > 0) lhs = lhs + out.h_tilde[n - 1] * Y.d(n);
    record_failure(ho_inverse, n, lhs, SparseMat::identity(Y.dim(n)));
  }
  out.certificates = {right_inverse, chain_map, ho_inverse};
  return out;
}

KillResult kill_contractible_dual(const SplitSequence& s) {
  SplitMaps m = check_split_identities(s, true);
  const ChainComplex &X = s.X, &Y = s.Y;
  const std::size_t T = m.T;
  KillResult out;
  // h̃ = σhπ and ρ̃ = ρ(1 - dh̃); ρ̃ in degree T needs d in degree T+1 only.
  for (std::size_t n = 0; n <= T; ++n) out.h_tilde.push_back(m.sigma(n + 1) * m.h(n) * m.pi(n));
  for (std::size_t n = 0; n <= T; ++n) out.rho_tilde.push_back(m.rho(n) - m.rho(n) * Y.d(n + 1) * out.h_tilde[n]);
  Certificate left_inverse{"left_inverse", true, ""}, chain_map{"chain_map", true, ""},
      ho_inverse{"ho_inverse", true, ""};
  for (std::size_t n = 0; n <= T; ++n) {
    record_failure(left_inverse, n, out.rho_tilde[n] * m.iota(n), SparseMat::identity(X.dim(n)));
    if (n > 0) record_failure(chain_map, n, X.d(n) * out.rho_tilde[n], out.rho_tilde[n - 1] * Y.d(n));
    SparseMat lhs = m.iota(n) * out.rho_tilde[n] + Y.d(n + 1) * out.h_tilde[n];
    if (n > 0) lhs = lhs + out.h_tilde[n - 1] * Y.d(n);
    record_failure(ho_inverse, n, lhs, SparseMat::identity(Y.dim(n)));
  }
  out.certificates = {left_inverse, chain_map, ho_inverse};
  return out;
}

namespace {

SparseMat random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<SparseVec::Term> t;
    for (std::size_t i = 0; i < r; ++i) t.emplace_back(i, Rational(val(rng)));
    cols.push_back(SparseVec::from_terms(std::move(t)));
  }
  return SparseMat::from_columns(r, std::move(cols));
}

// Random invertible matrix as a product of a unit lower and a unit upper triangular matrix
// with a random diagonal of nonzero scalars.
std::pair<SparseMat, SparseMat> random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-2, 2), diag(1, 3);
  std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n)), u(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) l[i][j] = Rational(val(rng));
      if (i < j) u[i][j] = Rational(val(rng));
      if (i == j) {
        l[i][j] = Rational(1);
        u[i][j] = Rational(diag(rng) * (rng() % 2 ? 1 : -1));
      }
    }
  SparseMat p = SparseMat::from_dense(l) * SparseMat::from_dense(u);
  return {p, *inverse(p)};
}

}  // namespace

SplitSequence random_split_sequence(std::uint64_t seed, std::size_t max_dim, std::size_t length) {
  std::mt19937_64 rng(seed);
  if (length == 0) throw std::invalid_argument("length must be positive");
  const std::size_t T = length - 1;
  // X_n = U_n ⊕ U_{n-1} with U_T = 0 and dim X_n <= max_dim.
  std::vector<std::size_t> u(T + 1, 0), z(T + 1, 0);
  std::size_t prev = 0;
  for (std::size_t n = 0; n < T; ++n) {
    std::size_t cap = max_dim > prev ? max_dim - prev : 0;
    cap = std::min<std::size_t>(cap, max_dim / 2);
    u[n] = cap ? rng() % (cap + 1) : 0;
    prev = u[n];
  }
  std::vector<std::size_t> xd(T + 1), yd(T + 1);
  for (std::size_t n = 0; n <= T; ++n) {
    xd[n] = u[n] + (n ? u[n - 1] : 0);
    std::size_t room = max_dim - std::min(max_dim, xd[n]);
    z[n] = room ? rng() % (room + 1) : 0;
    yd[n] = xd[n] + z[n];
  }
  // Cone differential and contraction in the U_n ⊕ U_{n-1} basis.
  std::vector<SparseMat> dx(T + 1), hx(T + 1), dz(T + 1);
  for (std::size_t n = 0; n <= T; ++n) {
    if (n > 0) {
      std::vector<SparseVec> cols;
      for (std::size_t j = 0; j < u[n]; ++j) cols.emplace_back();
      for (std::size_t j = 0; j < u[n - 1]; ++j) cols.push_back(SparseVec::unit(j));
      dx[n] = SparseMat::from_columns(xd[n - 1], std::move(cols));
    }
    std::size_t next = n < T ? xd[n + 1] : 0;
    std::vector<SparseVec> hc;
    for (std::size_t j = 0; j < u[n]; ++j) hc.push_back(SparseVec::unit(u[n + 1] + j));  // u[T] = 0
    for (std::size_t j = 0; j < (n ? u[n - 1] : 0); ++j) hc.emplace_back();
    hx[n] = SparseMat::from_columns(next, std::move(hc));
  }
  // Random Z with d² = 0: each column of d_n is a random combination of ker d_{n-1}.
  for (std::size_t n = 1; n <= T; ++n) {
    std::vector<SparseVec> ker = n >= 2 ? kernel_basis(dz[n - 1]) : std::vector<SparseVec>();
    if (n == 1)
      for (std::size_t j = 0; j < z[0]; ++j) ker.push_back(SparseVec::unit(j));
    std::vector<SparseVec> cols;
    std::uniform_int_distribution<int> val(-2, 2);
    for (std::size_t j = 0; j < z[n]; ++j) {
      SparseVec v;
      for (const auto& k : ker) v += Rational(val(rng)) * k;
      cols.push_back(v);
    }
    dz[n] = SparseMat::from_columns(z[n - 1], std::move(cols));
  }
  // Twist f = d_X g - g d_Z keeps d_Y² = 0.
  std::vector<SparseMat> g(T + 1);
  for (std::size_t n = 0; n <= T; ++n) g[n] = random_dense(rng, xd[n], z[n]);
  std::vector<SparseMat> dy(T + 1), p(T + 1), pinv(T + 1), xb(T + 1), xbinv(T + 1);
  for (std::size_t n = 0; n <= T; ++n) {
    std::tie(p[n], pinv[n]) = random_invertible(rng, yd[n]);
    std::tie(xb[n], xbinv[n]) = random_invertible(rng, xd[n]);
  }
  for (std::size_t n = 1; n <= T; ++n) {
    SparseMat f = dx[n] * g[n] - g[n - 1] * dz[n];
    SparseMat top = hstack<Rational>({dx[n], f}, xd[n - 1]);
    SparseMat bottom = hstack<Rational>({SparseMat(z[n - 1], xd[n]), dz[n]}, z[n - 1]);
    dy[n] = vstack<Rational>({top, bottom}, yd[n]);
  }
  SplitSequence s;
  std::vector<SparseMat> dxs(T + 1), dys(T + 1);
  for (std::size_t n = 1; n <= T; ++n) {
    dxs[n] = xb[n - 1] * dx[n] * xbinv[n];
    dys[n] = p[n - 1] * dy[n] * pinv[n];
  }
  s.X = ChainComplex(xd, dxs, false);
  s.Y = ChainComplex(yd, dys, false);
  s.Z = ChainComplex(z, dz, false);
  for (std::size_t n = 0; n <= T; ++n) {
    SparseMat inc_x = vstack<Rational>({SparseMat::identity(xd[n]), SparseMat(z[n], xd[n])}, xd[n]);
    SparseMat inc_z = vstack<Rational>({SparseMat(xd[n], z[n]), SparseMat::identity(z[n])}, z[n]);
    SparseMat proj_x = hstack<Rational>({SparseMat::identity(xd[n]), SparseMat(xd[n], z[n])}, xd[n]);
    SparseMat proj_z = hstack<Rational>({SparseMat(z[n], xd[n]), SparseMat::identity(z[n])}, z[n]);
    s.iota.push_back(p[n] * inc_x * xbinv[n]);
    s.pi.push_back(proj_z * pinv[n]);
    s.rho.push_back(xb[n] * proj_x * pinv[n]);
    s.sigma.push_back(p[n] * inc_z);
    SparseMat next_b = n < T ? xb[n + 1] : SparseMat(0, 0);
    s.h.push_back(next_b * hx[n] * xbinv[n]);
  }
  return s;
}

}  // namespace cychom
