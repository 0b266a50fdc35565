#include "cychom/rowext.hpp"

#include <random>
#include <stdexcept>

#include "cychom/exactlin.hpp"

namespace cychom {

namespace {

void check_equal(Certificate& c, std::size_t n, const SparseMat& lhs, const SparseMat& rhs) {
  if (!c.pass) return;
  if (lhs == rhs) return;
  c.pass = false;
  c.witness = "degree " + std::to_string(n) + ": " + matrix_witness(lhs, rhs);
}

SparseMat combination(const std::vector<SparseMat>& mats, const SparseVec& coeffs, std::size_t dim) {
  SparseMat out(dim, dim);
  for (const auto& [k, a] : coeffs) out = out + a * mats.at(k);
  return out;
}

RowExtension build(const Algebra& base, const Algebra& ring, const SparseMat& eps, const SparseMat& sigma) {
  const std::size_t md = ring.dim(), bd = base.dim();
  if (sigma.rows() != md || sigma.cols() != bd) throw std::invalid_argument("section has the wrong shape");
  if (eps * sigma != SparseMat::identity(bd)) throw std::invalid_argument("section is not right inverse to the augmentation");
  RowExtension re{base, ring, eps, sigma, kernel_basis(eps), {}, {}, ring, {}};
  std::vector<SparseVec> cols = re.ideal;
  for (std::size_t j = 0; j < bd; ++j) cols.push_back(sigma.column(j));
  re.from_adapted = SparseMat::from_columns(md, std::move(cols));
  auto inv = inverse(re.from_adapted);
  if (!inv) throw std::invalid_argument("augmentation is not surjective");
  re.to_adapted = *inv;
  std::vector<SparseVec> prods;
  prods.reserve(md * md);
  for (std::size_t a = 0; a < md; ++a)
    for (std::size_t b = 0; b < md; ++b)
      prods.push_back(re.to_adapted.apply(ring.mul(re.from_adapted.column(a), re.from_adapted.column(b))));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < re.ideal.size(); ++a) labels.push_back("i" + std::to_string(a));
  for (std::size_t j = 0; j < bd; ++j) labels.push_back("s(" + base.space().label(j) + ")");
  re.adapted = Algebra::unchecked(BasedSpace(labels), std::move(prods));
  const std::size_t id = re.ideal.size();
  for (std::size_t j = 0; j < bd; ++j)
    for (std::size_t l = 0; l < bd; ++l) {
      SparseVec w = re.adapted.mul_basis(id + j, id + l);
      for (const auto& [k, x] : base.mul_basis(j, l)) w.add_scaled(SparseVec::unit(id + k), -x);
      for (const auto& [k, x] : w)
        if (k >= id) throw std::logic_error("cocycle leaves the ideal");
      re.omega.push_back(w);
    }
  return re;
}

}  // namespace

SparseVec AugmentedModule::act(const SparseVec& b, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [k, x] : b) out.add_scaled(action.at(k).apply(m), x);
  return out;
}

std::optional<std::string> augmented_module_violation(const AugmentedModule& am) {
  const std::size_t bd = am.base.dim(), md = am.mdim;
  if (am.action.size() != bd) return "one action matrix per basis vector of B expected";
  for (const auto& a : am.action)
    if (a.rows() != md || a.cols() != md) return "action matrix has the wrong shape";
  if (am.eps.rows() != bd || am.eps.cols() != md) return "augmentation has the wrong shape";
  for (std::size_t j = 0; j < bd; ++j) {
    for (std::size_t k = 0; k < bd; ++k) {
      SparseMat lhs = combination(am.action, am.base.mul_basis(j, k), md);
      if (lhs != am.action[j] * am.action[k])
        return "action is not associative at (" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    if (am.eps * am.action[j] != am.base.left_mult_matrix(SparseVec::unit(j)) * am.eps)
      return "augmentation is not B-linear at basis vector " + std::to_string(j);
  }
  return std::nullopt;
}

bool RowExtension::omega_is_zero() const {
  for (const auto& w : omega)
    if (!w.is_zero()) return false;
  return true;
}

RowExtension row_extension(const AugmentedModule& am, const SparseMat& sigma) {
  if (auto v = augmented_module_violation(am)) throw std::invalid_argument(*v);
  const std::size_t md = am.mdim;
  std::vector<SparseVec> prods;
  prods.reserve(md * md);
  for (std::size_t a = 0; a < md; ++a) {
    SparseVec ea = am.eps.column(a);
    for (std::size_t b = 0; b < md; ++b) prods.push_back(am.act(ea, SparseVec::unit(b)));
  }
  Algebra ring = Algebra::from_products(BasedSpace::numbered(md, "m"), std::move(prods));
  return build(am.base, ring, am.eps, sigma);
}

AugmentedModule cocycle_module(const Algebra& base, const std::vector<SparseMat>& i_action,
                               const std::vector<SparseVec>& omega) {
  const std::size_t bd = base.dim();
  if (i_action.size() != bd || omega.size() != bd * bd) throw std::invalid_argument("cocycle data has the wrong size");
  const std::size_t id = i_action.empty() ? 0 : i_action[0].rows();
  const std::size_t md = id + bd;
  AugmentedModule am{base, md, {}, {}};
  for (std::size_t k = 0; k < bd; ++k) {
    std::vector<SparseVec> cols;
    for (std::size_t a = 0; a < id; ++a) cols.push_back(i_action[k].column(a));
    for (std::size_t l = 0; l < bd; ++l) {
      SparseVec c = omega[k * bd + l];
      for (const auto& [r, x] : base.mul_basis(k, l)) c.add_scaled(SparseVec::unit(id + r), x);
      cols.push_back(c);
    }
    am.action.push_back(SparseMat::from_columns(md, std::move(cols)));
  }
  std::vector<SparseVec> ecols(md);
  for (std::size_t l = 0; l < bd; ++l) ecols[id + l] = SparseVec::unit(l);
  am.eps = SparseMat::from_columns(bd, std::move(ecols));
  return am;
}

std::vector<std::vector<SparseVec>> cocycle_space(const Algebra& base, const std::vector<SparseMat>& i_action) {
  const std::size_t bd = base.dim();
  if (i_action.size() != bd) throw std::invalid_argument("one action matrix per basis vector of B expected");
  const std::size_t id = bd ? i_action[0].rows() : 0;
  auto var = [&](std::size_t j, std::size_t l, std::size_t a) { return static_cast<Index>((j * bd + l) * id + a); };
  // Column per unknown ω(j, l)_a, row per equation (j, j′, j″, a).
  std::vector<std::vector<SparseVec::Term>> cols(bd * bd * id);
  Index row = 0;
  for (std::size_t j = 0; j < bd; ++j)
    for (std::size_t j1 = 0; j1 < bd; ++j1)
      for (std::size_t j2 = 0; j2 < bd; ++j2, row += id) {
        for (std::size_t c = 0; c < id; ++c)
          for (const auto& [a, x] : i_action[j].column(c)) cols[var(j1, j2, c)].emplace_back(row + a, x);
        for (const auto& [k, x] : base.mul_basis(j, j1))
          for (std::size_t a = 0; a < id; ++a) cols[var(k, j2, a)].emplace_back(row + a, -x);
        for (const auto& [k, x] : base.mul_basis(j1, j2))
          for (std::size_t a = 0; a < id; ++a) cols[var(j, k, a)].emplace_back(row + a, x);
      }
  std::vector<SparseVec> vs;
  for (auto& c : cols) vs.push_back(SparseVec::from_terms(std::move(c)));
  SparseMat m = SparseMat::from_columns(row, std::move(vs));
  std::vector<std::vector<SparseVec>> out;
  for (const auto& k : kernel_basis(m)) {
    std::vector<SparseVec> omega(bd * bd);
    for (const auto& [v, x] : k) omega[v / id].add_scaled(SparseVec::unit(v % id), x);
    out.push_back(std::move(omega));
  }
  return out;
}

SparseMat cocycle_section(std::size_t idim, std::size_t bdim) {
  std::vector<SparseVec> cols;
  for (std::size_t l = 0; l < bdim; ++l) cols.push_back(SparseVec::unit(idim + l));
  return SparseMat::from_columns(idim + bdim, std::move(cols));
}

Normalization normalize_cocycle(const RowExtension& re) {
  const auto& e = re.base.right_unit();
  if (!e) throw std::invalid_argument("normalization needs a right unit of B");
  const std::size_t bd = re.base.dim(), id = re.ideal_dim(), md = re.ring.dim();
  Normalization out{re, {}, {}, {}};
  std::vector<SparseVec> sig;
  for (std::size_t j = 0; j < bd; ++j) {
    SparseVec lam;
    for (const auto& [l, x] : *e) lam.add_scaled(re.omega[j * bd + l], -x);
    SparseVec s = re.sigma.column(j);
    for (const auto& [a, x] : lam) s.add_scaled(re.ideal[a], -x);
    out.lambda.push_back(lam);
    sig.push_back(s);
  }
  out.normalized = build(re.base, re.ring, re.eps, SparseMat::from_columns(md, std::move(sig)));
  std::vector<SparseVec> phi;
  for (std::size_t a = 0; a < id; ++a) phi.push_back(SparseVec::unit(a));
  for (std::size_t j = 0; j < bd; ++j) {
    SparseVec c = out.lambda[j];
    c.add_scaled(SparseVec::unit(id + j), Rational(1));
    phi.push_back(c);
  }
  out.automorphism = SparseMat::from_columns(md, std::move(phi));

  Certificate cob{"omega=coboundary(lambda)", true, ""}, zero{"normalized_omega=0", true, ""},
      auto_ok{"automorphism", true, ""};
  for (std::size_t j = 0; j < bd && cob.pass; ++j)
    for (std::size_t l = 0; l < bd; ++l) {
      // ω(j, l) = j·λ(l) - λ(jl); the term λ(j)l vanishes because IM = 0.
      SparseVec rhs = re.adapted.mul(SparseVec::unit(id + j), out.lambda[l]);
      for (const auto& [k, x] : re.base.mul_basis(j, l)) rhs.add_scaled(out.lambda[k], -x);
      if (rhs != re.omega[j * bd + l]) {
        cob.pass = false;
        cob.witness = "at basis pair (" + std::to_string(j) + "," + std::to_string(l) + ")";
        break;
      }
    }
  if (!out.normalized.omega_is_zero()) {
    zero.pass = false;
    zero.witness = "normalized cocycle is nonzero";
  }
  SparseMat phi_expected = out.normalized.to_adapted * re.from_adapted;
  check_equal(auto_ok, 0, out.automorphism, phi_expected);
  SparseMat phi2 = tensor_power_matrix(out.automorphism, 2);
  check_equal(auto_ok, 0, out.automorphism * re.adapted.mult_matrix(), out.normalized.adapted.mult_matrix() * phi2);
  out.certificates = {cob, zero, auto_ok};
  return out;
}

bool is_unitary(const RowExtension& re) {
  const auto& e = re.base.left_unit();
  if (!e) return false;
  return re.ring.left_mult_matrix(re.sigma.apply(*e)) == SparseMat::identity(re.ring.dim());
}

bool in_kernel_basis(Index code, std::size_t mdim, std::size_t idim, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    if (code % mdim < idim) return true;
    code /= mdim;
  }
  return false;
}

KernelContraction kernel_contraction(const RowExtension& re, std::size_t D) {
  if (!is_unitary(re)) throw std::invalid_argument("kernel contraction needs a left unit of B acting as identity on M");
  if (!re.omega_is_zero()) throw std::invalid_argument("kernel contraction needs a vanishing cocycle; normalize first");
  const std::size_t md = re.ring.dim(), id = re.ideal_dim();
  SparseVec e = re.to_adapted.apply(re.sigma.apply(*re.base.left_unit()));
  KernelContraction out;
  std::vector<std::size_t> dg;
  for (std::size_t n = 0; n <= D; ++n) {
    MixedRadix src = MixedRadix::power(md, n + 1), dst = MixedRadix::power(md, n + 2);
    std::vector<SparseVec> cols;
    cols.reserve(src.total());
    std::vector<std::size_t> nd(n + 2);
    for (Index code = 0; code < src.total(); ++code) {
      src.decode_into(code, dg);
      std::size_t p = n + 1;
      for (std::size_t k = n + 1; k-- > 0;)
        if (dg[k] < id) {
          p = k;
          break;
        }
      if (p == n + 1) {
        cols.emplace_back();
        continue;
      }
      Rational sign(p % 2 == 0 ? -1 : 1);
      std::vector<SparseVec::Term> terms;
      for (const auto& [l, x] : e) {
        for (std::size_t k = 0; k <= p; ++k) nd[k] = dg[k];
        nd[p + 1] = static_cast<std::size_t>(l);
        for (std::size_t k = p + 1; k <= n; ++k) nd[k + 1] = dg[k];
        terms.emplace_back(dst.encode(nd), sign * x);
      }
      cols.push_back(SparseVec::from_terms(std::move(terms)));
    }
    out.h.push_back(SparseMat::from_columns(dst.total(), std::move(cols)));
  }
  Certificate stable{"b(ker)⊆ker", true, ""}, contr{"bh+hb=Id", true, ""};
  SparseMat b_prev;
  for (std::size_t n = 0; n <= D; ++n) {
    SparseMat b_cur = n > 0 ? hochschild_b(re.adapted, n) : SparseMat();
    SparseMat b_next = hochschild_b(re.adapted, n + 1);
    SparseMat sum = b_next * out.h[n];
    if (n > 0) sum = sum + out.h[n - 1] * b_cur;
    const std::size_t len = n + 1;
    for (Index code = 0; code < sum.cols(); ++code) {
      if (!in_kernel_basis(code, md, id, len)) continue;
      if (n > 0 && stable.pass)
        for (const auto& [r, x] : b_cur.column(code))
          if (!in_kernel_basis(r, md, id, len - 1)) {
            stable.pass = false;
            stable.witness = "degree " + std::to_string(n) + ", basis tensor " + std::to_string(code);
          }
      if (contr.pass && sum.column(code) != SparseVec::unit(code)) {
        contr.pass = false;
        contr.witness = "degree " + std::to_string(n) + ", basis tensor " + std::to_string(code);
      }
    }
  }
  out.certificates = {stable, contr};
  return out;
}

namespace {

SparseMat adapted_eps(const RowExtension& re) {
  const std::size_t md = re.ring.dim(), id = re.ideal_dim();
  std::vector<SparseVec> cols(md);
  for (std::size_t a = id; a < md; ++a) cols[a] = SparseVec::unit(a - id);
  return SparseMat::from_columns(re.base.dim(), std::move(cols));
}

SparseMat tot_eps(const SparseMat& eps, TotMode mode, std::size_t n, std::size_t bd) {
  std::vector<SparseMat> blocks;
  for (std::size_t p : tot_columns(mode, n)) blocks.push_back(tensor_power_matrix(eps, n - p + 1));
  std::vector<SparseVec> cols;
  Index row_off = 0;
  for (const auto& blk : blocks) {
    for (std::size_t j = 0; j < blk.cols(); ++j) {
      std::vector<SparseVec::Term> t;
      for (const auto& [r, x] : blk.column(j)) t.emplace_back(r + row_off, x);
      cols.push_back(SparseVec::from_sorted(std::move(t)));
    }
    row_off += blk.rows();
  }
  return SparseMat::from_columns(tot_dim(mode, bd, n), std::move(cols));
}

}  // namespace

EpsilonChainMap epsilon_chain_map(const RowExtension& re, TotMode mode, std::size_t D) {
  const std::size_t bd = re.base.dim();
  SparseMat eps = adapted_eps(re);
  EpsilonChainMap out;
  for (std::size_t n = 0; n <= D; ++n) out.maps.push_back(tot_eps(eps, mode, n, bd));
  Certificate cb{"eps∘b=b∘eps", true, ""}, cbp{"eps∘b'=b'∘eps", true, ""}, ct{"eps∘t=t∘eps", true, ""},
      cn{"eps∘N=N∘eps", true, ""}, ctot{"eps∘d=d∘eps", true, ""};
  for (std::size_t len = 1; len <= D + 1; ++len) {
    const std::size_t n = len - 1;
    SparseMat e_src = tensor_power_matrix(eps, len);
    check_equal(ct, n, e_src * cyclic_t(re.adapted, n), cyclic_t(re.base, n) * e_src);
    check_equal(cn, n, e_src * cyclic_norm(re.adapted, n), cyclic_norm(re.base, n) * e_src);
    if (n > 0) {
      SparseMat e_dst = tensor_power_matrix(eps, len - 1);
      check_equal(cb, n, e_dst * hochschild_b(re.adapted, n), hochschild_b(re.base, n) * e_src);
      check_equal(cbp, n, e_dst * bar_bprime(re.adapted, n), bar_bprime(re.base, n) * e_src);
      check_equal(ctot, n, out.maps[n - 1] * tot_differential(re.adapted, mode, n),
                  tot_differential(re.base, mode, n) * out.maps[n]);
    }
  }
  out.certificates = {cb, cbp, ct, cn, ctot};
  return out;
}

SplitSequence epsilon_split_sequence(const RowExtension& re, std::size_t D) {
  const std::size_t md = re.ring.dim(), bd = re.base.dim(), id = re.ideal_dim();
  const std::size_t top = D + 1;
  KernelContraction kc = kernel_contraction(re, D);
  SplitSequence s;
  s.Y = tot_cc(re.adapted, TotMode::CC1, D);
  s.Z = tot_cc(re.base, TotMode::CC1, D);
  std::vector<std::size_t> xd(top + 1);
  std::vector<SparseMat> dx(top + 1);
  std::vector<std::size_t> dg;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t len = n + 1;
    MixedRadix rm = MixedRadix::power(md, len), rb = MixedRadix::power(bd, len);
    std::vector<SparseVec> icols, scols;
    for (Index code = 0; code < rm.total(); ++code)
      if (in_kernel_basis(code, md, id, len)) icols.push_back(SparseVec::unit(code));
    for (Index code = 0; code < rb.total(); ++code) {
      rb.decode_into(code, dg);
      for (auto& x : dg) x += id;
      scols.push_back(SparseVec::unit(rm.encode(dg)));
    }
    xd[n] = icols.size();
    s.iota.push_back(SparseMat::from_columns(rm.total(), std::move(icols)));
    s.rho.push_back(s.iota.back().transpose());
    s.sigma.push_back(SparseMat::from_columns(rm.total(), std::move(scols)));
    s.pi.push_back(s.sigma.back().transpose());
  }
  for (std::size_t n = 1; n <= top; ++n) dx[n] = s.rho[n - 1] * s.Y.d(n) * s.iota[n];
  s.X = ChainComplex(xd, dx, true);
  for (std::size_t n = 0; n < top; ++n) s.h.push_back(s.rho[n + 1] * kc.h[n] * s.iota[n]);
  return s;
}

std::pair<AugmentedModule, SparseMat> random_augmented_module(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-2, 2);
  const int kind = static_cast<int>(rng() % 3);
  Algebra base = kind == 0 ? truncated_polynomial(1) : (kind == 1 ? diagonal_algebra(2) : truncated_polynomial(2));
  const std::size_t bd = base.dim();
  const std::size_t id = 1 + rng() % (4 - bd);
  std::vector<SparseMat> ia;
  if (kind == 0) {
    ia.push_back(SparseMat::identity(id));
  } else if (kind == 1) {
    std::vector<SparseVec> p0(id), p1(id);
    for (std::size_t a = 0; a < id; ++a) (rng() % 2 ? p0 : p1)[a] = SparseVec::unit(a);
    ia.push_back(SparseMat::from_columns(id, std::move(p0)));
    ia.push_back(SparseMat::from_columns(id, std::move(p1)));
  } else {
    ia.push_back(SparseMat::identity(id));
    std::vector<SparseVec> x(id);
    if (id == 2 && rng() % 2) x[1] = SparseVec::unit(0);
    ia.push_back(SparseMat::from_columns(id, std::move(x)));
  }
  AugmentedModule am = cocycle_module(base, ia, std::vector<SparseVec>(bd * bd));
  const std::size_t md = am.mdim;
  // Random basis change of M and a section perturbed by a non-B-linear map into I.
  SparseMat T, Tinv;
  for (;;) {
    std::vector<SparseVec> cols;
    for (std::size_t j = 0; j < md; ++j) {
      std::vector<SparseVec::Term> t;
      for (std::size_t i = 0; i < md; ++i) t.emplace_back(i, Rational(val(rng)));
      cols.push_back(SparseVec::from_terms(std::move(t)));
    }
    T = SparseMat::from_columns(md, std::move(cols));
    if (auto inv = inverse(T)) {
      Tinv = *inv;
      break;
    }
  }
  std::vector<SparseVec> sig;
  for (std::size_t l = 0; l < bd; ++l) {
    std::vector<SparseVec::Term> t{{id + l, Rational(1)}};
    for (std::size_t a = 0; a < id; ++a) t.emplace_back(a, Rational(val(rng)));
    sig.push_back(T.apply(SparseVec::from_terms(std::move(t))));
  }
  AugmentedModule out{base, md, {}, am.eps * Tinv};
  for (const auto& a : am.action) out.action.push_back(T * a * Tinv);
  return {out, SparseMat::from_columns(md, std::move(sig))};
}

}  // namespace cychom
