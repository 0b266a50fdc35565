#include "cychom/chern.hpp"

#include <functional>
#include <map>

namespace cychom {

namespace {

Index ipow(std::size_t base, std::size_t e) {
  Index r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

SparseMat matrix_of(std::size_t rows, std::size_t cols, const std::function<SparseVec(std::size_t)>& col) {
  std::vector<SparseVec> cs;
  cs.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) cs.push_back(col(j));
  return SparseMat::from_columns(rows, std::move(cs));
}

// d_i on x in A^{⊗len}; d_{len-1} is the wrap-around face.
SparseVec face(const Algebra& a, std::size_t len, std::size_t i, const SparseVec& x) {
  const std::size_t dim = a.dim();
  MixedRadix in = MixedRadix::power(dim, len), out = MixedRadix::power(dim, len - 1);
  std::vector<std::size_t> dg, od(len - 1);
  std::vector<SparseVec::Term> acc;
  for (const auto& [code, c] : x) {
    in.decode_into(code, dg);
    const bool wrap = i + 1 == len;
    const SparseVec& prod = wrap ? a.mul_basis(dg[len - 1], dg[0]) : a.mul_basis(dg[i], dg[i + 1]);
    const std::size_t slot = wrap ? 0 : i;
    if (wrap) {
      for (std::size_t k = 1; k + 1 < len; ++k) od[k] = dg[k];
    } else {
      for (std::size_t k = 0; k < i; ++k) od[k] = dg[k];
      for (std::size_t k = i + 2; k < len; ++k) od[k - 1] = dg[k];
    }
    for (const auto& [p, y] : prod) {
      od[slot] = static_cast<std::size_t>(p);
      acc.emplace_back(out.encode(od), c * y);
    }
  }
  return SparseVec::from_terms(std::move(acc));
}

// (a_0, ..., a_n) -> (a_n, a_0, ..., a_{n-1}) without sign.
SparseVec rotate(std::size_t dim, std::size_t len, const SparseVec& x) {
  const Index low = ipow(dim, len - 1);
  return x.remap([&](Index code) { return (code % dim) * low + code / dim; });
}

SparseVec signed_t(std::size_t dim, std::size_t len, const SparseVec& x) {
  SparseVec r = rotate(dim, len, x);
  if (len % 2 == 0) r *= Rational(-1);
  return r;
}

SparseVec norm(std::size_t dim, std::size_t len, const SparseVec& x) {
  SparseVec acc = x, p = x;
  for (std::size_t k = 1; k < len; ++k) {
    p = signed_t(dim, len, p);
    acc += p;
  }
  return acc;
}

SparseVec alternating(const Algebra& a, std::size_t len, const SparseVec& x, bool wrap) {
  SparseVec acc;
  const std::size_t faces = wrap ? len : len - 1;
  for (std::size_t i = 0; i < faces; ++i) acc.add_scaled(face(a, len, i, x), Rational(i % 2 ? -1 : 1));
  return acc;
}

std::string first_diff(const SparseVec& x, const SparseVec& y) {
  SparseVec d = x - y;
  if (d.is_zero()) return "";
  return "coordinate " + std::to_string(d.terms().front().first);
}

void fail(Certificate& c, std::string witness) {
  if (!c.pass) return;
  c.pass = false;
  c.witness = std::move(witness);
}

std::string chain_diff(const CyclicChain& x, const CyclicChain& y) {
  for (std::size_t p = 0; p < x.columns.size() && p < y.columns.size(); ++p)
    if (x.columns[p] != y.columns[p]) return "column " + std::to_string(p) + ", " + first_diff(x.columns[p], y.columns[p]);
  return x.degree == y.degree ? "" : "degree";
}

Certificate cycle_certificate(const Algebra& a, const CyclicChain& x) {
  Certificate c{"total boundary = 0", true, ""};
  CyclicChain d = total_boundary(a, x);
  for (std::size_t p = 0; p < d.columns.size(); ++p)
    if (!d.columns[p].is_zero()) {
      fail(c, "column " + std::to_string(p));
      break;
    }
  return c;
}

SubspaceCoords base_coords(const GaloisData& g, std::size_t da) {
  return SubspaceCoords(da, g.inv.embedding.columns());
}

void append_prefixed(std::vector<Certificate>& out, const std::string& prefix, const std::vector<Certificate>& in) {
  for (const auto& c : in) out.push_back(Certificate{prefix + c.name, c.pass, c.witness});
}

}  // namespace

KSequenceViolation::KSequenceViolation(const std::string& condition, std::size_t m)
    : std::runtime_error(condition + " fails for m = " + std::to_string(m)), condition_(condition), m_(m) {}

std::vector<Certificate> ksequence_certificates(const Algebra& a, const KSequence& x) {
  const std::size_t dim = a.dim();
  std::vector<Certificate> out;
  for (std::size_t m = 0; m < x.terms.size(); ++m) {
    const SparseVec& xm = x.terms[m];
    if (xm.max_index_plus_one() > ipow(dim, m + 1))
      throw std::invalid_argument("term " + std::to_string(m) + " is not in A^{⊗" + std::to_string(m + 1) + "}");
    Certificate t{"t(x_m) = (-1)^m x_m, m=" + std::to_string(m), true, ""};
    SparseVec rhs = xm;
    if (m % 2) rhs *= Rational(-1);
    SparseVec lhs = signed_t(dim, m + 1, xm);
    if (lhs != rhs) fail(t, first_diff(lhs, rhs));
    out.push_back(t);
    if (m == 0) continue;
    Certificate d{"d_i x_m = x_{m-1}, m=" + std::to_string(m), true, ""};
    for (std::size_t i = 0; i <= m && d.pass; ++i) {
      SparseVec f = face(a, m + 1, i, xm);
      if (f != x.terms[m - 1]) fail(d, "i=" + std::to_string(i) + ", " + first_diff(f, x.terms[m - 1]));
    }
    out.push_back(d);
  }
  return out;
}

Rational character_coefficient(std::size_t m) {
  Rational c(1);
  for (std::size_t k = m / 2 + 1; k <= m; ++k) c *= Rational(static_cast<long>(k));
  if ((m / 2) % 2) c *= Rational(-1);
  return c;
}

bool CharacterClass::all_pass() const {
  for (const auto& c : certificates)
    if (!c.pass) return false;
  return true;
}

CharacterClass abstract_character(const Algebra& a, const KSequence& x, std::size_t n) {
  if (x.terms.size() < 2 * n + 1) throw std::invalid_argument("ch_n needs the terms x_0..x_{2n}");
  KSequence head{std::vector<SparseVec>(x.terms.begin(), x.terms.begin() + static_cast<long>(2 * n + 1))};
  std::vector<Certificate> certs = ksequence_certificates(a, head);
  for (std::size_t k = 0; k < certs.size(); ++k)
    if (!certs[k].pass) {
      const auto& name = certs[k].name;
      const std::size_t cut = name.find(", m=");
      throw KSequenceViolation(name.substr(0, cut), std::stoul(name.substr(cut + 4)));
    }
  const std::size_t dim = a.dim();
  const auto& xs = head.terms;
  for (std::size_t l = 1; l <= n; ++l) {
    Certificate cb{"b(-2x_2l) = -(1-t)x_{2l-1}, l=" + std::to_string(l), true, ""};
    SparseVec lhs = Rational(-2) * alternating(a, 2 * l + 1, xs[2 * l], true);
    SparseVec rhs = signed_t(dim, 2 * l, xs[2 * l - 1]) - xs[2 * l - 1];
    if (lhs != rhs) fail(cb, first_diff(lhs, rhs));
    certs.push_back(cb);
    // The cycle condition in odd columns: a_{2l-1} b′x_{2l-1} = a_{2l-2} N x_{2l-2}
    // with a_{2l-1} = (2l-1) a_{2l-2}.
    Certificate cp{"(2l-1) b'(x_{2l-1}) = N x_{2l-2}, l=" + std::to_string(l), true, ""};
    SparseVec bp = Rational(static_cast<long>(2 * l - 1)) * alternating(a, 2 * l, xs[2 * l - 1], false);
    SparseVec nx = norm(dim, 2 * l - 1, xs[2 * l - 2]);
    if (bp != nx) fail(cp, first_diff(bp, nx));
    certs.push_back(cp);
  }
  CyclicChain chain = CyclicChain::zero(2 * n, dim);
  for (std::size_t p = 0; p <= 2 * n; ++p) chain.columns[p] = character_coefficient(2 * n - p) * xs[2 * n - p];
  certs.push_back(cycle_certificate(a, chain));
  return CharacterClass{n, std::move(chain), std::move(certs)};
}

ChernCharacter idempotent_chern(const Algebra& b, std::size_t size, const SparseVec& e, std::size_t n) {
  Algebra mat = matrix_algebra(b, size);
  if (e.max_index_plus_one() > mat.dim()) throw std::invalid_argument("idempotent has the wrong size");
  if (mat.mul(e, e) != e) throw NotIdempotent("e·e differs from e");
  KSequence up, down;
  SparseVec x = e;
  for (std::size_t m = 0; m <= 2 * n; ++m) {
    if (m > 0) x = tensor(x, e, mat.dim());
    up.terms.push_back(x);
    down.terms.push_back(trace_map(b, size, m).apply(x));
  }
  ChernCharacter out{abstract_character(mat, up, n), abstract_character(b, down, n)};
  Certificate push{"trace of the matrix-level cycle", true, ""};
  for (std::size_t p = 0; p <= 2 * n && push.pass; ++p) {
    SparseVec tr = trace_map(b, size, 2 * n - p).apply(out.upper.cycle.columns[p]);
    if (tr != out.base.cycle.columns[p]) fail(push, "column " + std::to_string(p));
  }
  out.base.certificates.push_back(push);
  return out;
}

SparseVec chw_chain(const ESCoring& es, const ComoduleAlgebra& ca, const SparseMat& ell, const SparseVec& c,
                    std::size_t m) {
  if (!is_cotrace(ca.coalg, c)) throw std::invalid_argument("c is not a cotrace");
  const std::size_t da = ca.adim(), legs = 2 * (m + 1);
  SparseVec y = apply_tensor_power(ell, m + 1, ca.coalg.iterated_comult(c, m + 1));
  // legs L_1 R_1 ... L_{m+1} R_{m+1} -> R_{m+1} L_1 R_1 ... L_{m+1}
  const Index high = ipow(da, legs - 1);
  SparseVec rot = y.remap([&](Index code) { return (code % da) * high + code / da; });
  const std::size_t n2 = da * da, dm = es.basis.size();
  SparseMat proj = matrix_of(dm, n2, [&](std::size_t u) { return es.coords.project_basis(u); });
  SparseMat embed = SparseMat::from_columns(n2, es.basis);
  SparseVec z = apply_tensor_power(proj, m + 1, rot);
  if (apply_tensor_power(embed, m + 1, z) != rot)
    throw ChainEscapes("c_m(ℓ)(c) leaves M^{⊗(m+1)} at m = " + std::to_string(m));
  return z;
}

CyclicChain push_to_base(const ESCoring& es, const CyclicChain& x) {
  CyclicChain y = CyclicChain::zero(x.degree, es.counit.rows());
  for (std::size_t p = 0; p < x.columns.size(); ++p)
    y.columns[p] = apply_tensor_power(es.counit, x.degree - p + 1, x.columns[p]);
  return y;
}

ChernCharacter chern_weil(const ESCoring& es, const ComoduleAlgebra& ca, const SparseMat& ell, const SparseVec& c,
                          std::size_t n) {
  KSequence up, down;
  for (std::size_t m = 0; m <= 2 * n; ++m) {
    up.terms.push_back(chw_chain(es, ca, ell, c, m));
    down.terms.push_back(apply_tensor_power(es.counit, m + 1, up.terms.back()));
  }
  ChernCharacter out{abstract_character(es.ring.ring, up, n), abstract_character(es.module.base, down, n)};
  Certificate push{"ε-image of the M-level cycle", true, ""};
  std::string w = chain_diff(push_to_base(es, out.upper.cycle), out.base.cycle);
  if (!w.empty()) fail(push, w);
  out.base.certificates.push_back(push);
  return out;
}

PeriodicityCheck periodicity(const Algebra& a, const CyclicChain& next, const CyclicChain& prev) {
  if (next.degree != prev.degree + 2) throw std::invalid_argument("S lowers the degree by two");
  ChainComplex cx = tot_cc(a, TotMode::Full, prev.degree);
  auto w = homologous(connes_S(next).to_tot(), prev.to_tot(), cx, prev.degree);
  PeriodicityCheck out{Certificate{"S[ch_{n+1}] ~ [ch_n], n=" + std::to_string(prev.degree / 2), w.has_value(), ""}, w};
  if (!w) out.certificate.witness = "no boundary found";
  return out;
}

AssociatedIdempotent associated_idempotent(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                           const Comodule& v) {
  if (auto bad = comodule_violation(ca.coalg, v)) throw std::invalid_argument("comodule: " + *bad);
  const std::size_t da = ca.adim(), dc = ca.cdim(), nv = v.dim;
  const Algebra& b = g.inv.base;
  const std::size_t db = b.dim();
  // A□V = ker(ρ⊗id - id⊗λ_V) inside A⊗V.
  SparseMat eq = matrix_of(da * dc * nv, da * nv, [&](std::size_t col) {
    const std::size_t a = col / nv, i = col % nv;
    SparseVec out;
    for (const auto& [u, x] : ca.coaction.column(a)) out.add_scaled(SparseVec::unit(u * nv + i), x);
    for (std::size_t j = 0; j < nv; ++j)
      for (const auto& [c, y] : v.entry(i, j)) out.add_scaled(SparseVec::unit((a * dc + c) * nv + j), -y);
    return out;
  });
  AssociatedIdempotent out;
  out.cotensor_basis = kernel_basis(eq);
  const std::size_t ns = out.size = out.cotensor_basis.size();
  if (ns == 0) {
    out.certificates.push_back({"entries in B", true, ""});
    out.certificates.push_back({"E^2 = E", true, ""});
    return out;
  }
  SubspaceCoords wc(da * nv, out.cotensor_basis);
  // g[i][s] in A from ℓ(c_ij)⊗v_j = Σ_s g_is⊗w_s.
  std::vector<std::vector<SparseVec>> gis(nv, std::vector<SparseVec>(ns));
  for (std::size_t i = 0; i < nv; ++i) {
    std::map<std::size_t, std::vector<SparseVec::Term>> slices;
    for (std::size_t j = 0; j < nv; ++j)
      for (const auto& [code, x] : ell.apply(v.entry(i, j)))
        slices[code / da].emplace_back((code % da) * nv + j, x);
    for (auto& [l, terms] : slices) {
      auto k = wc.coords(SparseVec::from_terms(std::move(terms)));
      if (!k) throw ChainEscapes("ℓ(c_ij)⊗v_j leaves A⊗(A□V) for i = " + std::to_string(i));
      for (const auto& [s, x] : *k) gis[i][s].add_scaled(SparseVec::unit(l), x);
    }
  }
  SubspaceCoords bc = base_coords(g, da);
  Algebra mat = matrix_algebra(b, ns);
  Certificate in_b{"entries in B", true, ""};
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<SparseVec> ws(nv);
    for (const auto& [code, x] : out.cotensor_basis[s]) ws[code % nv].add_scaled(SparseVec::unit(code / nv), x);
    for (std::size_t t = 0; t < ns; ++t) {
      SparseVec entry;
      for (std::size_t i = 0; i < nv; ++i) entry += ca.alg.mul(ws[i], gis[i][t]);
      auto k = bc.coords(entry);
      if (!k) {
        fail(in_b, "entry (" + std::to_string(s) + "," + std::to_string(t) + ")");
        continue;
      }
      for (const auto& [q, x] : *k) out.matrix.add_scaled(SparseVec::unit(matrix_index(ns, db, s, t, q)), x);
    }
  }
  out.certificates.push_back(in_b);
  if (!in_b.pass) throw ChainEscapes("associated idempotent has an entry outside B: " + in_b.witness);
  Certificate idem{"E^2 = E", mat.mul(out.matrix, out.matrix) == out.matrix, ""};
  if (!idem.pass) throw NotIdempotent("associated idempotent: E·E differs from E");
  out.certificates.push_back(idem);
  return out;
}

SparseVec chern_galois_direct(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                              const Comodule& v, std::size_t m) {
  const std::size_t da = ca.adim(), nv = v.dim, len = m + 1, legs = 2 * len;
  std::vector<SparseVec> ells(nv * nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) ells[i * nv + j] = ell.apply(v.entry(i, j));
  const Index high = ipow(da, legs - 1);
  SparseMat mult = ca.alg.mult_matrix();
  SparseVec acc;
  MixedRadix cycles = MixedRadix::power(nv, len);
  std::vector<std::size_t> idx;
  for (Index code = 0; code < cycles.total(); ++code) {
    cycles.decode_into(code, idx);
    SparseVec t = ells[idx[0] * nv + idx[1 % len]];
    for (std::size_t k = 1; k < len; ++k) t = tensor(t, ells[idx[k] * nv + idx[(k + 1) % len]], da * da);
    // L_1 R_1 ... L_{m+1} R_{m+1} -> R_1 L_2 ... R_{m+1} L_1
    SparseVec rot = t.remap([&](Index c) { return (c % high) * da + c / high; });
    acc += apply_tensor_power(mult, len, rot);
  }
  const std::size_t db = g.inv.base.dim();
  SubspaceCoords bc = base_coords(g, da);
  SparseMat proj = matrix_of(db, da, [&](std::size_t u) { return bc.project_basis(u); });
  SparseVec out = apply_tensor_power(proj, len, acc);
  if (apply_tensor_power(g.inv.embedding, len, out) != acc)
    throw ChainEscapes("Chern-Galois expression leaves B^{⊗(m+1)} at m = " + std::to_string(m));
  return out;
}

bool FactorizationReport::all_pass() const {
  for (const auto& c : certificates)
    if (!c.pass) return false;
  return true;
}

FactorizationReport verify_factorization(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell,
                                         const Comodule& v, std::size_t n) {
  const Algebra& b = g.inv.base;
  ESCoring es = es_coring(g, ca, StrongConnection{ell, {}});
  SparseVec chi = comodule_character(ca.coalg, v);
  FactorizationReport rep;
  ChernCharacter chw = chern_weil(es, ca, ell, chi, n);
  append_prefixed(rep.certificates, "chern-weil (M): ", chw.upper.certificates);
  append_prefixed(rep.certificates, "chern-weil (B): ", chw.base.certificates);
  rep.chern_weil = chw.base.cycle;

  KSequence direct;
  for (std::size_t m = 0; m <= 2 * n; ++m) direct.terms.push_back(chern_galois_direct(g, ca, ell, v, m));
  CharacterClass dc = abstract_character(b, direct, n);
  append_prefixed(rep.certificates, "direct: ", dc.certificates);
  rep.direct = dc.cycle;

  AssociatedIdempotent ai = associated_idempotent(g, ca, ell, v);
  append_prefixed(rep.certificates, "idempotent: ", ai.certificates);
  ChernCharacter ic = idempotent_chern(b, ai.size, ai.matrix, n);
  append_prefixed(rep.certificates, "idempotent character: ", ic.base.certificates);
  rep.idempotent = ic.base.cycle;

  Certificate eq{"(a) = (b) coordinatewise", true, ""};
  std::string w = chain_diff(rep.chern_weil, rep.direct);
  if (!w.empty()) fail(eq, w);
  rep.certificates.push_back(eq);

  ChainComplex cx = tot_cc(b, TotMode::Full, 2 * n);
  rep.witness = homologous(rep.chern_weil.to_tot(), rep.idempotent.to_tot(), cx, 2 * n);
  rep.certificates.push_back(
      Certificate{"(a) ~ (c) with witness", rep.witness.has_value(), rep.witness ? "" : "no boundary found"});
  return rep;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Homologous: return "homologous";
    case Verdict::NotHomologous: return "not homologous";
    case Verdict::NotDecidable: return "not decidable by the characters argument";
  }
  return "";
}

IndependenceReport connection_independence(const GaloisData& g, const ComoduleAlgebra& ca, const SparseMat& ell1,
                                           const SparseMat& ell2, const SparseVec& c,
                                           const std::vector<Comodule>& comodules, std::size_t n) {
  if (!is_cotrace(ca.coalg, c)) throw std::invalid_argument("c is not a cotrace");
  const Algebra& b = g.inv.base;
  IndependenceReport rep;
  std::vector<SparseVec> chars;
  for (const auto& v : comodules) chars.push_back(comodule_character(ca.coalg, v));
  auto sol = solve_affine(SparseMat::from_columns(ca.cdim(), chars), c);
  if (sol) {
    rep.decomposition.assign(chars.size(), Rational(0));
    for (const auto& [k, x] : sol->particular) rep.decomposition[k] = x;
  }
  if (ell1 == ell2) {
    rep.verdict = Verdict::Homologous;
    rep.observed_homologous = true;
    rep.witness = SparseVec();
    rep.certificates.push_back({"identical connections", true, ""});
    return rep;
  }
  ESCoring es1 = es_coring(g, ca, StrongConnection{ell1, {}});
  ESCoring es2 = es_coring(g, ca, StrongConnection{ell2, {}});
  ChainComplex cx = tot_cc(b, TotMode::Full, 2 * n);
  auto compare = [&](const SparseVec& cot, const std::string& label) {
    ChernCharacter x1 = chern_weil(es1, ca, ell1, cot, n), x2 = chern_weil(es2, ca, ell2, cot, n);
    append_prefixed(rep.certificates, label + " ℓ₁: ", x1.base.certificates);
    append_prefixed(rep.certificates, label + " ℓ₂: ", x2.base.certificates);
    return homologous(x1.base.cycle.to_tot(), x2.base.cycle.to_tot(), cx, 2 * n);
  };
  auto w = compare(c, "c");
  rep.observed_homologous = w.has_value();
  rep.witness = w;
  if (!sol) {
    rep.verdict = Verdict::NotDecidable;
    return rep;
  }
  for (std::size_t k = 0; k < chars.size(); ++k) {
    if (rep.decomposition[k].is_zero()) continue;
    const std::string label = "χ(" + (comodules[k].name.empty() ? std::to_string(k) : comodules[k].name) + ")";
    auto wk = compare(chars[k], label);
    rep.certificates.push_back({"class of " + label + " agrees", wk.has_value(), wk ? "" : "no boundary found"});
  }
  rep.certificates.push_back({"class of c agrees", w.has_value(), w ? "" : "no boundary found"});
  rep.verdict = w ? Verdict::Homologous : Verdict::NotHomologous;
  return rep;
}

Comodule line_comodule(const SparseVec& c, std::string name) { return Comodule{1, {c}, std::move(name)}; }

Comodule sign_comodule() {
  return line_comodule(SparseVec::from_terms({{0, Rational(1)}, {1, Rational(-1)}}), "sign");
}

}  // namespace cychom
