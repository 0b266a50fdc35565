// Acceptance criteria 1-9, one PASS/FAIL line each, exact arithmetic throughout.
//
//   acceptance [--only K] [--expect-fail K]...
//
// Exit status is 0 iff every criterion's outcome matches its expectation
// (pass unless listed with --expect-fail).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cychom/commands.hpp"

using namespace cychom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok || !pass) return;
    pass = false;
    detail = what;
  }
  void require_certs(const std::vector<Certificate>& cs, const std::string& where) {
    for (const auto& c : cs)
      if (!c.pass) {
        require(false, where + ": " + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]"));
        return;
      }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return std::string(CYCHOM_DATA_DIR) + "/" + name; }

Outcome criterion1() {
  Outcome o;
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    KillResult r = kill_contractible(random_split_sequence(seed, 4, 5));
    if (r.all_pass()) ++ok;
    o.require_certs(r.certificates, "seed " + std::to_string(seed));
  }
  if (o.pass) o.detail = std::to_string(ok) + "/100 sequences";
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto ca = z4_over_z2();
  GaloisData g = galois_data(ca);
  ESCoring es = es_coring(g, ca, solve_strong_connection(g, ca));
  o.require_certs(es.certificates, "ES coring");
  o.require(is_unitary(es.ring) && es.ring.omega_is_zero(), "ES ring not unitary with ω = 0");
  o.require_certs(kernel_contraction(es.ring, 4).certificates, "ES kernel contraction");
  o.require(homology_dims(tot_cc(es.ring.adapted, TotMode::CC1, 3)) == homology_dims(tot_cc(es.ring.base, TotMode::CC1, 3)),
            "ES: HH dims differ");
  o.require(homology_dims(tot_cc(es.ring.adapted, TotMode::Full, 3)) == homology_dims(tot_cc(es.ring.base, TotMode::Full, 3)),
            "ES: HC dims differ");
  for (std::uint64_t seed = 0; seed < 20 && o.pass; ++seed) {
    auto [am, sigma] = random_augmented_module(seed);
    const std::string at = "random module " + std::to_string(seed);
    o.require(am.mdim <= 4, at + ": dim M > 4");
    RowExtension re = row_extension(am, sigma);
    o.require(is_unitary(re), at + ": not unitary");
    Normalization nz = normalize_cocycle(re);
    o.require_certs(nz.certificates, at + " normalization");
    const RowExtension& z = nz.normalized;
    o.require_certs(kernel_contraction(z, 4).certificates, at + " kernel contraction");
    o.require(homology_dims(tot_cc(z.adapted, TotMode::CC1, 3)) == homology_dims(tot_cc(z.base, TotMode::CC1, 3)),
              at + ": HH dims differ");
    o.require(homology_dims(tot_cc(z.adapted, TotMode::Full, 3)) == homology_dims(tot_cc(z.base, TotMode::Full, 3)),
              at + ": HC dims differ");
  }
  if (o.pass) o.detail = "ℤ/4 ES coring (dim M = " + std::to_string(es.basis.size()) + ") and 20 random modules";
  return o;
}

// [[k², k], [0, k]] with k² acting on the corner through its first idempotent.
Algebra triangular_k2_k() {
  using E = Algebra::Entry;
  // basis e1, e2 (k²), f (k), m (corner)
  std::vector<E> mult{E{0, 0, 0, Rational(1)}, E{1, 1, 1, Rational(1)}, E{2, 2, 2, Rational(1)},
                      E{0, 3, 3, Rational(1)}, E{3, 2, 3, Rational(1)}};
  return Algebra::from_table(BasedSpace({"e1", "e2", "f", "m"}), mult);
}

Outcome criterion3() {
  Outcome o;
  using V = std::vector<std::size_t>;
  V q = homology_dims(tot_cc(diagonal_algebra(1), TotMode::Full, 4));
  o.require(q == V{1, 0, 1, 0, 1}, "HC(Q) dims");
  V k2 = homology_dims(tot_cc(diagonal_algebra(2), TotMode::Full, 4));
  o.require(k2 == V{2, 0, 2, 0, 2}, "HC(k²) dims");
  V tri = homology_dims(tot_cc(triangular_k2_k(), TotMode::CC1, 3));
  V sum = homology_dims(tot_cc(diagonal_algebra(2), TotMode::CC1, 3));
  V k = homology_dims(tot_cc(diagonal_algebra(1), TotMode::CC1, 3));
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k[i];
  o.require(tri == sum && tri == V{3, 0, 0, 0}, "HH(triangular) differs from HH(k²) ⊕ HH(k)");
  if (o.pass) o.detail = "HC(Q), HC(k²), HH(triangular) = [3,0,0,0]";
  return o;
}

SparseVec random_invertible(std::mt19937_64& rng, const Algebra& b) {
  const std::size_t db = b.dim();
  Algebra m2 = matrix_algebra(b, 2);
  auto rnd = [&] {
    std::vector<SparseVec::Term> t;
    for (std::size_t i = 0; i < db; ++i)
      if (long long x = static_cast<long long>(rng() % 7) - 3) t.emplace_back(i, Rational(x));
    return SparseVec::from_sorted(std::move(t));
  };
  auto place = [&](std::size_t i, std::size_t j, const SparseVec& x) {
    return x.remap([&](Index k) { return matrix_index(2, db, i, j, static_cast<std::size_t>(k)); });
  };
  SparseVec id = place(0, 0, *b.unit()) + place(1, 1, *b.unit());
  return m2.mul(id + place(1, 0, rnd()), id + place(0, 1, rnd()));
}

Outcome criterion4() {
  Outcome o;
  std::vector<Algebra> bases{diagonal_algebra(1), diagonal_algebra(2)};
  for (const auto& b : bases) {
    MatrixStability ms = matrix_stability(b, 2, 3);
    o.require_certs(ms.certificates, "M_2 over dim " + std::to_string(b.dim()));
    for (std::size_t n = 0; n <= 3; ++n)
      o.require(ms.tr[n] * ms.inc[n] == SparseMat::identity(ms.inc[n].cols()),
                "tr∘inc ≠ id in degree " + std::to_string(n));
  }
  std::mt19937_64 rng(4);
  for (std::size_t k = 0; k < 10; ++k) {
    const Algebra& b = bases[k % 2];
    ConjugationHomotopy ch = conjugation_homotopy(b, 2, random_invertible(rng, b), 3);
    o.require_certs(ch.certificates, "conjugation " + std::to_string(k));
  }
  if (o.pass) o.detail = "M_2(Q), M_2(k²) through degree 3; 10 conjugations";
  return o;
}

Outcome criterion5() {
  Outcome o;
  // class numbers, frozen by hand
  std::vector<std::size_t> expected{1, 2, 3, 4, 5, 6, 7, 8, 4, 3, 8, 8, 5, 5};
  auto groups = Group::small_groups();
  o.require(groups.size() == expected.size(), "group list changed");
  for (std::size_t i = 0; i < groups.size() && o.pass; ++i) {
    std::size_t d = cotrace_basis(function_algebra_of_group(groups[i]).coalg).size();
    o.require(d == expected[i], groups[i].name() + ": dim C^tr = " + std::to_string(d));
  }
  HopfAlgebra h = function_algebra_of_group(Group::cyclic(2));
  Comodule triv = line_comodule(*h.alg.unit(), "trivial");
  o.require(enough_characters(h.coalg, {triv, sign_comodule()}), "characters of k^ℤ/2 do not span");
  if (o.pass) o.detail = std::to_string(groups.size()) + " groups of order ≤ 8; k^ℤ/2 characters span";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto ca = z4_over_z2();
  GaloisData g = galois_data(ca);
  StrongConnection ell = solve_strong_connection(g, ca);
  ESCoring es = es_coring(g, ca, ell);
  SparseVec chi = comodule_character(ca.coalg, sign_comodule());
  ChernCharacter c0 = chern_weil(es, ca, ell.ell, chi, 0), c1 = chern_weil(es, ca, ell.ell, chi, 1);
  for (const auto* c : {&c0, &c1}) {
    o.require_certs(c->upper.certificates, "chw in Tot CC(M)");
    o.require_certs(c->base.certificates, "chw in Tot CC(B)");
  }
  KSequence up;
  for (std::size_t m = 0; m <= 4; ++m) up.terms.push_back(chw_chain(es, ca, ell.ell, chi, m));
  o.require_certs(ksequence_certificates(es.ring.ring, up), "cyclic symmetry / faces");
  PeriodicityCheck pm = periodicity(es.ring.ring, c1.upper.cycle, c0.upper.cycle);
  PeriodicityCheck pb = periodicity(g.inv.base, c1.base.cycle, c0.base.cycle);
  o.require(pm.certificate.pass && pm.witness, "S[chw₁] not homologous to [chw₀] in M");
  o.require(pb.certificate.pass && pb.witness, "S[chw₁] not homologous to [chw₀] in B");
  if (o.pass) o.detail = "cycles for n = 0, 1; identities for m ≤ 4; S witness found";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (auto ca : {hopf_self_coaction(Group::cyclic(2)), z4_over_z2()}) {
    GaloisData g = galois_data(ca);
    StrongConnection ell = solve_strong_connection(g, ca);
    for (std::size_t n = 0; n <= 1; ++n) {
      FactorizationReport r = verify_factorization(g, ca, ell.ell, sign_comodule(), n);
      o.require_certs(r.certificates, ca.name + ", n = " + std::to_string(n));
      o.require(r.witness.has_value(), ca.name + ": no witness");
      if (n == 0 && g.inv.base.dim() == 1)
        o.require(r.chern_weil.columns[0] == SparseVec::unit(0, Rational(1)), "chw₀ ≠ dim(V)·1 over k");
    }
  }
  if (o.pass) o.detail = "k^ℤ/2 over k and ℤ/4 bundle, n = 0, 1";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto ca = hopf_self_coaction(Group::cyclic(2));
  GaloisData g = galois_data(ca);
  StrongConnectionSpace su = strong_connection_space(g, ca, true);
  StrongConnectionSpace sn = strong_connection_space(g, ca, false);
  const StrongConnectionSpace& s = sn.directions.empty() ? su : sn;
  if (s.directions.empty()) {
    o.require(false, "k^ℤ/2 over k has a unique strong connection (0 unital, 0 non-unital directions); "
                     "no second solution exists");
  } else {
    SparseMat ell2 = s.particular + s.directions.front();
    Comodule v = sign_comodule();
    SparseVec chi = comodule_character(ca.coalg, v);
    Comodule triv = line_comodule(ca.grouplike(), "trivial");
    for (std::size_t n = 0; n <= 1; ++n) {
      IndependenceReport r = connection_independence(g, ca, s.particular, ell2, chi, {triv, v}, n);
      o.require(r.verdict == Verdict::Homologous && r.witness, "chw not homologous, n = " + std::to_string(n));
    }
  }
  // Same check where distinct connections exist.
  auto z4 = z4_over_z2();
  GaloisData gz = galois_data(z4);
  StrongConnectionSpace sz = strong_connection_space(gz, z4, false);
  std::string extra = "ℤ/4 bundle: " + std::to_string(sz.directions.size()) + " directions";
  if (!sz.directions.empty()) {
    SparseVec chi = comodule_character(z4.coalg, sign_comodule());
    bool all = true;
    for (std::size_t n = 0; n <= 1; ++n) {
      IndependenceReport r = connection_independence(gz, z4, sz.particular, sz.particular + sz.directions.back(), chi,
                                                     {sign_comodule()}, n);
      all = all && r.verdict == Verdict::Homologous;
    }
    extra += all ? ", chw₀ and chw₁ homologous for two distinct connections" : ", NOT homologous";
  }
  o.detail = o.pass ? extra : o.detail + "; " + extra;
  return o;
}

Outcome criterion9() {
  Outcome o;
  SessionConfig cfg;
  cfg.seed = 7;
  struct Run {
    std::string command;
    Json args;
  };
  std::vector<Run> runs{
      {"homology", {{"input", read_file(data("q.json"))}, {"mode", "full"}, {"D", 4}}},
      {"check", {{"input", read_file(data("ks3.json"))}}},
      {"cotraces", {{"input", read_file(data("ks3.json"))}}},
      {"strong-connection", {{"input", read_file(data("z4-over-z2.json"))}}},
      {"es-coring", {{"input", read_file(data("z4-over-z2.json"))}, {"D", 3}}},
      {"chern", {{"input", read_file(data("q.json"))}, {"idempotent", read_file(data("idempotent-rank1.json"))}, {"n", 1}}},
      {"chern-weil", {{"input", read_file(data("z4-over-z2.json"))}, {"cotrace", "sign"}, {"n", 1}}},
      {"diagram", {{"input", read_file(data("z4-over-z2.json"))}, {"n", 1}}},
      {"verify", {{"lemma", "kill"}, {"seeds", 20}}},
      {"verify", {{"lemma", "conj"}, {"seeds", 5}}},
  };
  for (const auto& r : runs) {
    std::string a = run_command(r.command, r.args, cfg).report.dump();
    std::string b = run_command(r.command, r.args, cfg).report.dump();
    o.require(a == b, r.command + " report differs between runs");
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " reports byte-identical";
  return o;
}

struct Criterion {
  const char* title;
  double limit;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, expect_fail;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--expect-fail") && i + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only K] [--expect-fail K]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {"kill-contractible lemma on 100 random sequences", 10, criterion1},
      {"row-extension contraction and homology equality", 60, criterion2},
      {"cyclic homology oracles", 10, criterion3},
      {"matrix stability and conjugation", 30, criterion4},
      {"cotrace dimensions and characters", 10, criterion5},
      {"Chern-Weil cycles, symmetry, faces, periodicity", 120, criterion6},
      {"factorization diagram", 120, criterion7},
      {"connection independence on k^ℤ/2 over k", 60, criterion8},
      {"deterministic reports", 60, criterion9},
  };
  bool as_expected = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto& c = criteria[k];
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) o.require(false, "time limit exceeded");
    char t[64];
    std::snprintf(t, sizeof t, "%.2fs/%.0fs", secs, c.limit);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << " (" << t << ") "
              << o.detail << (expect_fail.count(id) ? " [expected failure]" : "") << std::endl;
    as_expected = as_expected && (o.pass != static_cast<bool>(expect_fail.count(id)));
  }
  return as_expected ? 0 : 1;
}
