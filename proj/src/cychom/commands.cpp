#include "cychom/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cychom/primefield.hpp"

namespace cychom {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
  const Json& args;
  const SessionConfig& cfg;
  std::vector<Certificate> certs;
  Json dims = Json::object();
  Json results = Json::object();
  Json timings = Json::object();
  Clock::time_point start = Clock::now();

  void lap(const std::string& name) {
    auto now = Clock::now();
    timings[name] = std::chrono::duration<double>(now - start).count();
    start = now;
  }
  void add(const std::vector<Certificate>& cs, const std::string& prefix = "") {
    for (const auto& c : cs) certs.push_back(Certificate{prefix + c.name, c.pass, c.witness});
  }
};

Json parse_text(const Json& args, const char* key) {
  auto it = args.find(key);
  if (it == args.end() || !it->is_string()) throw InputError(std::string("(") + key + ")", "missing input text");
  try {
    return Json::parse(it->get<std::string>());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("(") + key + ")", e.what());
  }
}

std::size_t uint_arg(const Json& args, const char* key, std::size_t def) {
  auto it = args.find(key);
  if (it == args.end() || it->is_null()) return def;
  if (!it->is_number_integer() || it->get<long long>() < 0)
    throw InputError(std::string("(") + key + ")", "expected a non-negative integer");
  return it->get<std::size_t>();
}

std::string string_arg(const Json& args, const char* key, const std::string& def) {
  auto it = args.find(key);
  if (it == args.end() || it->is_null()) return def;
  if (!it->is_string()) throw InputError(std::string("(") + key + ")", "expected a string");
  return it->get<std::string>();
}

Json sparse_json(const SparseVec& v) {
  Json a = Json::array();
  for (const auto& [i, x] : v) a.push_back({i, x.str()});
  return a;
}

Json chain_json(const CyclicChain& c) {
  Json cols = Json::array();
  for (const auto& col : c.columns) cols.push_back(sparse_json(col));
  return {{"degree", c.degree}, {"columns", cols}};
}

Json matrix_json(const SparseMat& m) {
  Json cols = Json::array();
  for (const auto& c : m.columns()) cols.push_back(sparse_json(c));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"columns", cols}};
}

const ComoduleAlgebra& need_ca(const Problem& p) {
  if (!p.comodule_algebra) throw InputError("/coaction", "this command needs a comodule algebra");
  return *p.comodule_algebra;
}

std::vector<std::size_t> homology_fp(const ChainComplex& c, std::uint64_t p) {
  PrimeFieldScope scope(p);
  std::vector<std::size_t> ranks(c.top() + 2, 0);
  for (std::size_t n = 1; n <= c.top(); ++n)
    ranks[n] = rank(c.d(n).template convert<Fp>([](const Rational& q) { return Fp::from_rational(q); }));
  std::vector<std::size_t> out;
  const std::size_t last = c.truncated() ? c.top() : c.top() + 1;
  for (std::size_t n = 0; n < last; ++n) out.push_back(c.dim(n) - ranks[n] - ranks[n + 1]);
  return out;
}

// ---- commands ----

void cmd_check(Ctx& cx) {
  Json j = parse_text(cx.args, "input");
  Algebra a = parse_algebra(j.at("algebra"), "/algebra", false);
  AlgebraReport ar = check_algebra(a);
  cx.certs.push_back({"algebra associative", ar.associative,
                      ar.assoc_witness ? "basis triple (" + std::to_string((*ar.assoc_witness)[0]) + "," +
                                             std::to_string((*ar.assoc_witness)[1]) + "," +
                                             std::to_string((*ar.assoc_witness)[2]) + ")"
                                       : ""});
  cx.dims["algebra"] = a.dim();
  cx.results["unital"] = ar.unital();
  cx.results["left_unital"] = ar.left_unital();
  cx.results["right_unital"] = ar.right_unital();
  if (!j.contains("coalgebra")) return;
  Coalgebra c = parse_coalgebra(j["coalgebra"], "/coalgebra", false);
  CoalgebraReport cr = check_coalgebra(c);
  cx.dims["coalgebra"] = c.dim();
  cx.certs.push_back({"coalgebra coassociative", cr.coassociative,
                      cr.coassoc_witness ? "basis element " + std::to_string(*cr.coassoc_witness) : ""});
  cx.certs.push_back({"coalgebra counital", cr.counital,
                      cr.counit_witness ? "basis element " + std::to_string(*cr.counit_witness) : ""});
  if (c.grouplike()) cx.certs.push_back({"grouplike", cr.grouplike_ok, ""});
  if (!ar.associative || !cr.ok()) return;
  // The rest needs valid structures; parse_problem re-checks and locates failures.
  try {
    Problem p = parse_problem(j);
    if (p.hopf) cx.certs.push_back({"Hopf axioms", true, ""});
    if (p.comodule_algebra) {
      cx.certs.push_back({"comodule algebra", true, ""});
      cx.dims["invariants"] = invariants(*p.comodule_algebra).base.dim();
    }
    for (const auto& v : p.comodules) cx.certs.push_back({"comodule " + v.name, true, ""});
    for (const auto& [name, v] : p.cotraces)
      cx.certs.push_back({"cotrace " + name, is_cotrace(*p.coalgebra, v), ""});
  } catch (const InputError& e) {
    cx.certs.push_back({"structure at " + e.location(), false, e.what()});
  }
}

void cmd_homology(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  TotMode mode;
  try {
    mode = parse_mode(string_arg(cx.args, "mode", "full"));
  } catch (const std::invalid_argument& e) {
    throw InputError("(mode)", e.what());
  }
  const std::size_t D = uint_arg(cx.args, "D", cx.cfg.max_degree);
  ChainComplex c = tot_cc(p.algebra, mode, D);
  cx.lap("complex");
  auto bad = c.d_squared_failure();
  cx.certs.push_back({"d∘d = 0", !bad, bad ? "degree " + std::to_string(*bad) : ""});
  cx.dims["chain"] = c.dims();
  cx.results["mode"] = mode_name(mode);
  cx.results["field"] = cx.cfg.prime ? "F_" + std::to_string(*cx.cfg.prime) : "Q";
  cx.results["homology"] = cx.cfg.prime ? homology_fp(c, *cx.cfg.prime) : homology_dims(c);
  cx.lap("ranks");
}

void cmd_cotraces(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  if (!p.coalgebra) throw InputError("/coalgebra", "this command needs a coalgebra");
  const Coalgebra& c = *p.coalgebra;
  auto basis = cotrace_basis(c);
  cx.dims["coalgebra"] = c.dim();
  cx.dims["cotraces"] = basis.size();
  Json b = Json::array();
  for (const auto& v : basis) b.push_back(vector_json(v, c.dim()));
  cx.results["basis"] = b;
  Json chars = Json::object();
  for (const auto& v : p.comodules) {
    SparseVec chi = comodule_character(c, v);
    chars[v.name] = vector_json(chi, c.dim());
    cx.certs.push_back({"χ(" + v.name + ") is a cotrace", is_cotrace(c, chi), ""});
  }
  cx.results["characters"] = chars;
  cx.results["enough_characters"] = enough_characters(c, p.comodules);
}

GaloisData galois_or_fail(Ctx& cx, const ComoduleAlgebra& ca) {
  try {
    GaloisData g = galois_data(ca);
    cx.certs.push_back({"Galois", true, ""});
    return g;
  } catch (const NotGalois& e) {
    cx.certs.push_back({"Galois", false, std::string(e.what()) + " (deficit " + std::to_string(e.deficit()) + ")"});
    throw;
  }
}

void cmd_strong_connection(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  const ComoduleAlgebra& ca = need_ca(p);
  const bool unital = !cx.args.value("non_unital", false);
  GaloisData g = galois_or_fail(cx, ca);
  cx.add(g.certificates);
  cx.add(check_translation_map(g, ca), "translation map: ");
  cx.lap("galois");
  StrongConnectionSpace space = strong_connection_space(g, ca, unital);
  cx.add(check_strong_connection(g, ca, space.particular, unital), "ℓ: ");
  cx.lap("solve");
  cx.dims["A"] = ca.adim();
  cx.dims["B"] = g.inv.base.dim();
  cx.dims["C"] = ca.cdim();
  cx.dims["A⊗_B A"] = g.quotient.dim();
  cx.dims["solution directions"] = space.directions.size();
  cx.results["unital"] = unital;
  cx.results["ell"] = matrix_json(space.particular);
}

void cmd_es_coring(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  const ComoduleAlgebra& ca = need_ca(p);
  GaloisData g = galois_or_fail(cx, ca);
  StrongConnection ell = solve_strong_connection(g, ca);
  cx.add(ell.certificates, "ℓ: ");
  ESCoring es = es_coring(g, ca, ell);
  cx.add(es.certificates, "coring: ");
  cx.lap("coring");
  const RowExtension& re = es.ring;
  cx.dims["M"] = es.basis.size();
  cx.dims["B"] = g.inv.base.dim();
  cx.dims["I"] = re.ideal_dim();
  cx.results["unitary"] = is_unitary(re);
  cx.results["left_unital"] = re.ring.left_unit().has_value();
  cx.results["right_unital"] = re.ring.right_unit().has_value();
  if (ca.hopf) {
    RowIso iso = row_iso_omega(g, ca, es);
    cx.add(iso.certificates, "M ≅ B ⊕ Ω¹: ");
    cx.dims["Ω¹ coinvariants"] = iso.omega_dim;
  }
  const std::size_t D = uint_arg(cx.args, "D", 2);
  if (is_unitary(re) && re.omega_is_zero()) {
    KernelContraction kc = kernel_contraction(re, D);
    cx.add(kc.certificates, "kernel contraction: ");
    cx.lap("contraction");
  }
}

void periodicity_certs(Ctx& cx, const Algebra& a, const CharacterClass& next, const CharacterClass& prev,
                       const std::string& prefix) {
  PeriodicityCheck pc = periodicity(a, next.cycle, prev.cycle);
  cx.certs.push_back({prefix + pc.certificate.name, pc.certificate.pass, pc.certificate.witness});
  if (pc.witness) cx.results[prefix + "S witness"] = sparse_json(*pc.witness);
}

void cmd_chern(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  auto [size, e] = parse_matrix(parse_text(cx.args, "idempotent"), p.algebra, "(idempotent)");
  const std::size_t n = uint_arg(cx.args, "n", 1);
  ChernCharacter ch;
  try {
    ch = idempotent_chern(p.algebra, size, e, n);
  } catch (const NotIdempotent& ex) {
    cx.certs.push_back({"e^2 = e", false, ex.what()});
    return;
  }
  cx.certs.push_back({"e^2 = e", true, ""});
  cx.add(ch.upper.certificates, "M_N(B): ");
  cx.add(ch.base.certificates, "B: ");
  if (n >= 1) {
    ChernCharacter prev = idempotent_chern(p.algebra, size, e, n - 1);
    periodicity_certs(cx, p.algebra, ch.base, prev.base, "B: ");
  }
  cx.lap("character");
  cx.dims["N"] = size;
  cx.results["character"] = chain_json(ch.base.cycle);
}

SparseVec resolve_cotrace(const Problem& p, const ComoduleAlgebra& ca, const std::string& name) {
  if (name == "e" || name == "grouplike") return ca.grouplike();
  for (const auto& [n, v] : p.cotraces)
    if (n == name) return v;
  std::string key = name.rfind("chi:", 0) == 0 ? name.substr(4) : name;
  for (const auto& v : p.comodules)
    if (v.name == key) return comodule_character(ca.coalg, v);
  throw InputError("(cotrace)", "unknown cotrace '" + name + "'");
}

void cmd_chern_weil(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  const ComoduleAlgebra& ca = need_ca(p);
  SparseVec c = resolve_cotrace(p, ca, string_arg(cx.args, "cotrace", "e"));
  if (!is_cotrace(ca.coalg, c)) throw InputError("(cotrace)", "not a cotrace");
  const std::size_t n = uint_arg(cx.args, "n", 1);
  GaloisData g = galois_or_fail(cx, ca);
  StrongConnection ell = solve_strong_connection(g, ca);
  ESCoring es = es_coring(g, ca, ell);
  cx.lap("coring");
  ChernCharacter ch = chern_weil(es, ca, ell.ell, c, n);
  cx.add(ch.upper.certificates, "M: ");
  cx.add(ch.base.certificates, "B: ");
  if (n >= 1) {
    ChernCharacter prev = chern_weil(es, ca, ell.ell, c, n - 1);
    periodicity_certs(cx, es.ring.ring, ch.upper, prev.upper, "M: ");
    periodicity_certs(cx, g.inv.base, ch.base, prev.base, "B: ");
  }
  cx.lap("character");
  cx.dims["M"] = es.basis.size();
  cx.dims["B"] = g.inv.base.dim();
  cx.results["character"] = chain_json(ch.base.cycle);
}

const Comodule& pick_comodule(const Problem& p, const ComoduleAlgebra& ca, const std::string& name) {
  if (p.comodules.empty()) throw InputError("/comodules", "this command needs a comodule");
  if (!name.empty()) {
    for (const auto& v : p.comodules)
      if (v.name == name) return v;
    throw InputError("(comodule)", "unknown comodule '" + name + "'");
  }
  for (const auto& v : p.comodules)
    if (comodule_character(ca.coalg, v) != ca.grouplike()) return v;
  return p.comodules.front();
}

void cmd_diagram(Ctx& cx) {
  Problem p = parse_problem(parse_text(cx.args, "input"));
  const ComoduleAlgebra& ca = need_ca(p);
  const Comodule& v = pick_comodule(p, ca, string_arg(cx.args, "comodule", ""));
  const std::size_t n = uint_arg(cx.args, "n", 1);
  GaloisData g = galois_or_fail(cx, ca);
  StrongConnection ell = solve_strong_connection(g, ca);
  FactorizationReport rep = verify_factorization(g, ca, ell.ell, v, n);
  cx.add(rep.certificates);
  cx.lap("diagram");
  cx.results["comodule"] = v.name;
  cx.results["chern_weil"] = chain_json(rep.chern_weil);
  cx.results["idempotent"] = chain_json(rep.idempotent);
  if (rep.witness) cx.results["witness"] = sparse_json(*rep.witness);
}

// ---- property runs ----

std::vector<Algebra> algebra_pool() {
  return {diagonal_algebra(1), diagonal_algebra(2), truncated_polynomial(2), diagonal_algebra(3),
          truncated_polynomial(3)};
}

SparseVec random_element(std::mt19937_64& rng, std::size_t dim) {
  std::vector<SparseVec::Term> t;
  for (std::size_t i = 0; i < dim; ++i) {
    long long x = static_cast<long long>(rng() % 5) - 2;
    if (x) t.emplace_back(i, Rational(x));
  }
  return SparseVec::from_sorted(std::move(t));
}

// γ = L·U with unipotent triangular factors, invertible for any entries.
SparseVec random_invertible(std::mt19937_64& rng, const Algebra& b) {
  Algebra m2 = matrix_algebra(b, 2);
  const std::size_t db = b.dim();
  const SparseVec& one = *b.unit();
  auto place = [&](std::size_t i, std::size_t j, const SparseVec& x) {
    return x.remap([&](Index k) { return matrix_index(2, db, i, j, static_cast<std::size_t>(k)); });
  };
  SparseVec id = place(0, 0, one) + place(1, 1, one);
  SparseVec l = id + place(1, 0, random_element(rng, db));
  SparseVec u = id + place(0, 1, random_element(rng, db));
  return m2.mul(l, u);
}

std::vector<Certificate> run_lemma(const std::string& lemma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pool = algebra_pool();
  if (lemma == "kill") return kill_contractible(random_split_sequence(seed)).certificates;
  if (lemma == "bar") {
    const Algebra& a = pool[seed % pool.size()];
    return {check_bar_contraction(a, bar_contraction(a, 3), 3)};
  }
  if (lemma == "matrix") return matrix_stability(pool[seed % 3], 2, 2).certificates;
  if (lemma == "conj") {
    const Algebra& b = pool[seed % 3];
    return conjugation_homotopy(b, 2, random_invertible(rng, b), 2).certificates;
  }
  if (lemma == "rowext") {
    auto [am, sigma] = random_augmented_module(seed);
    RowExtension re = row_extension(am, sigma);
    std::vector<Certificate> out;
    Normalization nz = normalize_cocycle(re);
    out.insert(out.end(), nz.certificates.begin(), nz.certificates.end());
    if (is_unitary(nz.normalized)) {
      auto kc = kernel_contraction(nz.normalized, 3);
      out.insert(out.end(), kc.certificates.begin(), kc.certificates.end());
      auto kr = kill_contractible(epsilon_split_sequence(nz.normalized, 3));
      out.insert(out.end(), kr.certificates.begin(), kr.certificates.end());
    }
    auto em = epsilon_chain_map(re, TotMode::Full, 3);
    out.insert(out.end(), em.certificates.begin(), em.certificates.end());
    return out;
  }
  throw InputError("(lemma)", "unknown lemma '" + lemma + "' (kill, bar, matrix, conj, rowext)");
}

void cmd_verify(Ctx& cx) {
  const std::string lemma = string_arg(cx.args, "lemma", "kill");
  const std::size_t seeds = uint_arg(cx.args, "seeds", 100);
  std::size_t passed = 0;
  for (std::size_t k = 0; k < seeds; ++k) {
    const std::uint64_t s = cx.cfg.seed + k;
    auto cs = run_lemma(lemma, s);
    Certificate c{"seed " + std::to_string(s), true, ""};
    for (const auto& x : cs)
      if (!x.pass) {
        c.pass = false;
        c.witness = x.name + (x.witness.empty() ? "" : ": " + x.witness);
        break;
      }
    passed += c.pass;
    cx.certs.push_back(c);
  }
  cx.lap("runs");
  cx.results["lemma"] = lemma;
  cx.results["passed"] = std::to_string(passed) + "/" + std::to_string(seeds);
}

const std::map<std::string, std::function<void(Ctx&)>>& commands() {
  static const std::map<std::string, std::function<void(Ctx&)>> table{
      {"check", cmd_check},       {"homology", cmd_homology}, {"cotraces", cmd_cotraces},
      {"strong-connection", cmd_strong_connection},          {"es-coring", cmd_es_coring},
      {"chern", cmd_chern},       {"chern-weil", cmd_chern_weil}, {"verify", cmd_verify},
      {"diagram", cmd_diagram}};
  return table;
}

}  // namespace

SessionConfig parse_config(const Json& j) {
  SessionConfig cfg;
  if (j.is_null()) return cfg;
  if (!j.is_object()) throw InputError("(config)", "expected an object");
  if (auto it = j.find("field"); it != j.end()) {
    if (it->is_string() && *it == "Q") {
    } else if (it->is_object() && it->contains("Fp")) {
      const Json& p = (*it)["Fp"];
      if (!p.is_number_unsigned()) throw InputError("(config)/field/Fp", "expected a prime");
      auto q = p.get<std::uint64_t>();
      bool prime = q >= 2;
      for (std::uint64_t d = 2; d * d <= q && prime; ++d) prime = q % d != 0;
      if (!prime) throw InputError("(config)/field/Fp", std::to_string(q) + " is not prime");
      cfg.prime = q;
    } else {
      throw InputError("(config)/field", "expected \"Q\" or {\"Fp\": p}");
    }
  }
  cfg.max_degree = uint_arg(j, "max_degree", cfg.max_degree);
  cfg.seed = uint_arg(j, "seed", cfg.seed);
  return cfg;
}

CommandResult run_command(const std::string& command, const Json& args, const SessionConfig& cfg) {
  auto it = commands().find(command);
  if (it == commands().end()) throw InputError("(command)", "unknown command '" + command + "'");
  Ctx cx{args, cfg};
  Json digest_src = {{"command", command}, {"args", args}, {"field", cfg.prime ? Json(*cfg.prime) : Json("Q")},
                     {"max_degree", cfg.max_degree}, {"seed", cfg.seed}};
  digest_src["args"].erase("input_name");
  digest_src["args"].erase("timings");
  try {
    it->second(cx);
  } catch (const NotGalois&) {
    // recorded as a failed certificate
  }
  CommandResult r;
  for (const auto& c : cx.certs) r.all_pass = r.all_pass && c.pass;
  r.report = {{"command", command},
              {"inputs-digest", sha256_hex(digest_src.dump())},
              {"certificates", certificates_json(cx.certs)},
              {"dims", cx.dims},
              {"results", cx.results},
              {"status", r.all_pass ? "pass" : "fail"}};
  if (args.contains("input_name")) r.report["input"] = args["input_name"];
  if (args.value("timings", false)) r.report["timings"] = cx.timings;
  return r;
}

std::string summarize(const Json& report) {
  std::ostringstream os;
  os << report.value("command", "?");
  if (report.contains("input")) os << " " << report["input"].get<std::string>();
  os << ": " << report.value("status", "?") << "\n";
  std::size_t pass = 0, total = 0;
  for (const auto& c : report["certificates"]) {
    ++total;
    if (c["pass"].get<bool>()) {
      ++pass;
      continue;
    }
    os << "  FAIL " << c["name"].get<std::string>();
    if (c.contains("witness")) os << " [" << c["witness"].get<std::string>() << "]";
    os << "\n";
  }
  os << "  certificates: " << pass << "/" << total << " pass\n";
  for (const auto& [k, v] : report["dims"].items()) os << "  dim " << k << " = " << v.dump() << "\n";
  for (const char* key : {"homology", "passed", "enough_characters", "unitary", "comodule", "field", "mode"})
    if (report["results"].contains(key)) os << "  " << key << ": " << report["results"][key].dump() << "\n";
  return os.str();
}

}  // namespace cychom
