#include "cychom/io.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace cychom {

namespace {

const Json& member(const Json& j, const char* key, const std::string& loc) {
  if (!j.is_object()) throw InputError(loc, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(loc, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t parse_index(const Json& j, std::size_t bound, const std::string& loc) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(loc, "expected a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw InputError(loc, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return v;
}

std::size_t parse_dim(const Json& j, const std::string& loc) {
  const Json& d = member(j, "dim", loc);
  if (!d.is_number_integer() || d.get<long long>() < 0) throw InputError(loc + "/dim", "expected a non-negative integer");
  return d.get<std::size_t>();
}

BasedSpace parse_space(const Json& j, std::size_t dim, const std::string& loc, const std::string& prefix) {
  auto it = j.find("basis");
  if (it == j.end()) return BasedSpace::numbered(dim, prefix);
  if (!it->is_array() || it->size() != dim) throw InputError(loc + "/basis", "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(*it)[i].is_string()) throw InputError(loc + "/basis/" + std::to_string(i), "expected a string");
    labels.push_back((*it)[i].get<std::string>());
  }
  return BasedSpace(std::move(labels));
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> parse_table(const Json& j, std::size_t d0,
                                                                                      std::size_t d1, std::size_t d2,
                                                                                      const std::string& loc) {
  if (!j.is_array()) throw InputError(loc, "expected an array of [i, j, k, value]");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = loc + "/" + std::to_string(r);
    const Json& e = j[r];
    if (!e.is_array() || e.size() != 4) throw InputError(at, "expected [i, j, k, value]");
    out.emplace_back(parse_index(e[0], d0, at + "/0"), parse_index(e[1], d1, at + "/1"), parse_index(e[2], d2, at + "/2"),
                     parse_rational(e[3], at + "/3"));
  }
  return out;
}

}  // namespace

Rational parse_rational(const Json& j, const std::string& loc) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(loc, "expected a rational literal as a string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(loc, e.what());
  }
}

SparseVec parse_vector(const Json& j, std::size_t dim, const std::string& loc) {
  std::vector<SparseVec::Term> terms;
  if (j.is_object()) {
    const Json& s = member(j, "sparse", loc);
    if (!s.is_array()) throw InputError(loc + "/sparse", "expected an array");
    for (std::size_t r = 0; r < s.size(); ++r) {
      const std::string at = loc + "/sparse/" + std::to_string(r);
      if (!s[r].is_array() || s[r].size() != 2) throw InputError(at, "expected [index, value]");
      terms.emplace_back(parse_index(s[r][0], dim, at + "/0"), parse_rational(s[r][1], at + "/1"));
    }
    return SparseVec::from_terms(std::move(terms));
  }
  if (!j.is_array() || j.size() != dim) throw InputError(loc, "expected a vector of length " + std::to_string(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    Rational x = parse_rational(j[i], loc + "/" + std::to_string(i));
    if (!x.is_zero()) terms.emplace_back(i, x);
  }
  return SparseVec::from_sorted(std::move(terms));
}

Algebra parse_algebra(const Json& j, const std::string& loc, bool validate) {
  const std::size_t dim = parse_dim(j, loc);
  BasedSpace space = parse_space(j, dim, loc, "e");
  auto mult = parse_table(member(j, "mult", loc), dim, dim, dim, loc + "/mult");
  if (!validate) {
    std::vector<SparseVec> products(dim * dim);
    for (const auto& [i, k, l, x] : mult) products[i * dim + k].add_scaled(SparseVec::unit(l), x);
    return Algebra::unchecked(std::move(space), std::move(products));
  }
  std::optional<SparseVec> unit;
  if (auto it = j.find("unit"); it != j.end()) unit = parse_vector(*it, dim, loc + "/unit");
  try {
    return Algebra::from_table(std::move(space), mult, unit);
  } catch (const std::invalid_argument& e) {
    throw InputError(loc, e.what());
  }
}

Coalgebra parse_coalgebra(const Json& j, const std::string& loc, bool validate) {
  const std::size_t dim = parse_dim(j, loc);
  BasedSpace space = parse_space(j, dim, loc, "c");
  auto comult = parse_table(member(j, "comult", loc), dim, dim, dim, loc + "/comult");
  SparseVec counit = parse_vector(member(j, "counit", loc), dim, loc + "/counit");
  std::optional<SparseVec> e;
  if (auto it = j.find("grouplike"); it != j.end()) e = parse_vector(*it, dim, loc + "/grouplike");
  if (!validate) {
    std::vector<SparseVec> cols(dim);
    for (const auto& [i, k, l, x] : comult) cols[i].add_scaled(SparseVec::unit(k * dim + l), x);
    return Coalgebra::unchecked(std::move(space), std::move(cols), std::move(counit), std::move(e));
  }
  try {
    return Coalgebra::from_table(std::move(space), comult, counit, e);
  } catch (const std::invalid_argument& ex) {
    throw InputError(loc, ex.what());
  }
}

Problem parse_problem(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  Problem p{j.value("name", std::string()), parse_algebra(member(j, "algebra", ""), "/algebra"), {}, {}, {}, {}, {}};
  if (auto it = j.find("coalgebra"); it != j.end()) {
    p.coalgebra = parse_coalgebra(*it, "/coalgebra");
    const std::size_t dc = p.coalgebra->dim();
    if (it->contains("mult")) {
      Json alg = {{"dim", dc}, {"mult", (*it)["mult"]}};
      if (it->contains("basis")) alg["basis"] = (*it)["basis"];
      if (it->contains("unit")) alg["unit"] = (*it)["unit"];
      Algebra ha = parse_algebra(alg, "/coalgebra");
      SparseMat s(dc, dc);
      if (auto st = it->find("antipode"); st != it->end()) {
        if (!st->is_array()) throw InputError("/coalgebra/antipode", "expected an array of [i, j, value]");
        std::vector<std::vector<SparseVec::Term>> cols(dc);
        for (std::size_t r = 0; r < st->size(); ++r) {
          const std::string at = "/coalgebra/antipode/" + std::to_string(r);
          const Json& e = (*st)[r];
          if (!e.is_array() || e.size() != 3) throw InputError(at, "expected [i, j, value]");
          cols[parse_index(e[0], dc, at + "/0")].emplace_back(parse_index(e[1], dc, at + "/1"),
                                                             parse_rational(e[2], at + "/2"));
        }
        std::vector<SparseVec> vs;
        for (auto& t : cols) vs.push_back(SparseVec::from_terms(std::move(t)));
        s = SparseMat::from_columns(dc, std::move(vs));
      } else {
        throw InputError("/coalgebra", "a coalgebra with 'mult' needs an 'antipode'");
      }
      HopfAlgebra h{std::move(ha), *p.coalgebra, std::move(s)};
      if (!h.alg.unit()) throw InputError("/coalgebra", "Hopf algebra has no unit");
      h.coalg.set_grouplike(*h.alg.unit());
      HopfReport rep = check_hopf(h);
      if (!rep.ok()) throw InputError("/coalgebra", "Hopf axioms fail: " + rep.witness.value_or("unknown"));
      p.coalgebra = h.coalg;
      p.hopf = std::move(h);
    }
  }
  if (auto it = j.find("coaction"); it != j.end()) {
    if (!p.coalgebra) throw InputError("/coaction", "a coaction needs a coalgebra");
    auto rho = parse_table(*it, p.algebra.dim(), p.algebra.dim(), p.coalgebra->dim(), "/coaction");
    try {
      p.comodule_algebra = comodule_algebra(p.algebra, *p.coalgebra, rho, p.hopf, p.name);
    } catch (const std::invalid_argument& e) {
      throw InputError("/coaction", e.what());
    }
  }
  if (auto it = j.find("comodules"); it != j.end()) {
    if (!p.coalgebra) throw InputError("/comodules", "comodules need a coalgebra");
    if (!it->is_array()) throw InputError("/comodules", "expected an array");
    const std::size_t dc = p.coalgebra->dim();
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string loc = "/comodules/" + std::to_string(r);
      const Json& c = (*it)[r];
      const std::size_t n = parse_dim(c, loc);
      Comodule v{n, std::vector<SparseVec>(n * n), c.value("name", "V" + std::to_string(r))};
      const Json& m = member(c, "matrix", loc);
      if (!m.is_array()) throw InputError(loc + "/matrix", "expected an array of [i, j, C-vector]");
      for (std::size_t q = 0; q < m.size(); ++q) {
        const std::string at = loc + "/matrix/" + std::to_string(q);
        if (!m[q].is_array() || m[q].size() != 3) throw InputError(at, "expected [i, j, C-vector]");
        std::size_t a = parse_index(m[q][0], n, at + "/0"), b = parse_index(m[q][1], n, at + "/1");
        v.matrix[a * n + b] = parse_vector(m[q][2], dc, at + "/2");
      }
      if (auto bad = comodule_violation(*p.coalgebra, v)) throw InputError(loc, *bad);
      p.comodules.push_back(std::move(v));
    }
  }
  if (auto it = j.find("cotraces"); it != j.end()) {
    if (!p.coalgebra) throw InputError("/cotraces", "cotraces need a coalgebra");
    if (!it->is_object()) throw InputError("/cotraces", "expected an object of named vectors");
    for (const auto& [name, v] : it->items())
      p.cotraces.emplace_back(name, parse_vector(v, p.coalgebra->dim(), "/cotraces/" + name));
  }
  return p;
}

std::pair<std::size_t, SparseVec> parse_matrix(const Json& j, const Algebra& b, const std::string& loc) {
  const Json& sz = member(j, "size", loc);
  if (!sz.is_number_integer() || sz.get<long long>() <= 0) throw InputError(loc + "/size", "expected a positive integer");
  const auto n = sz.get<std::size_t>();
  const Json& es = member(j, "entries", loc);
  if (!es.is_array()) throw InputError(loc + "/entries", "expected an array of [i, j, B-vector]");
  SparseVec out;
  for (std::size_t r = 0; r < es.size(); ++r) {
    const std::string at = loc + "/entries/" + std::to_string(r);
    if (!es[r].is_array() || es[r].size() != 3) throw InputError(at, "expected [i, j, B-vector]");
    std::size_t i = parse_index(es[r][0], n, at + "/0"), k = parse_index(es[r][1], n, at + "/1");
    for (const auto& [q, x] : parse_vector(es[r][2], b.dim(), at + "/2"))
      out.add_scaled(SparseVec::unit(matrix_index(n, b.dim(), i, k, q)), x);
  }
  return {n, out};
}

Json rational_json(const Rational& q) { return q.str(); }

Json vector_json(const SparseVec& v, std::size_t dim) {
  Json a = Json::array();
  for (std::size_t i = 0; i < dim; ++i) a.push_back(v.get(i).str());
  return a;
}

Json algebra_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, x] : a.mul_basis(i, j)) mult.push_back({i, j, k, x.str()});
  Json out = {{"dim", n}, {"basis", a.space().labels()}, {"mult", mult}};
  if (a.unit()) out["unit"] = vector_json(*a.unit(), n);
  return out;
}

Json coalgebra_json(const Coalgebra& c, const std::optional<HopfAlgebra>& hopf) {
  const std::size_t n = c.dim();
  Json comult = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [code, x] : c.comult_basis(i)) comult.push_back({i, code / n, code % n, x.str()});
  Json out = {{"dim", n}, {"basis", c.space().labels()}, {"comult", comult}, {"counit", vector_json(c.counit(), n)}};
  if (c.grouplike()) out["grouplike"] = vector_json(*c.grouplike(), n);
  if (hopf) {
    Json a = algebra_json(hopf->alg);
    out["mult"] = a["mult"];
    if (a.contains("unit")) out["unit"] = a["unit"];
    Json s = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, x] : hopf->antipode.column(i)) s.push_back({i, k, x.str()});
    out["antipode"] = s;
  }
  return out;
}

Json comodule_json(const Comodule& v, std::size_t cdim) {
  Json m = Json::array();
  for (std::size_t i = 0; i < v.dim; ++i)
    for (std::size_t j = 0; j < v.dim; ++j)
      if (!v.entry(i, j).is_zero()) m.push_back({i, j, vector_json(v.entry(i, j), cdim)});
  return {{"name", v.name}, {"dim", v.dim}, {"matrix", m}};
}

Json problem_json(const std::string& name, const ComoduleAlgebra& ca, const std::vector<Comodule>& comodules) {
  const std::size_t dc = ca.cdim();
  Json rho = Json::array();
  for (std::size_t i = 0; i < ca.adim(); ++i)
    for (const auto& [code, x] : ca.coaction.column(i)) rho.push_back({i, code / dc, code % dc, x.str()});
  Json cs = Json::array();
  for (const auto& v : comodules) cs.push_back(comodule_json(v, dc));
  return {{"name", name},
          {"algebra", algebra_json(ca.alg)},
          {"coalgebra", coalgebra_json(ca.coalg, ca.hopf)},
          {"coaction", rho},
          {"comodules", cs}};
}

Json certificates_json(const std::vector<Certificate>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json e = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    out.push_back(e);
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace cychom
