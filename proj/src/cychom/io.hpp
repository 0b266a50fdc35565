#ifndef CYCHOM_IO_HPP
#define CYCHOM_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cychom/chern.hpp"
#include "json.hpp"

namespace cychom {

using Json = nlohmann::json;

/// Malformed input; location is a JSON pointer into the document.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& location, const std::string& what)
      : std::runtime_error(location + ": " + what), location_(location) {}
  [[nodiscard]] const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// A problem file: an algebra, optionally a coalgebra (Hopf when it carries
/// mult/unit/antipode), a coaction making the algebra a comodule algebra,
/// comodules and named cotraces.
struct Problem {
  std::string name;
  Algebra algebra;
  std::optional<Coalgebra> coalgebra;
  std::optional<HopfAlgebra> hopf;
  std::optional<ComoduleAlgebra> comodule_algebra;
  std::vector<Comodule> comodules;
  std::vector<std::pair<std::string, SparseVec>> cotraces;
};

Rational parse_rational(const Json& j, const std::string& loc);
/// Dense array of rationals of length dim, or {"sparse": [[i, x], ...]}.
SparseVec parse_vector(const Json& j, std::size_t dim, const std::string& loc);
/// With validate = false the axioms are not checked (for the check command).
Algebra parse_algebra(const Json& j, const std::string& loc, bool validate = true);
Coalgebra parse_coalgebra(const Json& j, const std::string& loc, bool validate = true);
Problem parse_problem(const Json& j);
/// Matrix over B given as {size, entries: [[i, j, B-vector], ...]}; returns
/// (size, element of matrix_algebra(b, size)).
std::pair<std::size_t, SparseVec> parse_matrix(const Json& j, const Algebra& b, const std::string& loc);

Json rational_json(const Rational& q);
Json vector_json(const SparseVec& v, std::size_t dim);
Json algebra_json(const Algebra& a);
Json coalgebra_json(const Coalgebra& c, const std::optional<HopfAlgebra>& hopf = std::nullopt);
Json comodule_json(const Comodule& v, std::size_t cdim);
/// Problem file for a comodule algebra with its comodules.
Json problem_json(const std::string& name, const ComoduleAlgebra& ca, const std::vector<Comodule>& comodules);
Json certificates_json(const std::vector<Certificate>& cs);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace cychom

#endif
