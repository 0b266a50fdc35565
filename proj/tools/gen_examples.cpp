// Writes the bundled problem files into the directory given as argv[1].
#include <fstream>
#include <iostream>

#include "cychom/io.hpp"

using namespace cychom;

namespace {

void write(const std::string& dir, const std::string& name, const Json& j) {
  std::ofstream out(dir + "/" + name);
  out << j.dump(2) << "\n";
}

SparseVec delta(std::size_t i, long long x = 1) { return SparseVec::unit(i, Rational(x)); }

// Characters g ↦ ±1 of a group given as grouplikes of k^G.
Comodule trivial_line(std::size_t order) {
  SparseVec e;
  for (std::size_t g = 0; g < order; ++g) e += delta(g);
  return line_comodule(e, "trivial");
}

Comodule sign_line(const Group& grp) {
  // sign is -1 exactly on elements of order 2 for ℤ/2 and S3
  SparseVec s;
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const bool involution = g != grp.identity() && grp.mul(g, g) == grp.identity();
    s += delta(g, involution ? -1 : 1);
  }
  return line_comodule(s, "sign");
}

// c_xy = δ_{x y⁻¹}
Comodule regular(const Group& grp) {
  const std::size_t n = grp.order();
  Comodule v{n, std::vector<SparseVec>(n * n), "regular"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) v.matrix[x * n + y] = delta(grp.mul(x, grp.inverse(y)));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_examples DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  write(dir, "q.json", Json{{"name", "Q"}, {"algebra", algebra_json(diagonal_algebra(1))}});
  write(dir, "k2.json", Json{{"name", "k^2"}, {"algebra", algebra_json(diagonal_algebra(2))}});

  Group z2 = Group::cyclic(2);
  std::vector<Comodule> z2c{trivial_line(2), sign_line(z2)};
  write(dir, "kz2.json", problem_json("k^Z2 over itself", hopf_self_coaction(z2), z2c));
  write(dir, "z4-over-z2.json", problem_json("k^Z4 over k^Z2", z4_over_z2(), z2c));
  write(dir, "trivial-bundle-b2.json", problem_json("k^2 ⊗ k^Z2", trivial_bundle(diagonal_algebra(2), z2), z2c));
  Group s3 = Group::symmetric3();
  write(dir, "ks3.json",
        problem_json("k^S3 over itself", hopf_self_coaction(s3), {trivial_line(6), sign_line(s3), regular(s3)}));

  Json idem = {{"size", 2}, {"entries", Json::array({Json::array({0, 0, Json::array({"1"})})})}};
  write(dir, "idempotent-rank1.json", idem);
  Json idem_conj = {{"size", 2},
                    {"entries", Json::array({Json::array({0, 0, Json::array({"1"})}),
                                             Json::array({0, 1, Json::array({"-1"})})})}};
  write(dir, "idempotent-rank1-conj.json", idem_conj);
  return 0;
}
