#include "cychom/primefield.hpp"

namespace cychom {

thread_local std::uint64_t Fp::modulus_ = 2147483647ULL;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void Fp::set_modulus(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus too large");
  modulus_ = p;
}

std::uint64_t Fp::reduce_signed(long long x) {
  long long m = static_cast<long long>(modulus_);
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

Fp Fp::from_rational(const Rational& q) {
  mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class n = q.numerator() % p;
  mpz_class d = q.denominator() % p;
  if (n < 0) n += p;
  if (d == 0)
    throw std::domain_error("denominator of " + q.str() + " vanishes mod " + std::to_string(modulus_));
  Fp num, den;
  num.v_ = n.get_ui();
  den.v_ = d.get_ui();
  return num / den;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero residue");
  // Fermat: v^(p-2).
  std::uint64_t e = modulus_ - 2;
  Fp base = *this, acc = Fp::one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace cychom
