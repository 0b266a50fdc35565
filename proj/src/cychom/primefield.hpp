#ifndef CYCHOM_PRIMEFIELD_HPP
#define CYCHOM_PRIMEFIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cychom/rational.hpp"

namespace cychom {

/// Residue modulo a prime p. The modulus is a per-thread session setting
/// installed with PrimeFieldScope; values of different moduli must never meet.
class Fp {
 public:
  Fp() noexcept : v_(0) {}
  Fp(long long x) : v_(reduce_signed(x)) {}  // NOLINT(google-explicit-constructor)

  /// Image of a rational under Z_(p) -> F_p. Throws std::domain_error if p
  /// divides the denominator.
  static Fp from_rational(const Rational& q);

  static std::uint64_t modulus() { return modulus_; }
  static void set_modulus(std::uint64_t p);

  [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return v_ == 1; }
  [[nodiscard]] std::uint64_t value() const noexcept { return v_; }
  [[nodiscard]] std::string str() const { return std::to_string(v_); }

  Fp& operator+=(const Fp& o) noexcept {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Fp& operator-=(const Fp& o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) noexcept {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % modulus_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) noexcept { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const noexcept {
    Fp r;
    r.v_ = v_ == 0 ? 0 : modulus_ - v_;
    return r;
  }
  friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) noexcept { return a.v_ != b.v_; }

  [[nodiscard]] Fp inverse() const;

  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }

 private:
  static std::uint64_t reduce_signed(long long x);

  std::uint64_t v_;
  static thread_local std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Installs a prime modulus for the current thread and restores the previous
/// one on destruction.
class PrimeFieldScope {
 public:
  explicit PrimeFieldScope(std::uint64_t p) : saved_(Fp::modulus()) { Fp::set_modulus(p); }
  ~PrimeFieldScope() { Fp::set_modulus(saved_); }
  PrimeFieldScope(const PrimeFieldScope&) = delete;
  PrimeFieldScope& operator=(const PrimeFieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace cychom

#endif
