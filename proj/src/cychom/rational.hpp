#ifndef CYCHOM_RATIONAL_HPP
#define CYCHOM_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cychom {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline;
/// anything larger spills into a heap-allocated GMP rational. The two
/// representations are never mixed for the same value, so equality can
/// compare representations directly.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {  // NOLINT(google-explicit-constructor)
    if (n <= -kSmallLimit || n >= kSmallLimit) assign_from_wide(n, 1);
  }
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.den_ = 1;
    o.num_ = 0;
  }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational() { release(); }

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return den_ != 0; }
  [[nodiscard]] bool is_integer() const;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string str() const;

  /// Numerator and denominator as arbitrary-precision integers.
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  [[nodiscard]] Rational inverse() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

 private:
  static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

  void release() noexcept;
  void assign_from_wide(__int128 n, __int128 d);
  void assign_big(mpq_class q);
  const mpq_class& big() const { return *reinterpret_cast<const mpq_class*>(num_); }

  // Small form: den_ > 0 and num_ is the numerator.
  // Big form: den_ == 0 and num_ carries an owned mpq_class*.
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace cychom

#endif
