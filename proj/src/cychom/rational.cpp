#include "cychom/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cychom {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_wide(__int128 v) {
  const bool neg = v < 0;
  u128 m = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(0), den_(1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  assign_from_wide(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c(q);
  c.canonicalize();
  assign_big(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (den_ == 0) num_ = reinterpret_cast<std::intptr_t>(new mpq_class(o.big()));
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.den_ == 0) {
    auto* p = new mpq_class(o.big());
    release();
    num_ = reinterpret_cast<std::intptr_t>(p);
    den_ = 0;
  } else {
    release();
    num_ = o.num_;
    den_ = o.den_;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  release();
  num_ = o.num_;
  den_ = o.den_;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

void Rational::release() noexcept {
  if (den_ == 0) {
    delete reinterpret_cast<mpq_class*>(num_);
    num_ = 0;
    den_ = 1;
  }
}

void Rational::assign_from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    release();
    num_ = 0;
    den_ = 1;
    return;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n > -kSmallLimit && n < kSmallLimit && d < kSmallLimit) {
    release();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  mpq_class q(mpz_from_wide(n), mpz_from_wide(d));
  assign_big(std::move(q));
}

void Rational::assign_big(mpq_class q) {
  // Demote to the inline form whenever the canonical value fits.
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    std::int64_t nn = static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t()));
    std::int64_t dd = static_cast<std::int64_t>(mpz_get_si(d.get_mpz_t()));
    release();
    num_ = nn;
    den_ = dd;
    return;
  }
  auto* p = new mpq_class(std::move(q));
  release();
  num_ = reinterpret_cast<std::intptr_t>(p);
  den_ = 0;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(ns);
  trim(ds);
  if (!valid_int(ns) || !valid_int(ds) || ds[0] == '-')
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (ns[0] == '+') ns.erase(ns.begin());
  if (ds[0] == '+') ds.erase(ds.begin());
  mpz_class n(ns, 10), d(ds, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  r.assign_big(std::move(q));
  return r;
}

int Rational::sign() const noexcept {
  if (den_ == 0) return sgn(big());
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (den_ == 0) return big().get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return big();
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

mpz_class Rational::numerator() const {
  if (den_ == 0) return big().get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (den_ == 0) return big().get_den();
  return mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (den_ == 0) return big().get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (o.num_ == 0) return *this;
    if (den_ == o.den_) {
      assign_from_wide(static_cast<__int128>(num_) + o.num_, den_);
    } else {
      __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
      __int128 d = static_cast<__int128>(den_) * o.den_;
      assign_from_wide(n, d);
    }
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (o.num_ == 0) return *this;
    if (den_ == o.den_) {
      assign_from_wide(static_cast<__int128>(num_) - o.num_, den_);
    } else {
      __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
      __int128 d = static_cast<__int128>(den_) * o.den_;
      assign_from_wide(n, d);
    }
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (num_ == 0) return *this;
    if (o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      assign_from_wide(static_cast<__int128>(num_) * o.num_, 1);
      return *this;
    }
    assign_from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  if (den_ != 0 && o.den_ != 0) {
    assign_from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  if (den_ != 0) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational r;
  r.assign_big(mpq_class(-big()));
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(1) / *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ != 0 || b.den_ != 0) return false;  // canonical forms differ in size
  return a.big() == b.big();
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0)
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace cychom
