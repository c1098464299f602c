#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypsum {

using Int = mpz_class;

/// Exact rational scalar over GMP. Always in canonical form:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return wrap(::abs(v_)); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return wrap(1 / v_);
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: zero to negative power");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    return e > 0 ? Rational(n, d) : Rational(d, n);
  }

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Int n, d;
  mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rational(n, d);
}

constexpr long kValuationInfinity = std::numeric_limits<long>::max() / 4;

/// p-adic valuation of a rational; +infinity sentinel for zero.
inline long padic_valuation(const Rational& x, const Int& p) {
  if (x.is_zero()) return kValuationInfinity;
  Int tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

}  // namespace hypsum
