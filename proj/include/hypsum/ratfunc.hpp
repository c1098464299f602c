#pragma once

#include <optional>
#include <string>

#include "hypsum/poly.hpp"

namespace hypsum {

/// Reduced rational function num/den in canonical form: gcd(num, den) = 1,
/// both are integer polynomials with coprime contents, and lc(den) > 0.
class RatFunc {
 public:
  RatFunc() : num_(Poly(0)), den_(Poly(1)) {}
  RatFunc(const Rational& c) : num_(Poly(c)), den_(Poly(1)) { canonicalize(); }
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value as a polynomial; requires den constant.
  Poly as_poly() const;

  RatFunc operator-() const { return raw(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc shift(long h) const { return RatFunc(num_.shift(h), den_.shift(h)); }
  RatFunc pow(int e) const;
  RatFunc inverse() const { return RatFunc(den_, num_); }

  /// Exact value; nullopt at a pole.
  std::optional<Rational> eval(const Rational& x) const;

  std::string str() const;

 private:
  static RatFunc raw(Poly n, Poly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
  void canonicalize();
  Poly num_, den_;
};

}  // namespace hypsum
