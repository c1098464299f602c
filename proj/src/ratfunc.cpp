#include "hypsum/ratfunc.hpp"

namespace hypsum {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = quotient(num_, g);
    den_ = quotient(den_, g);
  }
  Rational cn = num_.signed_content(), cd = den_.signed_content();
  Rational s = gcd(cn, cd);
  if (cd.sign() < 0) s = -s;
  num_ /= s;
  den_ /= s;
}

Poly RatFunc::as_poly() const {
  if (den_.degree() != 0) throw std::domain_error("RatFunc: not a polynomial");
  return num_ / den_.leading();
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
  if (is_zero()) throw std::domain_error("RatFunc: zero to negative power");
  return RatFunc(den_.pow(-e), num_.pow(-e));
}

std::optional<Rational> RatFunc::eval(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) return std::nullopt;
  return num_(x) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.degree() > 0 ? "(" + num_.str() + ")" : num_.str();
  std::string d = den_.degree() > 0 ? "(" + den_.str() + ")" : den_.str();
  return n + " / " + d;
}

}  // namespace hypsum
