#pragma once

#include <map>
#include <string>

#include "hypsum/rational.hpp"

namespace hypsum {

/// Symbols the right-hand sides are expressed over.
enum class ConstantSymbol { One, InvPi, PiSq };

std::string symbol_name(ConstantSymbol s);

/// Exact linear combination of {1, 1/pi, pi^2} with rational coefficients.
/// Zero coefficients are not stored.
class ConstantExpr {
 public:
  ConstantExpr() = default;
  ConstantExpr(const Rational& rational_part);
  static ConstantExpr term(ConstantSymbol s, const Rational& coeff);

  const std::map<ConstantSymbol, Rational>& terms() const { return terms_; }
  Rational coeff(ConstantSymbol s) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  ConstantExpr operator-() const;
  ConstantExpr& operator+=(const ConstantExpr& o);
  ConstantExpr& operator-=(const ConstantExpr& o);
  ConstantExpr& operator*=(const Rational& s);
  friend ConstantExpr operator+(ConstantExpr a, const ConstantExpr& b) { return a += b; }
  friend ConstantExpr operator-(ConstantExpr a, const ConstantExpr& b) { return a -= b; }
  friend ConstantExpr operator*(ConstantExpr a, const Rational& s) { return a *= s; }
  friend ConstantExpr operator*(const Rational& s, ConstantExpr a) { return a *= s; }
  friend bool operator==(const ConstantExpr& a, const ConstantExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ConstantExpr& a, const ConstantExpr& b) { return !(a == b); }

  /// Plain-text form, e.g. "8 - 16/pi".
  std::string str() const;

 private:
  std::map<ConstantSymbol, Rational> terms_;
};

/// Parses expressions over rationals and pi such as "2/pi", "pi^2/6",
/// "8 - 16/pi", "(10 - pi^2)/16". Division only by rationals or a single pi.
ConstantExpr parse_constant_expr(const std::string& input);

}  // namespace hypsum
