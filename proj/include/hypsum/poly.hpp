#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

/// Dense univariate polynomial in k over Rational. Coefficients are stored
/// low-to-high with no trailing zeros; the empty vector is the zero polynomial,
/// whose degree is the kNegInfDegree sentinel.
class Poly {
 public:
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min() / 4;

  Poly() = default;
  Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  Poly(int c) : Poly(Rational(c)) {}
  Poly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) { trim(); }
  explicit Poly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  /// The variable k.
  static Poly var() { return monomial(1, 1); }
  static Poly monomial(const Rational& c, int e);

  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of k^i (zero outside the stored range).
  const Rational& coeff(int i) const {
    static const Rational zero;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : zero;
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator/=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, int s) { return a *= Rational(s); }
  friend Poly operator*(int s, Poly a) { return a *= Rational(s); }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  /// Lexicographic-by-coefficient order on (degree, coeffs); a stable total
  /// order used to keep enumerations reproducible.
  static bool less(const Poly& a, const Poly& b);

  Poly pow(int e) const;
  Poly derivative() const;

  /// p(k+h) for integer h.
  Poly shift(long h) const;

  /// The rational s with p = s * primitive_part(p): primitive_part has integer
  /// coprime coefficients and positive leading coefficient. Zero for p = 0.
  Rational signed_content() const;
  Poly primitive_part() const { return is_zero() ? Poly() : *this / signed_content(); }
  Poly monic() const { return is_zero() ? Poly() : *this / leading(); }

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly quotient(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly remainder(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// True iff b | a exactly; on success *q receives the quotient.
bool divides(const Poly& b, const Poly& a, Poly* q = nullptr);

/// Monic gcd (gcd(0,0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Unique interpolating polynomial through distinct sample points.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Resultant in k, by exact Gaussian elimination of the Sylvester matrix.
Rational resultant(const Poly& a, const Poly& b);

/// Yun squarefree decomposition: p = leading * prod factor_i^{mult_i} with the
/// factors monic, squarefree and pairwise coprime. Requires p != 0.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p);

/// Exactly the rational roots of p (p != 0), by divisor enumeration of the
/// extreme coefficients of the primitive part.
std::set<Rational> rational_roots(const Poly& p);

/// Exactly the integer roots of p lying in [lo, hi].
std::vector<long> integer_roots_in(const Poly& p, long lo, long hi);

/// Exactly the integer roots of p (window from the Cauchy root bound).
std::vector<long> integer_roots(const Poly& p);

/// Cauchy bound: every complex root of p has |root| <= bound.
Rational root_bound(const Poly& p);

enum class ShiftDomain { NonNegative, AllIntegers };

/// All h in the domain with gcd(a(k), b(k+h)) != 1, via the resultant
/// R(h) = Res_k(a(k), b(k+h)) built by evaluation-interpolation followed by
/// integer root extraction over the root-difference window.
std::vector<long> dispersion_set(const Poly& a, const Poly& b, ShiftDomain domain);

}  // namespace hypsum
