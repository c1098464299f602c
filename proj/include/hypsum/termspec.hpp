#pragma once

#include <string>
#include <vector>

#include "hypsum/gosper.hpp"
#include "hypsum/verify.hpp"

namespace hypsum {

/// slope * k + intercept with integer slope (so binomial ratios stay rational).
struct LinearForm {
  Rational slope;
  Rational intercept;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  Poly poly() const { return Poly::monomial(slope, 1) + Poly(intercept); }
  Rational at(long k) const { return slope * Rational(k) + intercept; }
};

/// One multiplicative factor of a term specification.
struct TermFactor {
  enum class Kind { Binomial, Polynomial, Geometric, Rising, Factorial };
  Kind kind = Kind::Polynomial;
  LinearForm upper, lower;  // Binomial
  Poly poly;                // Polynomial
  Rational base;            // Geometric base / Rising offset
  int exponent = 1;
  friend bool operator==(const TermFactor&, const TermFactor&) = default;
};

/// Parsed term: product of factors, plus the series start index.
struct TermSpec {
  std::vector<TermFactor> factors;
  long start = 0;
  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

/// Parses the term DSL:
///   expr   := term (('+'|'-') term)*          (addition only between plain
///   term   := unary (('*'|'/') unary)*         rational-function parts)
///   unary  := '-'* power
///   power  := atom ('^' (int | 'k'))?          (^k needs a constant base)
///   atom   := int | int 'k' | 'k' | 'k!' | 'binom(' lin ',' lin ')'
///           | 'rising(' rat ')' | '(' expr ')'
/// Errors carry the offending position.
TermSpec parse_term(const std::string& input, long start = 0);

/// Deterministic rendering; parse_term(render_term(s)) == s structurally.
std::string render_term(const TermSpec& spec);

/// Consecutive-ratio contribution of one factor (exponent not applied).
RatFunc factor_ratio(const TermFactor& f);

/// Exact value of one factor at index k (exponent not applied).
Rational factor_value(const TermFactor& f, long k);

/// Assembles the hypergeometric term; validates ratio regularity and a
/// nonzero exactly-evaluable initial value.
HyperTerm build_term(const TermSpec& spec);

/// Parses a plain rational function / polynomial in k (no special factors).
RatFunc parse_ratfunc(const std::string& input);
Poly parse_poly(const std::string& input);

/// Parses congruence targets such as "p*(-1/p)", "-p*(-1/p)+p*8^(p-1)",
/// "p^2 - p*(-1/p)".
CongruenceTarget parse_congruence_target(const std::string& input);

}  // namespace hypsum
