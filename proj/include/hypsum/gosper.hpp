#pragma once

#include <optional>
#include <set>
#include <string>

#include "hypsum/ratfunc.hpp"

namespace hypsum {

/// A hypergeometric term, given by its consecutive ratio t_{k+1}/t_k, a start
/// index and the exact value at the start index. The ratio must be defined and
/// nonzero at every integer k >= start, and the initial value nonzero.
struct HyperTerm {
  RatFunc ratio;
  long start = 0;
  Rational initial = Rational(1);
  std::string label;

  HyperTerm() = default;
  HyperTerm(RatFunc ratio_, long start_, Rational initial_, std::string label_ = {});

  /// t_k for k >= start, by exact ratio accumulation.
  Rational eval(long k) const;

  /// The term r(k) * t_k (ratio and initial adjusted; r must be finite and
  /// nonzero on [start, infinity)).
  HyperTerm scaled_by(const RatFunc& r) const;
};

/// Triple (a, b, c) with t_{k+1}/t_k = a/b * c(k+1)/c(k) and
/// gcd(a(k), b(k+h)) = 1 for all h >= 0. Normalization: c monic; a and b are
/// integer polynomials with coprime contents and lc(b) > 0.
struct GosperRep {
  Poly a, b, c;

  RatFunc ratio() const { return RatFunc(a, b) * RatFunc(c.shift(1), c); }
};

/// Telescoping certificate: the antidifference is z_k = multiplier(k) * t_k.
struct Certificate {
  RatFunc multiplier;
};

/// Solution of the parametrized Gosper equation: the polynomial x together
/// with the values assigned to the unknown block a_0..a_m.
struct ParamSolution {
  Poly x;
  std::vector<Rational> unknowns;

  Poly p() const {
    std::vector<Rational> v(unknowns);
    return Poly(std::move(v));
  }
};

/// Gosper representation of a nonzero consecutive ratio.
GosperRep gosper_representation(const RatFunc& ratio);

/// Candidate degrees for polynomial solutions x of
/// a(k) x(k+1) - b(k-1) x(k) = rhs with deg rhs = rhs_degree.
/// The solver uses the maximum of the set as its ansatz degree.
std::set<int> x_degree_candidates(const Poly& a, const Poly& b, int rhs_degree);

/// Decides the Gosper equation a x(k+1) - b(k-1) x(k) = c for the given
/// representation. nullopt means "not summable" (a decision, not an error).
std::optional<Certificate> solve_gosper(const GosperRep& rep);

/// Finds x and a_0..a_m with
///   A(k) x(k+1) - B(k-1) x(k) = fixed_rhs(k) + param_weight(k) * (a_0 + ... + a_m k^m)
/// by one linear solve; deterministic via RREF with unknown order
/// [x_0..x_N, a_0..a_m] and free variables set to zero. When homogeneous_pick
/// is set and that solution has p = 0, single free variables are tried in
/// order until p != 0.
std::optional<ParamSolution> solve_parametrized(const Poly& A, const Poly& B,
                                                const Poly& fixed_rhs, const Poly& param_weight,
                                                int m, bool homogeneous_pick = false);

}  // namespace hypsum
