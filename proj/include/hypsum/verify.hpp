#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsum/forge.hpp"

namespace hypsum {

/// Rational pi approximation with certified error < 10^-decimal_digits,
/// computed from Machin's arctangent formula.
Rational pi_approx(int decimal_digits);

/// Caches a pi approximation at a fixed precision.
class PrecisionContext {
 public:
  explicit PrecisionContext(int decimal_digits);
  int digits() const { return digits_; }
  const Rational& pi() const { return pi_; }

  /// Exact evaluation of a constant expression with the cached pi.
  Rational eval(const ConstantExpr& e) const;

 private:
  int digits_;
  Rational pi_;
};

/// Exact check of the telescoping identity
///   base_scale * c_prim + multiplier = G(k+1) * ratio - G(k).
bool check_telescoping(const ForgedIdentity& identity);

struct NumericReport {
  Rational partial_sum;
  Rational target;
  Rational abs_error;
  Rational bound;  // tail bound + pi slack actually used
  bool tail_bound_certified = false;
  bool pass = false;
};

/// Exact partial sum over [identity.start, N] against the rhs evaluated with
/// ctx; passes when |sum - target| < tail_bound(N) + 10^(2-digits).
NumericReport numeric_verify(const ForgedIdentity& identity, long N, const PrecisionContext& ctx);

/// Certified bound on |sum_{k>N} s_k| for the summand s_k = mult(k) * term_k.
/// Covers |rho| < 1 (geometric) and rho = -1 with eventually decreasing
/// magnitudes (alternating remainder); nullopt when no certificate applies.
std::optional<Rational> tail_bound(const HyperTerm& term, const RatFunc& multiplier, long N);

/// (-1/p) = (-1)^((p-1)/2) for odd prime p.
int legendre_minus_one(const Int& p);

/// Target value of a congruence: sum of coeff * p^p_power * (-1/p)?^ * base^(p-1)?.
struct CongruenceTarget {
  struct Term {
    Rational coeff;
    int p_power = 0;
    bool legendre_factor = false;
    std::optional<Int> base_power;  // base of base^(p-1)
  };
  std::vector<Term> terms;

  Rational eval(const Int& p) const;
};

/// Exact check that sum_{k=start}^{(p-1)/2} multiplier(k) * t_k is congruent
/// to target(p) modulo p^mod_power (p-adic valuation of the difference).
/// Rejects if any summand has p in its denominator.
bool congruence_check(const HyperTerm& term, const RatFunc& multiplier, const Int& p,
                      int mod_power, const CongruenceTarget& target);

/// Morley: C(p-1, (p-1)/2) == (-1)^((p-1)/2) * 2^(2p-2) (mod p^3), p > 3.
bool morley_fixture(const Int& p);

bool is_prime(const Int& p);

}  // namespace hypsum
