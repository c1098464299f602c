#pragma once

#include <optional>
#include <vector>

#include "hypsum/gosper.hpp"

namespace hypsum {

/// Structural report for a Gosper representation: u(k) = a(k) - b(k-1),
/// d = max(deg u, deg a - 1), the degeneration flag, the degree upper bound
/// B on minimal multipliers, and the lower bound when it applies.
///
/// upper_B is always the case-split value (d or d+1); when the pair is
/// shift-free the sharper bound d is reported separately as remark_bound.
struct BoundReport {
  Poly u;
  int d = 0;
  bool degenerated = false;
  bool shift_free = false;
  int upper_B = 0;
  std::optional<int> remark_bound;
  std::optional<int> lower_bound;
  bool lower_bound_applicable = false;
};

/// Denominator candidate with the source factors that produced it.
struct DenominatorCandidate {
  struct Provenance {
    enum class Source { AShift, BShift, CPart };
    Source source;
    long shift = 0;
    Poly factor;
    int multiplicity = 1;
  };
  Poly q;
  std::vector<Provenance> provenance;
};

/// Which hypotheses of the denominator theorem hold for q against rep.
struct DenominatorConditions {
  bool shift_coprime = false;   // gcd(q(k), a(k-1-h)) = gcd(q(k), b(k+h)) = 1, h >= 0
  bool coprime_with_c = false;  // gcd(q(k), c(k)) = 1
  bool self_shift_coprime = false;  // gcd(q(k), q(k+1+h)) = 1, h >= 0
  bool all() const { return shift_coprime && coprime_with_c && self_shift_coprime; }
};

BoundReport degree_report(const GosperRep& rep);

/// A nonzero p of minimal degree <= upper_B with p * t summable, found by
/// iterating the target degree and solving the homogeneous parametrized
/// equation. Returned in primitive form with positive leading coefficient.
Poly minimal_multiplier(const GosperRep& rep);

/// True unless the lower-bound theorem applies and deg p violates it.
bool lower_bound_check(const GosperRep& rep, const Poly& p);

/// All products of atomic factors of a(k-1-h), b(k+h) (0 <= h <= max_shift)
/// and c(k), with per-factor multiplicity up to source multiplicity + 1 and
/// total degree <= max_total_degree; deduplicated, ordered by
/// (degree, coefficients).
std::vector<DenominatorCandidate> candidate_denominators(const GosperRep& rep,
                                                         int max_total_degree, int max_shift);

DenominatorConditions theorem_den_conditions(const Poly& q, const GosperRep& rep);

}  // namespace hypsum
