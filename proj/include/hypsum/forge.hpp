#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsum/bounds.hpp"
#include "hypsum/constants.hpp"

namespace hypsum {

/// A known series: sum_{k >= term.start} term_k = sum.
struct BaseIdentity {
  HyperTerm term;
  ConstantExpr sum;
};

/// A forged series sum_{k >= start} multiplier(k) * kernel_k = rhs, together
/// with its telescoping certificate. The certificate relates the emitted
/// series back to the base term:
///   base_scale * c_prim(k) + multiplier(k) = G(k+1) * kernel.ratio(k) - G(k)
/// as rational functions, where g(k) = G(k) * kernel_k is the telescoped part.
struct ForgedIdentity {
  HyperTerm kernel;
  RatFunc multiplier;
  long start = 0;
  ConstantExpr rhs;
  RatFunc certificate_g;  // the rational part G of g = G * kernel
  Rational base_scale;    // coefficient of the base term in the telescoped sum
  Poly c_prim;            // primitive positive form of the base c-part
  bool faster_convergence = false;

  struct Provenance {
    std::string base_label;
    Poly q;
    int m = 0;
  } provenance;
};

/// Growth data of a hypergeometric term: ratio(k) -> rho * (1 + alpha/k + ...).
/// rho is the limit of the consecutive ratio; alpha the 1/k coefficient
/// (meaningful when |rho| is finite and nonzero).
struct GrowthProfile {
  Rational rho;
  Rational alpha;
  bool rho_finite = true;  // false when deg num > deg den
};

GrowthProfile growth_profile(const RatFunc& ratio);

/// True iff sum t_k converges under the rho/alpha rule:
/// |rho| < 1; or rho = -1 and alpha < 0; or rho = 1 and alpha < -1.
bool series_converges(const RatFunc& ratio);

/// Divides out the c-part: kernel = t / c_prim, with the representation of t.
std::pair<HyperTerm, GosperRep> prepare_kernel(const BaseIdentity& base);

/// Gosper representation of a(k) q(k) / (b(k) q(k+1)).
GosperRep rep_for_candidate(const GosperRep& rep, const Poly& q);

/// 1 + max(k0 - 1, integer roots >= k0 of q and of the given denominators).
long adjust_start(const Poly& q, const std::vector<Poly>& denominators, long k0);

/// Limit of g(k) = G(k) * kernel_k as k -> infinity under the rho/alpha rule;
/// nullopt means "undetermined".
std::optional<ConstantExpr> limit_of_g(const RatFunc& G, const RatFunc& kernel_ratio);

/// Outcome of forging one candidate.
struct ForgeOutcome {
  std::optional<ForgedIdentity> identity;
  std::string diagnostic;  // set when no identity was produced
};

ForgeOutcome forge_identity(const BaseIdentity& base, const Poly& q,
                            std::optional<int> m_max_override = std::nullopt);

/// Runs candidate_denominators (shift 0: factors of a(k-1), b(k) and c, as in
/// the construction method) through forge_identity; successes deduplicated by
/// reduced multiplier, in candidate order.
std::vector<ForgedIdentity> derive_family(const BaseIdentity& base, int max_total_degree,
                                          int max_shift = 0);

}  // namespace hypsum
