#include "hypsum/forge.hpp"

#include <algorithm>

namespace hypsum {

GrowthProfile growth_profile(const RatFunc& ratio) {
  GrowthProfile g;
  const Poly &n = ratio.num(), &d = ratio.den();
  if (n.degree() > d.degree()) {
    g.rho_finite = false;
    return g;
  }
  if (n.degree() < d.degree()) {
    g.rho = Rational(0);
    return g;
  }
  g.rho = n.leading() / d.leading();
  const int dn = n.degree();
  Rational next_n = dn > 0 ? n.coeff(dn - 1) / n.leading() : Rational(0);
  Rational next_d = dn > 0 ? d.coeff(dn - 1) / d.leading() : Rational(0);
  g.alpha = next_n - next_d;
  return g;
}

bool series_converges(const RatFunc& ratio) {
  GrowthProfile g = growth_profile(ratio);
  if (!g.rho_finite) return false;
  Rational ar = g.rho.abs();
  if (ar < Rational(1)) return true;
  if (ar > Rational(1)) return false;
  if (g.rho.sign() < 0) return g.alpha.sign() < 0;
  return g.alpha < Rational(-1);
}

std::pair<HyperTerm, GosperRep> prepare_kernel(const BaseIdentity& base) {
  GosperRep rep = gosper_representation(base.term.ratio);
  Poly c_prim = rep.c.primitive_part();
  Rational c0 = c_prim(Rational(base.term.start));
  if (c0.is_zero())
    throw std::domain_error("prepare_kernel: c vanishes at the start index; shift the start first");
  HyperTerm kernel(RatFunc(rep.a, rep.b), base.term.start, base.term.initial / c0,
                   base.term.label.empty() ? std::string{} : base.term.label + "/c");
  return {kernel, rep};
}

GosperRep rep_for_candidate(const GosperRep& rep, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("rep_for_candidate: zero q");
  return gosper_representation(RatFunc(rep.a * q, rep.b * q.shift(1)));
}

long adjust_start(const Poly& q, const std::vector<Poly>& denominators, long k0) {
  if (q.is_zero()) throw std::domain_error("adjust_start: zero q");
  long m = k0 - 1;
  auto consider = [&](const Poly& p) {
    if (p.degree() <= 0) return;
    for (long r : integer_roots(p))
      if (r >= k0) m = std::max(m, r);
  };
  consider(q);
  for (const Poly& d : denominators) consider(d);
  return 1 + m;
}

std::optional<ConstantExpr> limit_of_g(const RatFunc& G, const RatFunc& kernel_ratio) {
  if (kernel_ratio.is_zero()) throw std::domain_error("limit_of_g: zero kernel ratio");
  if (G.is_zero()) return ConstantExpr(Rational(0));
  GrowthProfile p = growth_profile(kernel_ratio);
  if (!p.rho_finite) return std::nullopt;
  Rational ar = p.rho.abs();
  if (ar < Rational(1)) return ConstantExpr(Rational(0));
  if (ar > Rational(1)) return std::nullopt;
  Rational e = Rational(G.num().degree() - G.den().degree()) + p.alpha;
  if (e.sign() < 0) return ConstantExpr(Rational(0));
  return std::nullopt;
}

namespace {

/// Degree ceiling for the unknown block, from the case-split bound applied to
/// the candidate representation.
int m_ceiling(const GosperRep& crep) {
  Poly u = crep.a - crep.b.shift(-1);
  const int da = crep.a.degree();
  int d = std::max(u.degree(), da - 1);
  bool degen = false;
  if (!u.is_zero() && u.degree() == da - 1) {
    Rational n0 = -(u.leading() / crep.a.leading());
    degen = n0.is_integer() && n0.sign() >= 0;
  }
  bool loose = degen || u.degree() < da - 1;
  return std::max(0, loose ? d + 1 : d);
}

/// Lower-bound floor for the unknown block degree: when the lower-bound
/// theorem applies to the candidate representation and the fixed part cannot
/// reach the bound, p itself must.
int m_floor(const GosperRep& crep, const Poly& fixed_rhs) {
  int mx = std::max(crep.a.degree(), crep.b.degree());
  Poly u = crep.a - crep.b.shift(-1);
  bool applicable = crep.c.is_one() && u.degree() == mx;
  if (applicable && fixed_rhs.degree() < mx) return mx;
  return 0;
}

}  // namespace

ForgeOutcome forge_identity(const BaseIdentity& base, const Poly& q,
                            std::optional<int> m_max_override) {
  if (q.is_zero() || q.degree() < 1)
    throw std::invalid_argument("forge_identity: q must be nonconstant");
  if (!series_converges(base.term.ratio))
    throw std::domain_error("forge_identity: base series does not converge");

  auto [kernel, rep] = prepare_kernel(base);
  const Poly c_prim = rep.c.primitive_part();
  const long k0 = base.term.start;

  GosperRep crep = rep_for_candidate(rep, q);
  const Poly fixed_rhs = crep.c * c_prim * q;
  const int ceiling = m_max_override.value_or(m_ceiling(crep));
  const int floor = std::min(m_floor(crep, fixed_rhs), ceiling);

  std::optional<ParamSolution> found;
  int m_used = 0;
  for (int m = floor; m <= ceiling; ++m) {
    auto sol = solve_parametrized(crep.a, crep.b, fixed_rhs, crep.c, m);
    if (!sol) continue;
    Poly p = sol->p();
    if (p.is_zero()) continue;                  // base term alone telescopes: nothing new
    if ((c_prim * q + p).is_zero()) continue;   // trivial restatement of the base identity
    found = std::move(sol);
    m_used = m;
    break;
  }
  if (!found) return {std::nullopt, "no polynomial solution for any m <= " + std::to_string(ceiling)};

  const Poly p = found->p();
  RatFunc G(crep.b.shift(-1) * found->x, crep.c * q);
  auto lim = limit_of_g(G, kernel.ratio);
  if (!lim) return {std::nullopt, "limit of g(k) undetermined (g does not vanish at infinity)"};

  // reduced multiplier in emission form: denominator primitive-positive,
  // identity scaled so the numerator is primitive-positive as well
  RatFunc reduced(p, q);
  Poly den = reduced.den().primitive_part();
  Poly num_raw = reduced.num() * (reduced.den().signed_content().inverse());
  Rational lambda = num_raw.signed_content().inverse();
  RatFunc multiplier(num_raw * lambda, den);

  long k1 = adjust_start(q, {G.den(), den}, k0);

  // rhs = lambda * (lim g - g(k1) - (C - sum_{k0}^{k1-1} t_k))
  Rational g_k1;
  {
    auto gv = G.eval(Rational(k1));
    if (!gv) return {std::nullopt, "certificate pole at the shifted start index"};
    g_k1 = *gv * kernel.eval(k1);
  }
  Rational partial(0);
  for (long j = k0; j < k1; ++j) partial += base.term.eval(j);
  ConstantExpr rhs = *lim;
  rhs -= ConstantExpr(g_k1);
  rhs -= base.sum;
  rhs += ConstantExpr(partial);
  rhs *= lambda;

  ForgedIdentity id;
  id.kernel = kernel;
  id.multiplier = multiplier;
  id.start = k1;
  id.rhs = rhs;
  id.certificate_g = RatFunc(Poly(lambda), Poly(1)) * G;
  id.base_scale = lambda;
  id.c_prim = c_prim;
  id.faster_convergence =
      multiplier.num().degree() - multiplier.den().degree() < c_prim.degree();
  id.provenance = {base.term.label, q, m_used};

  // no identity leaves the forge on numeric evidence: the telescoping
  // relation must hold exactly
  RatFunc lhs = RatFunc(c_prim * lambda, Poly(1)) + multiplier;
  RatFunc rhs_check = id.certificate_g.shift(1) * kernel.ratio - id.certificate_g;
  if (lhs != rhs_check)
    throw std::logic_error("forge_identity: telescoping certificate failed to validate");
  return {id, ""};
}

std::vector<ForgedIdentity> derive_family(const BaseIdentity& base, int max_total_degree,
                                          int max_shift) {
  if (!series_converges(base.term.ratio))
    throw std::domain_error("derive_family: base series does not converge");
  auto [kernel, rep] = prepare_kernel(base);
  std::vector<ForgedIdentity> out;
  for (const DenominatorCandidate& cand :
       candidate_denominators(rep, max_total_degree, max_shift)) {
    ForgeOutcome oc = forge_identity(base, cand.q);
    if (!oc.identity) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const ForgedIdentity& e) {
      return e.multiplier == oc.identity->multiplier;
    });
    if (!dup) out.push_back(std::move(*oc.identity));
  }
  return out;
}

}  // namespace hypsum
