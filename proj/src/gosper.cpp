#include "hypsum/gosper.hpp"

#include <algorithm>

#include "hypsum/linsolve.hpp"

namespace hypsum {

namespace {

/// Throws if num or den of the ratio has an integer zero at k >= start.
void check_ratio_regular(const RatFunc& ratio, long start) {
  if (ratio.is_zero()) throw std::domain_error("HyperTerm: zero ratio");
  for (const Poly* p : {&ratio.num(), &ratio.den()})
    for (long r : integer_roots(*p))
      if (r >= start)
        throw std::domain_error("HyperTerm: ratio has a zero or pole at k = " + std::to_string(r));
}

}  // namespace

HyperTerm::HyperTerm(RatFunc ratio_, long start_, Rational initial_, std::string label_)
    : ratio(std::move(ratio_)), start(start_), initial(std::move(initial_)), label(std::move(label_)) {
  if (initial.is_zero()) throw std::domain_error("HyperTerm: zero initial value");
  check_ratio_regular(ratio, start);
}

Rational HyperTerm::eval(long k) const {
  if (k < start) throw std::domain_error("HyperTerm::eval: index below start");
  Rational v = initial;
  for (long j = start; j < k; ++j) {
    auto r = ratio.eval(Rational(j));
    if (!r || r->is_zero()) throw std::domain_error("HyperTerm::eval: ratio degenerate on path");
    v *= *r;
  }
  return v;
}

HyperTerm HyperTerm::scaled_by(const RatFunc& r) const {
  auto r0 = r.eval(Rational(start));
  if (!r0 || r0->is_zero())
    throw std::domain_error("HyperTerm::scaled_by: multiplier degenerate at start");
  return HyperTerm(ratio * (r.shift(1) / r), start, initial * *r0, label);
}

GosperRep gosper_representation(const RatFunc& ratio) {
  if (ratio.is_zero()) throw std::domain_error("gosper_representation: zero ratio");
  Poly a = ratio.num(), b = ratio.den(), c(1);
  for (long h : dispersion_set(a, b, ShiftDomain::NonNegative)) {
    Poly s = poly_gcd(a, b.shift(h));
    if (s.degree() <= 0) continue;
    if (h == 0)
      throw std::domain_error("gosper_representation: non-reduced input (common factor at h=0)");
    a = quotient(a, s);
    b = quotient(b, s.shift(-h));
    for (long i = 1; i <= h; ++i) c *= s.shift(-i);
  }
  // normalization: c monic, (a,b) jointly primitive with lc(b) > 0
  c = c.monic();
  Rational s = gcd(a.signed_content(), b.signed_content());
  if (b.leading().sign() < 0) s = -s;
  GosperRep rep{a / s, b / s, c};
  // soundness is validated on every construction, not just in debug builds
  if (!(rep.ratio() == ratio) ||
      !dispersion_set(rep.a, rep.b, ShiftDomain::NonNegative).empty())
    throw std::logic_error("gosper_representation: invalid representation constructed");
  return rep;
}

std::set<int> x_degree_candidates(const Poly& a, const Poly& b, int rhs_degree) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("x_degree_candidates: zero coefficient");
  Poly u = a - b.shift(-1);
  const int da = a.degree();
  std::set<int> out;
  if (u.is_zero()) {
    out.insert(std::max(0, rhs_degree - da + 1));
  } else if (u.degree() >= da) {
    out.insert(std::max(0, rhs_degree - u.degree()));
  } else {
    out.insert(std::max(0, rhs_degree - da + 1));
    if (u.degree() == da - 1) {
      Rational n0 = -(u.leading() / a.leading());
      if (n0.is_integer() && n0.sign() >= 0 && n0 <= Rational(1000))
        out.insert(static_cast<int>(n0.num().get_si()));
    }
  }
  return out;
}

namespace {

/// Assembles and solves A x(k+1) - B(k-1) x(k) - weight * p = fixed, with x of
/// degree <= xdeg and p of degree <= m (m < 0 drops the block entirely).
std::optional<ParamSolution> solve_equation(const Poly& A, const Poly& B, const Poly& fixed,
                                            const Poly& weight, int xdeg, int m,
                                            bool homogeneous_pick) {
  const Poly Bm = B.shift(-1);
  std::vector<Poly> cols;
  for (int i = 0; i <= xdeg; ++i) {
    Poly ki = Poly::var().pow(i);
    cols.push_back(A * ki.shift(1) - Bm * ki);
  }
  for (int j = 0; j <= m; ++j) cols.push_back(-(weight * Poly::var().pow(j)));

  int nrows = fixed.degree() + 1;
  for (const Poly& c : cols) nrows = std::max(nrows, c.degree() + 1);
  nrows = std::max(nrows, 1);

  std::vector<std::vector<Rational>> rows(static_cast<size_t>(nrows),
                                          std::vector<Rational>(cols.size()));
  std::vector<Rational> rhs(static_cast<size_t>(nrows));
  for (int r = 0; r < nrows; ++r) {
    for (size_t cidx = 0; cidx < cols.size(); ++cidx) rows[static_cast<size_t>(r)][cidx] = cols[cidx].coeff(r);
    rhs[static_cast<size_t>(r)] = fixed.coeff(r);
  }

  LinearSolution sol = solve_linear_system(std::move(rows), std::move(rhs));
  if (!sol.consistent) return std::nullopt;

  auto extract = [&](const std::vector<Rational>& v) {
    ParamSolution ps;
    std::vector<Rational> xc(v.begin(), v.begin() + xdeg + 1);
    ps.x = Poly(std::move(xc));
    ps.unknowns.assign(v.begin() + xdeg + 1, v.end());
    return ps;
  };

  ParamSolution ps = extract(sol.particular);
  if (homogeneous_pick && ps.p().is_zero()) {
    for (const auto& basis : sol.nullspace) {
      std::vector<Rational> v = sol.particular;
      for (size_t i = 0; i < v.size(); ++i) v[i] += basis[i];
      ParamSolution alt = extract(v);
      if (!alt.p().is_zero()) return alt;
    }
    return std::nullopt;
  }
  return ps;
}

}  // namespace

std::optional<Certificate> solve_gosper(const GosperRep& rep) {
  int xdeg = *x_degree_candidates(rep.a, rep.b, rep.c.degree()).rbegin();
  auto sol = solve_equation(rep.a, rep.b, rep.c, Poly(0), xdeg, -1, false);
  if (!sol) return std::nullopt;
  return Certificate{RatFunc(rep.b.shift(-1) * sol->x, rep.c)};
}

std::optional<ParamSolution> solve_parametrized(const Poly& A, const Poly& B,
                                                const Poly& fixed_rhs, const Poly& param_weight,
                                                int m, bool homogeneous_pick) {
  if (A.is_zero() || B.is_zero()) throw std::domain_error("solve_parametrized: zero coefficient");
  if (m < 0) throw std::invalid_argument("solve_parametrized: negative m");
  int rhs_degree = std::max(fixed_rhs.degree(),
                            param_weight.is_zero() ? Poly::kNegInfDegree : param_weight.degree() + m);
  rhs_degree = std::max(rhs_degree, 0);
  int xdeg = *x_degree_candidates(A, B, rhs_degree).rbegin();
  return solve_equation(A, B, fixed_rhs, param_weight, xdeg, m, homogeneous_pick);
}

}  // namespace hypsum
