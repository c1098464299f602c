#include "hypsum/bounds.hpp"

#include <algorithm>
#include <map>

namespace hypsum {

BoundReport degree_report(const GosperRep& rep) {
  BoundReport r;
  r.u = rep.a - rep.b.shift(-1);
  const int da = rep.a.degree(), db = rep.b.degree(), du = r.u.degree();
  r.d = std::max(du, da - 1);
  r.degenerated = false;
  if (!r.u.is_zero() && du == da - 1) {
    Rational n0 = -(r.u.leading() / rep.a.leading());
    r.degenerated = n0.is_integer() && n0.sign() >= 0;
  }
  const bool loose = r.degenerated || du < da - 1;
  r.upper_B = std::max(0, loose ? r.d + 1 : r.d);
  r.shift_free = dispersion_set(rep.a, rep.b, ShiftDomain::AllIntegers).empty();
  if (r.shift_free) r.remark_bound = std::max(0, r.d);
  r.lower_bound_applicable = rep.c.is_one() && du == std::max(da, db);
  if (r.lower_bound_applicable) r.lower_bound = std::max(da, db);
  return r;
}

Poly minimal_multiplier(const GosperRep& rep) {
  BoundReport rep_bounds = degree_report(rep);
  for (int m = 0; m <= rep_bounds.upper_B; ++m) {
    auto sol = solve_parametrized(rep.a, rep.b, Poly(0), rep.c, m, /*homogeneous_pick=*/true);
    if (sol && !sol->p().is_zero()) return sol->p().primitive_part();
  }
  throw std::logic_error("minimal_multiplier: no multiplier within the bound");
}

bool lower_bound_check(const GosperRep& rep, const Poly& p) {
  if (p.is_zero()) throw std::domain_error("lower_bound_check: zero multiplier");
  BoundReport r = degree_report(rep);
  if (!r.lower_bound_applicable) return true;
  return p.degree() >= *r.lower_bound;
}

namespace {

using Provenance = DenominatorCandidate::Provenance;

/// Atomic factors of p: squarefree decomposition refined by rational roots
/// into primitive linear factors; non-linear squarefree remainders stay atomic.
std::vector<std::pair<Poly, int>> atomic_factors(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  for (const auto& [f, mult] : squarefree_decompose(p)) {
    Poly rest = f;
    for (const Rational& root : rational_roots(f)) {
      Poly lin = (Poly::var() - Poly(root)).primitive_part();
      out.emplace_back(lin, mult);
      rest = quotient(rest, Poly::var() - Poly(root));
    }
    if (rest.degree() > 0) out.emplace_back(rest.primitive_part(), mult);
  }
  return out;
}

struct Atom {
  Poly factor;
  int cap;  // max multiplicity in a candidate
  Provenance::Source source;
  long shift;
};

}  // namespace

std::vector<DenominatorCandidate> candidate_denominators(const GosperRep& rep,
                                                         int max_total_degree, int max_shift) {
  if (max_total_degree < 1) throw std::invalid_argument("candidate_denominators: degree < 1");
  if (max_shift < 0) throw std::invalid_argument("candidate_denominators: negative shift");

  // collect atoms with their highest source multiplicity
  std::map<std::vector<Rational>, Atom> pool;  // keyed by coefficients
  auto add = [&](const Poly& src, Provenance::Source s, long h) {
    for (const auto& [f, mult] : atomic_factors(src)) {
      auto key = f.coeffs();
      auto it = pool.find(key);
      if (it == pool.end())
        pool.emplace(key, Atom{f, mult + 1, s, h});
      else
        it->second.cap = std::max(it->second.cap, mult + 1);
    }
  };
  for (long h = 0; h <= max_shift; ++h) {
    add(rep.a.shift(-1 - h), Provenance::Source::AShift, h);
    add(rep.b.shift(h), Provenance::Source::BShift, h);
  }
  add(rep.c, Provenance::Source::CPart, 0);

  std::vector<Atom> atoms;
  for (auto& [key, atom] : pool) atoms.push_back(atom);
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return Poly::less(x.factor, y.factor); });

  // enumerate exponent vectors with repetition
  std::vector<DenominatorCandidate> out;
  std::vector<int> expo(atoms.size(), 0);
  auto emit = [&]() {
    DenominatorCandidate c;
    c.q = Poly(1);
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (expo[i] == 0) continue;
      c.q *= atoms[i].factor.pow(expo[i]);
      c.provenance.push_back({atoms[i].source, atoms[i].shift, atoms[i].factor, expo[i]});
    }
    if (!c.provenance.empty()) out.push_back(std::move(c));
  };
  // iterative odometer over exponents bounded by caps and total degree
  size_t pos = 0;
  int total = 0;
  emit();  // empty product skipped inside
  while (true) {
    if (pos == atoms.size()) break;
    if (expo[pos] < atoms[pos].cap &&
        total + atoms[pos].factor.degree() <= max_total_degree) {
      ++expo[pos];
      total += atoms[pos].factor.degree();
      emit();
      pos = 0;
    } else {
      total -= expo[pos] * atoms[pos].factor.degree();
      expo[pos] = 0;
      ++pos;
    }
  }

  std::sort(out.begin(), out.end(), [](const DenominatorCandidate& x, const DenominatorCandidate& y) {
    return Poly::less(x.q, y.q);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DenominatorCandidate& x, const DenominatorCandidate& y) {
                          return x.q == y.q;
                        }),
            out.end());
  return out;
}

DenominatorConditions theorem_den_conditions(const Poly& q, const GosperRep& rep) {
  if (q.is_zero()) throw std::domain_error("theorem_den_conditions: zero q");
  DenominatorConditions c;
  if (q.degree() <= 0) {
    c.shift_coprime = c.coprime_with_c = c.self_shift_coprime = true;
    return c;
  }
  // gcd(q(k), a(k-1-h)) = 1 for all h >= 0  <=>  no overlap of a(k) against q(k+1+h)
  c.shift_coprime = dispersion_set(rep.a.shift(-1), q, ShiftDomain::NonNegative).empty() &&
                    dispersion_set(q, rep.b, ShiftDomain::NonNegative).empty();
  c.coprime_with_c = poly_gcd(q, rep.c).degree() <= 0;
  c.self_shift_coprime = dispersion_set(q, q.shift(1), ShiftDomain::NonNegative).empty();
  return c;
}

}  // namespace hypsum
