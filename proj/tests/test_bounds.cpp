#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypsum/bounds.hpp"
#include "hypsum/forge.hpp"
#include "hypsum/termspec.hpp"

using namespace hypsum;

namespace {

const Poly k = Poly::var();

GosperRep rep_of(const char* dsl, long start = 0) {
  return gosper_representation(build_term(parse_term(dsl, start)).ratio);
}

bool product_is_summable(const GosperRep& rep, const Poly& p) {
  // p*t summable <=> a x(k+1) - b(k-1) x(k) = c p solvable
  return solve_parametrized(rep.a, rep.b, rep.c * p, Poly(0), 0).has_value();
}

GosperRep random_rep(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> droot(-3, 3), dmult(1, 2), dlead(1, 3);
  for (;;) {
    Poly n(Rational(dlead(rng))), d(Rational(dlead(rng)));
    int nf = static_cast<int>(rng() % 3), df = static_cast<int>(rng() % 3);
    for (int i = 0; i < nf; ++i) n *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
    for (int i = 0; i < df; ++i) d *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
    if (n.degree() > 3 || d.degree() > 3) continue;
    RatFunc r(n, d);
    if (r.is_zero()) continue;
    return gosper_representation(r);
  }
}

}  // namespace

TEST_CASE("degree report fixtures") {
  // binom(2k,k)^4/((2k-1)^4 256^k): d = 3, B = 4 (degenerated)
  GosperRep exdeg{(2 * k - Poly(1)).pow(4), 16 * (k + Poly(1)).pow(4), Poly(1)};
  BoundReport r = degree_report(exdeg);
  CHECK(r.d == 3);
  CHECK(r.degenerated);
  CHECK(r.upper_B == 4);
  CHECK(r.shift_free);  // roots differ by 3/2, never an integer shift
  CHECK(*r.remark_bound == 3);
  CHECK_FALSE(r.lower_bound_applicable);

  // binom(2k,k)^2/64^k: B = d = 2 and the lower bound applies
  GosperRep b2{(2 * k + Poly(1)).pow(2), 16 * (k + Poly(1)).pow(2), Poly(1)};
  BoundReport r2 = degree_report(b2);
  CHECK(r2.d == 2);
  CHECK_FALSE(r2.degenerated);
  CHECK(r2.upper_B == 2);
  CHECK(r2.lower_bound_applicable);
  CHECK(*r2.lower_bound == 2);

  // trivial representation: u = 0, d = -1 (minus-infinity convention), B = 0
  GosperRep triv{Poly(1), Poly(1), Poly(1)};
  BoundReport r3 = degree_report(triv);
  CHECK(r3.u.is_zero());
  CHECK(r3.d == -1);
  CHECK(r3.upper_B == 0);
}

TEST_CASE("degree report on the two degenerate example terms") {
  GosperRep g1 = rep_of("k / ((k+1)^2 * (k+2))", 1);
  BoundReport r1 = degree_report(g1);
  CHECK(r1.degenerated);
  CHECK(r1.d == 1);
  CHECK(r1.upper_B == 2);

  GosperRep g2 = rep_of("1 / (k+1)^2");
  BoundReport r2 = degree_report(g2);
  CHECK_FALSE(r2.degenerated);
  CHECK(r2.u.is_zero());
  CHECK(r2.u.degree() < g2.a.degree() - 1);
  CHECK(r2.d == 1);
  CHECK(r2.upper_B == 2);
}

TEST_CASE("minimal multipliers match the classical ones") {
  GosperRep exdeg{(2 * k - Poly(1)).pow(4), 16 * (k + Poly(1)).pow(4), Poly(1)};
  Poly p1 = minimal_multiplier(exdeg);
  CHECK(p1 == 4 * k - Poly(1));
  CHECK(product_is_summable(exdeg, p1));

  GosperRep b2{(2 * k + Poly(1)).pow(2), 16 * (k + Poly(1)).pow(2), Poly(1)};
  Poly p2 = minimal_multiplier(b2);
  CHECK(p2 == 12 * k * k - 4 * k - Poly(1));  // -(1 + 4k - 12k^2)
  CHECK(product_is_summable(b2, p2));

  GosperRep g1 = rep_of("k / ((k+1)^2 * (k+2))", 1);
  CHECK(minimal_multiplier(g1).degree() == 2);

  GosperRep g2 = rep_of("1 / (k+1)^2");
  Poly p4 = minimal_multiplier(g2);
  CHECK(p4.degree() == 2);
  CHECK(p4 == (k + Poly(1)).pow(2));
}

TEST_CASE("no multiplier of degree <= 1 exists for the degenerate examples") {
  for (long start : {1L, 0L}) {
    GosperRep rep =
        start == 1 ? rep_of("k / ((k+1)^2 * (k+2))", 1) : rep_of("1 / (k+1)^2");
    for (int deg_p = 0; deg_p <= 1; ++deg_p) {
      auto sol = solve_parametrized(rep.a, rep.b, Poly(0), rep.c, deg_p, true);
      bool found = sol.has_value() && !sol->p().is_zero();
      CHECK_FALSE(found);
    }
  }
}

TEST_CASE("lower bound check") {
  GosperRep b2{(2 * k + Poly(1)).pow(2), 16 * (k + Poly(1)).pow(2), Poly(1)};
  CHECK(lower_bound_check(b2, 12 * k * k - 4 * k - Poly(1)));

  // c != 1: hypotheses fail, vacuously true
  GosperRep g32 = rep_of("(3k+2) * binom(2k,k)");
  CHECK(lower_bound_check(g32, Poly(1)));

  // deg u != max(deg a, deg b): hypotheses fail
  GosperRep exdeg{(2 * k - Poly(1)).pow(4), 16 * (k + Poly(1)).pow(4), Poly(1)};
  CHECK(lower_bound_check(exdeg, 4 * k - Poly(1)));
}

TEST_CASE("candidate denominators for the bauer representation") {
  GosperRep bauer{-(2 * k + Poly(1)).pow(3), 8 * (k + Poly(1)).pow(3),
                  (4 * k + Poly(1)).monic()};
  auto c2 = candidate_denominators(bauer, 2, 0);
  auto has = [](const std::vector<DenominatorCandidate>& v, const Poly& q) {
    return std::any_of(v.begin(), v.end(),
                       [&](const DenominatorCandidate& c) { return c.q == q; });
  };
  CHECK(has(c2, (2 * k - Poly(1)).pow(2)));
  CHECK(has(c2, (k + Poly(1)).pow(2)));
  CHECK(has(c2, (k + Poly(1)) * (2 * k - Poly(1))));
  CHECK(has(c2, 4 * k + Poly(1)));

  auto c3 = candidate_denominators(bauer, 3, 0);
  CHECK(has(c3, (2 * k - Poly(1)).pow(3)));
  CHECK(has(c3, (k + Poly(1)).pow(3)));
  CHECK(c3.size() > c2.size());

  // ordering is stable and deduplicated
  for (size_t i = 1; i < c3.size(); ++i) CHECK(Poly::less(c3[i - 1].q, c3[i].q));

  // provenance products reconstruct q
  for (const auto& cand : c3) {
    Poly prod(1);
    for (const auto& pv : cand.provenance) prod *= pv.factor.pow(pv.multiplicity);
    CHECK(prod == cand.q);
  }
}

TEST_CASE("candidate denominators for the zeilberger representation with shift 1") {
  GosperRep z{k.pow(3), 8 * (2 * k + Poly(1)).pow(3), (21 * k - Poly(8)).monic()};
  auto cands = candidate_denominators(z, 2, 1);
  auto has = [&](const Poly& q) {
    return std::any_of(cands.begin(), cands.end(),
                       [&](const DenominatorCandidate& c) { return c.q == q; });
  };
  CHECK(has((2 * k + Poly(1)).pow(2)));
  CHECK(has((k - Poly(1)).pow(2)));
  CHECK(has((k - Poly(2)).pow(2)));  // from a(k-2) at shift h=1
}

TEST_CASE("theorem conditions") {
  GosperRep rep16{4 * (k + Poly(1)).pow(2), (2 * k + Poly(1)).pow(2), Poly(1)};
  Poly q = (4 * k + Poly(1)) * (4 * k + Poly(5));
  DenominatorConditions c = theorem_den_conditions(q, rep16);
  CHECK(c.shift_coprime);
  CHECK(c.coprime_with_c);
  CHECK_FALSE(c.self_shift_coprime);

  GosperRep bauer{-(2 * k + Poly(1)).pow(3), 8 * (k + Poly(1)).pow(3),
                  (4 * k + Poly(1)).monic()};
  DenominatorConditions cb = theorem_den_conditions((2 * k - Poly(1)).pow(2), bauer);
  CHECK_FALSE(cb.shift_coprime);  // shares (2k-1) with a(k-1)

  DenominatorConditions c1 = theorem_den_conditions(Poly(1), bauer);
  CHECK(c1.all());
}

TEST_CASE("upper bound soundness on random representations") {
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 30) {
    GosperRep rep = random_rep(rng);
    BoundReport br = degree_report(rep);
    Poly p = minimal_multiplier(rep);
    CHECK(!p.is_zero());
    CHECK(p.degree() <= br.upper_B);
    CHECK(product_is_summable(rep, p));
    ++done;
  }
}

TEST_CASE("lower bound soundness where the hypotheses hold") {
  std::mt19937_64 rng(78);
  int done = 0, attempts = 0;
  while (done < 10 && ++attempts < 3000) {
    GosperRep rep = random_rep(rng);
    BoundReport br = degree_report(rep);
    if (!br.lower_bound_applicable || *br.lower_bound < 1) continue;
    int lb = *br.lower_bound;
    // exhaustive search below the bound fails
    for (int m = 0; m < lb; ++m) {
      auto sol = solve_parametrized(rep.a, rep.b, Poly(0), rep.c, m, true);
      bool nontrivial = sol.has_value() && !sol->p().is_zero();
      CHECK_FALSE(nontrivial);
    }
    CHECK(minimal_multiplier(rep).degree() >= lb);
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("denominator divisibility where all conditions hold") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<int> droot(-3, 3), dslope(1, 2);
  int done = 0, attempts = 0;
  while (done < 12 && ++attempts < 3000) {
    GosperRep rep = random_rep(rng);
    // independent random q, not taken from the representation's own factors
    Poly q = (dslope(rng) * k - Poly(Rational(droot(rng)))).primitive_part();
    if (rng() % 2) q *= (dslope(rng) * k - Poly(Rational(droot(rng)))).primitive_part();
    if (q.degree() < 1) continue;
    if (!theorem_den_conditions(q, rep).all()) continue;
    GosperRep crep = rep_for_candidate(rep, q);
    BoundReport br = degree_report(crep);
    // search p with p * t / q summable; the theorem forces q | p
    for (int m = 0; m <= br.upper_B + q.degree(); ++m) {
      auto sol = solve_parametrized(crep.a, crep.b, Poly(0), crep.c * rep.c, m, true);
      if (!sol || sol->p().is_zero()) continue;
      CHECK(divides(q, sol->p()));
      ++done;
      break;
    }
  }
  CHECK(done >= 12);
}
