#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypsum/gosper.hpp"
#include "hypsum/termspec.hpp"

using namespace hypsum;

namespace {

const Poly k = Poly::var();

struct RepFixture {
  const char* name;
  RatFunc ratio;
  Poly a, b, c;  // c given in primitive-positive form; compared up to scalar
};

// the seven classical representation fixtures
std::vector<RepFixture> rep_fixtures() {
  Poly one(1);
  std::vector<RepFixture> v;
  // (4k+1) binom(2k,k)^3 / (-64)^k
  v.push_back({"bauer",
               RatFunc(-(2 * k + one).pow(3) * (4 * k + Poly(5)),
                       8 * (k + one).pow(3) * (4 * k + one)),
               -(2 * k + one).pow(3), 8 * (k + one).pow(3), 4 * k + one});
  // k / ((k+1)^2 (k+2))
  v.push_back({"k/((k+1)^2(k+2))", RatFunc((k + one).pow(3), k * (k + Poly(2)) * (k + Poly(3))),
               (k + one).pow(2), (k + Poly(2)) * (k + Poly(3)), k});
  // 1/(k+1)^2
  v.push_back({"1/(k+1)^2", RatFunc((k + one).pow(2), (k + Poly(2)).pow(2)), (k + one).pow(2),
               (k + Poly(2)).pow(2), one});
  // binom(2k,k)^4 / ((2k-1)^4 256^k)
  v.push_back({"binom^4/((2k-1)^4 256^k)", RatFunc((2 * k - one).pow(4), 16 * (k + one).pow(4)),
               (2 * k - one).pow(4), 16 * (k + one).pow(4), one});
  // binom(2k,k)^2 / 64^k
  v.push_back({"binom^2/64^k", RatFunc((2 * k + one).pow(2), 16 * (k + one).pow(2)),
               (2 * k + one).pow(2), 16 * (k + one).pow(2), one});
  // (3k+2) binom(2k,k)
  v.push_back({"(3k+2)binom", RatFunc(2 * (3 * k + Poly(5)) * (2 * k + one),
                                      (3 * k + Poly(2)) * (k + one)),
               2 * (2 * k + one), k + one, 3 * k + Poly(2)});
  // 16^k / binom(2k,k)^2
  v.push_back({"16^k/binom^2", RatFunc(4 * (k + one).pow(2), (2 * k + one).pow(2)),
               4 * (k + one).pow(2), (2 * k + one).pow(2), one});
  return v;
}

GosperRep rep_of(const char* dsl, long start = 0) {
  return gosper_representation(build_term(parse_term(dsl, start)).ratio);
}

}  // namespace

TEST_CASE("gosper representations reproduce the classical triples") {
  for (const RepFixture& f : rep_fixtures()) {
    CAPTURE(f.name);
    GosperRep rep = gosper_representation(f.ratio);
    CHECK(rep.a == f.a);
    CHECK(rep.b == f.b);
    CHECK(rep.c == f.c.monic());  // c is monic; fixtures match up to the unit
    CHECK(rep.ratio() == f.ratio);
    CHECK(dispersion_set(rep.a, rep.b, ShiftDomain::NonNegative).empty());
  }
}

TEST_CASE("fixture ratios agree with the DSL terms") {
  auto fx = rep_fixtures();
  CHECK(build_term(parse_term("(4k+1) * binom(2k,k)^3 / (-64)^k")).ratio == fx[0].ratio);
  CHECK(build_term(parse_term("k / ((k+1)^2 * (k+2))", 1)).ratio == fx[1].ratio);
  CHECK(build_term(parse_term("1 / (k+1)^2")).ratio == fx[2].ratio);
  CHECK(build_term(parse_term("binom(2k,k)^4 / ((2k-1)^4 * 256^k)")).ratio == fx[3].ratio);
  CHECK(build_term(parse_term("binom(2k,k)^2 / 64^k")).ratio == fx[4].ratio);
  CHECK(build_term(parse_term("(3k+2) * binom(2k,k)")).ratio == fx[5].ratio);
  CHECK(build_term(parse_term("16^k / binom(2k,k)^2")).ratio == fx[6].ratio);
}

TEST_CASE("zeilberger representation from the DSL") {
  GosperRep rep = rep_of("(21k-8) / (k^3 * binom(2k,k)^3)", 1);
  CHECK(rep.a == k.pow(3));
  CHECK(rep.b == 8 * (2 * k + Poly(1)).pow(3));
  CHECK(rep.c == (21 * k - Poly(8)).monic());
}

TEST_CASE("trivial ratio") {
  GosperRep rep = gosper_representation(RatFunc(Rational(1)));
  CHECK(rep.a.is_one());
  CHECK(rep.b.is_one());
  CHECK(rep.c.is_one());
}

TEST_CASE("x degree candidates") {
  // u = 0: x(k+1) - x(k) = 1 has the linear solution x = k
  CHECK(*x_degree_candidates(Poly(1), Poly(1), 0).rbegin() == 1);
  // deg u = deg a: tight cap rhs_degree - deg u
  Poly a = -(2 * k + Poly(1)) * (2 * k - Poly(1)).pow(2), b = 8 * (k + Poly(1)).pow(3);
  CHECK(*x_degree_candidates(a, b, 3).rbegin() == 0);
  // degenerated pair: u(k) = a - b(k-1) = -(k+1), so n0 = 1 joins the candidates
  Poly a2 = (k + Poly(1)).pow(2), b2 = (k + Poly(2)) * (k + Poly(3));
  CHECK(a2 - b2.shift(-1) == -(k + Poly(1)));
  CHECK(x_degree_candidates(a2, b2, 1).count(1) == 1);
}

TEST_CASE("solve_gosper decides the example terms") {
  // sum of k: summable, antidifference k(k-1)/2
  GosperRep repk = gosper_representation(RatFunc(k + Poly(1), k));
  auto cert = solve_gosper(repk);
  REQUIRE(cert.has_value());
  RatFunc lhs = cert->multiplier.shift(1) * RatFunc(k + Poly(1), k) - cert->multiplier;
  CHECK(lhs == RatFunc(Rational(1)));
  // z_k = R(k) k should be k(k-1)/2 up to an additive constant; check values
  auto R = cert->multiplier;
  for (long j = 1; j <= 6; ++j) {
    Rational z = *R.eval(Rational(j)) * Rational(j);
    Rational z1 = *R.eval(Rational(j + 1)) * Rational(j + 1);
    CHECK(z1 - z == Rational(j));
  }

  // bauer kernel representation is not summable
  GosperRep bauer{-(2 * k + Poly(1)).pow(3), 8 * (k + Poly(1)).pow(3),
                  (4 * k + Poly(1)).monic()};
  CHECK_FALSE(solve_gosper(bauer).has_value());

  // (3k+2) binom(2k,k) is summable
  CHECK(solve_gosper(rep_of("(3k+2) * binom(2k,k)")).has_value());

  // the remaining example terms are not summable themselves
  CHECK_FALSE(solve_gosper(rep_of("k / ((k+1)^2 * (k+2))", 1)).has_value());
  CHECK_FALSE(solve_gosper(rep_of("1 / (k+1)^2")).has_value());
  CHECK_FALSE(solve_gosper(rep_of("binom(2k,k)^4 / ((2k-1)^4 * 256^k)")).has_value());
  CHECK_FALSE(solve_gosper(rep_of("binom(2k,k)^2 / 64^k")).has_value());
  CHECK_FALSE(solve_gosper(rep_of("16^k / binom(2k,k)^2")).has_value());
}

TEST_CASE("the 16^k/binom^2 term becomes summable with the classical multiplier") {
  HyperTerm t = build_term(parse_term("16^k / binom(2k,k)^2"));
  RatFunc r(-32 * k * k - 40 * k + Poly(1), (4 * k + Poly(1)) * (4 * k + Poly(5)));
  HyperTerm rt = t.scaled_by(r);
  CHECK(solve_gosper(gosper_representation(rt.ratio)).has_value());
}

TEST_CASE("parametrized solve fixtures") {
  Poly A = -(2 * k + Poly(1)) * (2 * k - Poly(1)).pow(2);
  Poly B = 8 * (k + Poly(1)).pow(3);
  Poly fixed = (4 * k + Poly(1)) * (2 * k - Poly(1)).pow(2);
  auto sol = solve_parametrized(A, B, fixed, Poly(1), 2);
  REQUIRE(sol.has_value());
  CHECK(sol->x == Poly(-1));
  CHECK(sol->p() == 8 * k * k - 2 * k);

  // homogeneous: x(k+1) - x(k) = a0 picks x = k, a0 = 1
  auto hom = solve_parametrized(Poly(1), Poly(1), Poly(0), Poly(1), 0, true);
  REQUIRE(hom.has_value());
  CHECK(hom->p() == Poly(1));
  CHECK(hom->x == k);
}

TEST_CASE("parametrized solve with the zeilberger kernel") {
  // q = (2k+1)^2 recovers p ~ 28k^2 + 31k + 8
  GosperRep rep = rep_of("(21k-8) / (k^3 * binom(2k,k)^3)", 1);
  Poly q = (2 * k + Poly(1)).pow(2);
  GosperRep crep = gosper_representation(RatFunc(rep.a * q, rep.b * q.shift(1)));
  Poly cprim = rep.c.primitive_part();
  auto sol = solve_parametrized(crep.a, crep.b, crep.c * cprim * q, crep.c, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->p().primitive_part() == 28 * k * k + 31 * k + Poly(8));
}

TEST_CASE("parametrized solve without the unknown block matches solve_gosper") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> droot(-4, 4), dlead(1, 3);
  int done = 0;
  while (done < 50) {
    Poly n = Poly(Rational(dlead(rng))) * (k - Poly(Rational(droot(rng))));
    Poly d = Poly(Rational(dlead(rng))) * (k - Poly(Rational(droot(rng))));
    RatFunc ratio(n, d);
    if (ratio.is_zero() || ratio.num().degree() < 1) continue;
    GosperRep rep = gosper_representation(ratio);
    auto direct = solve_gosper(rep);
    auto param = solve_parametrized(rep.a, rep.b, rep.c, Poly(0), 0);
    CHECK(direct.has_value() == param.has_value());
    if (direct && param) {
      RatFunc R(rep.b.shift(-1) * param->x, rep.c);
      CHECK(R.shift(1) * rep.ratio() - R == RatFunc(Rational(1)));
    }
    ++done;
  }
}

TEST_CASE("eval_term") {
  HyperTerm bauer = build_term(parse_term("(4k+1) * binom(2k,k)^3 / (-64)^k"));
  CHECK(bauer.eval(0) == Rational(1));
  CHECK(bauer.eval(1) == Rational(-5, 8));
  CHECK(bauer.eval(2) == Rational(9 * 216, 64 * 64));

  HyperTerm sq = build_term(parse_term("1 / (k+1)^2"));
  CHECK(sq.eval(3) == Rational(1, 16));

  CHECK_THROWS_AS(bauer.eval(-1), std::domain_error);
}

TEST_CASE("hyperterm invariants are enforced") {
  // ratio pole at an integer >= start
  CHECK_THROWS_AS(HyperTerm(RatFunc(Poly(1), k - Poly(3)), 0, Rational(1)), std::domain_error);
  // zero of the ratio numerator at an integer >= start
  CHECK_THROWS_AS(HyperTerm(RatFunc(k - Poly(5), Poly(1)), 0, Rational(1)), std::domain_error);
  // fine when the bad points lie below the start
  CHECK_NOTHROW(HyperTerm(RatFunc(k - Poly(5), k - Poly(3)), 6, Rational(1)));
  CHECK_THROWS_AS(HyperTerm(RatFunc(Rational(1)), 0, Rational(0)), std::domain_error);
}

TEST_CASE("representation soundness on random ratios") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> droot(-4, 4), dmult(1, 2), dn(1, 2);
  for (int i = 0; i < 40; ++i) {
    Poly n(Rational(dn(rng))), d(Rational(dn(rng)));
    for (int f = 0; f < 2; ++f) {
      n *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
      d *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
    }
    RatFunc ratio(n, d);
    if (ratio.is_zero()) continue;
    GosperRep rep = gosper_representation(ratio);
    CHECK(rep.ratio() == ratio);
    CHECK(dispersion_set(rep.a, rep.b, ShiftDomain::NonNegative).empty());
    CHECK(rep.c == rep.c.monic());
  }
}
