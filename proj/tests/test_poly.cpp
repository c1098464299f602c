#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypsum/poly.hpp"

using namespace hypsum;

namespace {

const Poly k = Poly::var();

Poly random_poly(std::mt19937_64& rng, int max_deg, int coeff_range, bool nonzero = false) {
  std::uniform_int_distribution<int> ddeg(0, max_deg), dc(-coeff_range, coeff_range);
  for (;;) {
    std::vector<Rational> c(static_cast<size_t>(ddeg(rng)) + 1);
    for (auto& x : c) x = Rational(dc(rng));
    Poly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

bool canonical(const Poly& p) {
  return p.is_zero() || !p.leading().is_zero();
}

}  // namespace

TEST_CASE("basic arithmetic and canonical form") {
  Poly a = (2 * k + Poly(1)) * (2 * k - Poly(1));
  CHECK(a == 4 * k * k - Poly(1));
  CHECK(a.degree() == 2);
  CHECK(Poly().degree() == Poly::kNegInfDegree);
  CHECK((a - a).is_zero());
  CHECK(canonical(a - a));
  CHECK_THROWS_AS(divmod(a, Poly()), std::domain_error);
}

TEST_CASE("shift") {
  Poly p = (k + Poly(1)).pow(2);
  CHECK(p.shift(1) == (k + Poly(2)).pow(2));
  CHECK((2 * k - Poly(1)).shift(-1) == 2 * k - Poly(3));
  CHECK((8 * (k + Poly(1)).pow(3)).shift(-1) == 8 * k.pow(3));
  CHECK(p.shift(3).shift(-3) == p);
}

TEST_CASE("gcd fixtures") {
  Poly a = (k + Poly(1)).pow(2);
  Poly b = (k + Poly(1)) * (k + Poly(2));
  CHECK(poly_gcd(a, b) == k + Poly(1));
  // ex3.1 ratio is already reduced
  Poly n = -(2 * k + Poly(1)).pow(3), d = 8 * (k + Poly(1)).pow(3);
  CHECK(poly_gcd(n, d).is_one());
}

TEST_CASE("ring axioms and division on random polynomials") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, 6, 9), q = random_poly(rng, 6, 9), r = random_poly(rng, 6, 9);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(canonical(p * q));
    if (!q.is_zero()) {
      auto [quot, rem] = divmod(p * q, q);
      CHECK(quot == p);
      CHECK(rem.is_zero());
      auto [q2, r2] = divmod(p, q);
      CHECK(q2 * q + r2 == p);
      CHECK(r2.degree() < q.degree());
    }
  }
}

TEST_CASE("gcd divides and cofactors coprime") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 5, 6, true), q = random_poly(rng, 5, 6, true);
    Poly g = poly_gcd(p, q);
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    Poly cp = quotient(p, g), cq = quotient(q, g);
    CHECK(poly_gcd(cp, cq).degree() <= 0);
  }
}

TEST_CASE("squarefree decomposition fixtures") {
  Poly p = (k + Poly(1)).pow(2) * (k + Poly(2));
  auto d = squarefree_decompose(p);
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == k + Poly(1));
  CHECK(d[0].second == 2);
  CHECK(d[1].first == k + Poly(2));
  CHECK(d[1].second == 1);

  // (2k-1)^4 = 16 (k - 1/2)^4
  Poly q = (2 * k - Poly(1)).pow(4);
  auto dq = squarefree_decompose(q);
  REQUIRE(dq.size() == 1);
  CHECK(dq[0].first == k - Poly(Rational(1, 2)));
  CHECK(dq[0].second == 4);
  CHECK(q.leading() == Rational(16));
}

TEST_CASE("squarefree decomposition of the telescoping-sum cubic") {
  // gcd-with-derivative chain shows 16k^3 - 4k^2 - 2k + 1 is squarefree
  Poly p = 16 * k.pow(3) - 4 * k * k - 2 * k + Poly(1);
  CHECK(poly_gcd(p, p.derivative()).is_one());
  auto d = squarefree_decompose(p);
  REQUIRE(d.size() == 1);
  CHECK(d[0].second == 1);
  CHECK(d[0].first == p.monic());
  // reconstruction
  Poly rebuilt(p.leading());
  for (auto& [f, m] : d) rebuilt *= f.pow(m);
  CHECK(rebuilt == p);
}

TEST_CASE("squarefree reconstruction on random products") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> dm(1, 3), dc(-4, 4);
    int lead = dc(rng);
    Poly p(Rational(lead == 0 ? 3 : lead));
    for (int f = 0; f < 3; ++f) {
      Poly lin = k - Poly(Rational(dc(rng)));
      p *= lin.pow(dm(rng));
    }
    Poly rebuilt(p.leading());
    for (auto& [f, m] : squarefree_decompose(p)) {
      rebuilt *= f.pow(m);
      CHECK(poly_gcd(f, f.derivative()).degree() <= 0);  // squarefree factor
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots((2 * k + Poly(1)) * (2 * k - Poly(1)).pow(2)) ==
        std::set<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(rational_roots(k * k + Poly(1)).empty());
  CHECK(rational_roots((4 * k + Poly(1)) * (4 * k + Poly(5))) ==
        std::set<Rational>{Rational(-1, 4), Rational(-5, 4)});
  CHECK(rational_roots(k.pow(3) - k) == std::set<Rational>{Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("resultant basics") {
  // res(k-a, k-b) = b - a up to the fixed convention |.|
  Poly a = k - Poly(2), b = k - Poly(5);
  CHECK(resultant(a, b).abs() == Rational(3));
  CHECK(resultant(a, a) == Rational(0));
  CHECK(resultant(k * k + Poly(1), k - Poly(1)).abs() == Rational(2));
}

TEST_CASE("interpolation round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Poly p = random_poly(rng, 5, 8);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long x = 0; x <= p.degree() + 1 || pts.size() < 2; ++x)
      pts.emplace_back(Rational(x), p(Rational(x)));
    CHECK(interpolate(pts) == p);
  }
}

TEST_CASE("dispersion fixtures") {
  Poly a = (k + Poly(1)).pow(2);
  Poly b = (k + Poly(2)) * (k + Poly(3));
  CHECK(dispersion_set(a, b, ShiftDomain::NonNegative).empty());
  CHECK(dispersion_set(a, b, ShiftDomain::AllIntegers) == std::vector<long>{-2, -1});
  CHECK(dispersion_set(Poly(1), Poly(1), ShiftDomain::AllIntegers).empty());
  // bauer numerator/denominator pair: single shift at h = 1
  Poly n = -(2 * k + Poly(1)).pow(3) * (4 * k + Poly(5));
  Poly d = 8 * (k + Poly(1)).pow(3) * (4 * k + Poly(1));
  CHECK(dispersion_set(n, d, ShiftDomain::NonNegative) == std::vector<long>{1});
}

TEST_CASE("dispersion equals brute force") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> droot(-5, 5), dmult(1, 2), dscale(1, 3);
  for (int i = 0; i < 50; ++i) {
    Poly a(Rational(dscale(rng)));
    Poly b(Rational(dscale(rng)));
    for (int f = 0; f < 2; ++f) {
      a *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
      b *= (k - Poly(Rational(droot(rng)))).pow(dmult(rng));
    }
    const long H = 12;
    std::vector<long> brute;
    for (long h = -H; h <= H; ++h)
      if (poly_gcd(a, b.shift(h)).degree() > 0) brute.push_back(h);
    CHECK(dispersion_set(a, b, ShiftDomain::AllIntegers) == brute);
    std::vector<long> brute_nn;
    for (long h : brute)
      if (h >= 0) brute_nn.push_back(h);
    CHECK(dispersion_set(a, b, ShiftDomain::NonNegative) == brute_nn);
  }
}

TEST_CASE("derivative and content") {
  Poly p = 6 * k.pow(3) - 9 * k + Poly(3);
  CHECK(p.derivative() == 18 * k * k - Poly(9));
  CHECK(p.signed_content() == Rational(3));
  CHECK(p.primitive_part() == 2 * k.pow(3) - 3 * k + Poly(1));
  CHECK((-4 * k - Poly(2)).signed_content() == Rational(-2));
  CHECK((-4 * k - Poly(2)).primitive_part() == 2 * k + Poly(1));
  CHECK(Poly(Rational(2, 3)).derivative().is_zero());
}

TEST_CASE("polynomial rendering") {
  CHECK((4 * k * k - k).str() == "4*k^2 - k");
  CHECK((-8 * k.pow(3) - 12 * k * k - 6 * k - Poly(1)).str() == "-8*k^3 - 12*k^2 - 6*k - 1");
  CHECK(Poly().str() == "0");
  CHECK(Poly(Rational(-3, 4)).str() == "-3/4");
}

#include "hypsum/ratfunc.hpp"

namespace {

bool ratfunc_canonical(const RatFunc& r) {
  if (r.den().is_zero() || r.den().leading().sign() <= 0) return false;
  if (poly_gcd(r.num(), r.den()).degree() > 0) return false;
  if (r.is_zero()) return r.den().is_one();
  Rational cn = r.num().signed_content().abs(), cd = r.den().signed_content();
  // integer polynomials with coprime contents
  return cn.is_integer() && cd.is_integer() && gcd(cn, cd).is_one();
}

}  // namespace

TEST_CASE("rational function canonical form survives arithmetic") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    Poly pn = random_poly(rng, 3, 5), pd = random_poly(rng, 3, 5, true);
    Poly qn = random_poly(rng, 3, 5), qd = random_poly(rng, 3, 5, true);
    RatFunc p(pn, pd), q(qn, qd);
    CHECK(ratfunc_canonical(p));
    CHECK(ratfunc_canonical(p + q));
    CHECK(ratfunc_canonical(p - q));
    CHECK(ratfunc_canonical(p * q));
    if (!q.is_zero()) {
      CHECK(ratfunc_canonical(p / q));
      CHECK((p / q) * q == p);
    }
    CHECK(ratfunc_canonical(p.shift(2)));
    CHECK(p.shift(2).shift(-2) == p);
  }
}

TEST_CASE("rational function fixtures") {
  RatFunc bauer(-(2 * k + Poly(1)).pow(3) * (4 * k + Poly(5)),
                8 * (k + Poly(1)).pow(3) * (4 * k + Poly(1)));
  CHECK(bauer.num() == -(2 * k + Poly(1)).pow(3) * (4 * k + Poly(5)));
  CHECK(bauer.den() == 8 * (k + Poly(1)).pow(3) * (4 * k + Poly(1)));
  // reduction pulls shared factors and normalizes the pair
  RatFunc r((k + Poly(1)) * k * Poly(Rational(6)), (k + Poly(1)) * Poly(Rational(4)));
  CHECK(r.num() == 3 * k);
  CHECK(r.den() == Poly(2));
  auto at2 = r.eval(Rational(2));
  REQUIRE(at2.has_value());
  CHECK(*at2 == Rational(3));
  CHECK_FALSE(RatFunc(Poly(1), k).eval(Rational(0)).has_value());
}
