#include "hypsum/verify.hpp"

#include <algorithm>

namespace hypsum {

namespace {

/// Machin-type arctan(1/x) as an exact partial sum with |error| < eps.
/// The series alternates, so the first omitted term bounds the tail.
Rational arctan_inv(long x, const Rational& eps) {
  Rational sum(0);
  Rational xr(x);
  Rational power = xr.inverse();  // 1/x^(2n+1)
  Rational x2inv = (xr * xr).inverse();
  for (long n = 0;; ++n) {
    Rational term = power / Rational(2 * n + 1);
    if (term < eps) break;
    sum += (n % 2 == 0) ? term : -term;
    power *= x2inv;
  }
  return sum;
}

}  // namespace

Rational pi_approx(int decimal_digits) {
  if (decimal_digits < 1) throw std::invalid_argument("pi_approx: digits < 1");
  // pi = 16 atan(1/5) - 4 atan(1/239); per-series truncation below eps/40
  // keeps the total under 10^-digits.
  Rational eps = Rational(1, 10).pow(decimal_digits) / Rational(40);
  return Rational(16) * arctan_inv(5, eps) - Rational(4) * arctan_inv(239, eps);
}

PrecisionContext::PrecisionContext(int decimal_digits)
    : digits_(decimal_digits), pi_(pi_approx(decimal_digits)) {}

Rational PrecisionContext::eval(const ConstantExpr& e) const {
  Rational v = e.coeff(ConstantSymbol::One);
  v += e.coeff(ConstantSymbol::InvPi) * pi_.inverse();
  v += e.coeff(ConstantSymbol::PiSq) * pi_ * pi_;
  return v;
}

bool check_telescoping(const ForgedIdentity& id) {
  RatFunc lhs = RatFunc(id.c_prim * id.base_scale, Poly(1)) + id.multiplier;
  RatFunc rhs = id.certificate_g.shift(1) * id.kernel.ratio - id.certificate_g;
  return lhs == rhs;
}

namespace {

/// True iff p(k) >= 0 for every k >= from, certified by nonnegative
/// coefficients of p(k + from) (sufficient, not necessary).
bool nonnegative_from(const Poly& p, long from) {
  Poly s = p.shift(from);
  for (const Rational& c : s.coeffs())
    if (c.sign() < 0) return false;
  return true;
}

}  // namespace

std::optional<Rational> tail_bound(const HyperTerm& term, const RatFunc& multiplier, long N) {
  GrowthProfile g = growth_profile(term.ratio);
  if (!g.rho_finite) return std::nullopt;
  // consecutive ratio of the summand s_k = multiplier(k) * t_k
  RatFunc sr = (multiplier.shift(1) / multiplier) * term.ratio;
  auto term_at = [&](long k) {
    auto mv = multiplier.eval(Rational(k));
    if (!mv) throw std::domain_error("tail_bound: multiplier pole inside the tail");
    return *mv * term.eval(k);
  };

  Rational ar = g.rho.abs();
  if (ar < Rational(1)) {
    // |sr(k)| <= rbar < 1 for k > N, certified via rbar^2 den^2 - num^2 >= 0
    Rational rbar = (ar + Rational(1)) / Rational(2);
    Poly cert = sr.den() * sr.den() * (rbar * rbar) - sr.num() * sr.num();
    long start = N + 1;
    Rational head(0);
    for (int tries = 0; tries < 64; ++tries, ++start) {
      if (nonnegative_from(cert, start)) {
        Rational first = term_at(start).abs();
        return head + first / (Rational(1) - rbar);
      }
      head += term_at(start).abs();
    }
    return std::nullopt;
  }
  if (ar == Rational(1) && g.rho.sign() < 0) {
    // alternating remainder: |tail| <= |s_{N+1}| once the magnitudes decrease
    // (den^2 - num^2 >= 0) and the signs genuinely alternate (num * den <= 0),
    // both certified by shifted coefficient positivity
    Poly shrink = sr.den() * sr.den() - sr.num() * sr.num();
    Poly negative = -(sr.num() * sr.den());
    long start = N + 1;
    Rational head(0);
    for (int tries = 0; tries < 64; ++tries, ++start) {
      if (nonnegative_from(shrink, start) && nonnegative_from(negative, start))
        return head + term_at(start).abs();
      head += term_at(start).abs();
    }
    return std::nullopt;
  }
  return std::nullopt;
}

NumericReport numeric_verify(const ForgedIdentity& id, long N, const PrecisionContext& ctx) {
  if (N < id.start) throw std::invalid_argument("numeric_verify: N below the start index");
  NumericReport r;
  Rational t = id.kernel.eval(id.start);
  Rational sum(0);
  for (long k = id.start; k <= N; ++k) {
    auto mv = id.multiplier.eval(Rational(k));
    if (!mv) throw std::domain_error("numeric_verify: multiplier pole at k = " + std::to_string(k));
    sum += *mv * t;
    auto rv = id.kernel.ratio.eval(Rational(k));
    if (!rv) throw std::domain_error("numeric_verify: ratio pole at k = " + std::to_string(k));
    t *= *rv;
  }
  r.partial_sum = sum;
  r.target = ctx.eval(id.rhs);
  r.abs_error = (sum - r.target).abs();

  Rational slack = Rational(1, 10).pow(std::max(1, ctx.digits() - 2));
  if (id.multiplier.is_zero()) {
    r.bound = slack;
    r.tail_bound_certified = true;
    r.pass = r.abs_error < r.bound;
    return r;
  }
  auto tb = tail_bound(id.kernel, id.multiplier, N);
  r.tail_bound_certified = tb.has_value();
  if (tb) {
    r.bound = *tb + slack;
    r.pass = r.abs_error < r.bound;
  }
  return r;
}

int legendre_minus_one(const Int& p) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("legendre_minus_one: p must be an odd prime");
  Int e = (p - 1) / 2;
  return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
}

Rational CongruenceTarget::eval(const Int& p) const {
  Rational v(0);
  for (const Term& t : terms) {
    Rational f = t.coeff;
    if (t.p_power > 0) {
      Int pp;
      mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(t.p_power));
      f *= Rational(pp);
    }
    if (t.legendre_factor) f *= Rational(legendre_minus_one(p));
    if (t.base_power) {
      Int bp;
      unsigned long e = mpz_get_ui(Int(p - 1).get_mpz_t());
      mpz_pow_ui(bp.get_mpz_t(), t.base_power->get_mpz_t(), e);
      f *= Rational(bp);
    }
    v += f;
  }
  return v;
}

bool congruence_check(const HyperTerm& term, const RatFunc& multiplier, const Int& p,
                      int mod_power, const CongruenceTarget& target) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("congruence_check: p must be an odd prime");
  long half = Int((p - 1) / 2).get_si();
  Rational sum(0);
  Rational t = term.eval(term.start);
  for (long k = term.start; k <= half; ++k) {
    auto mv = multiplier.eval(Rational(k));
    if (!mv) throw std::domain_error("congruence_check: multiplier pole at k = " + std::to_string(k));
    Rational s = *mv * t;
    if (padic_valuation(s, p) < 0)
      throw std::domain_error("congruence_check: p divides a denominator at k = " +
                              std::to_string(k));
    sum += s;
    if (k < half) {
      auto rv = term.ratio.eval(Rational(k));
      if (!rv) throw std::domain_error("congruence_check: ratio pole at k = " + std::to_string(k));
      t *= *rv;
    }
  }
  return padic_valuation(sum - target.eval(p), p) >= mod_power;
}

bool morley_fixture(const Int& p) {
  if (p <= 3 || !is_prime(p)) throw std::domain_error("morley_fixture: p must be a prime > 3");
  unsigned long n = mpz_get_ui(Int(p - 1).get_mpz_t());
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
  Int pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * n);  // 2^(2p-2)
  Int rhs = legendre_minus_one(p) * pow2;
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), 3);
  Int diff = (binom - rhs) % mod;
  return diff == 0;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

}  // namespace hypsum
