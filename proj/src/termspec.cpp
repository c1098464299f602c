#include "hypsum/termspec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hypsum {

namespace {

/// Intermediate parse value: a rational-function part times special factors.
struct PV {
  RatFunc rf = RatFunc(Rational(1));
  std::vector<TermFactor> special;
  bool pure() const { return special.empty(); }
};

struct TParser {
  const std::string& s;
  size_t pos = 0;

  explicit TParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("term syntax: " + what + " at position " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool eat_word(const char* w) {
    skip();
    size_t n = std::char_traits<char>::length(w);
    if (s.compare(pos, n, w) == 0) {
      pos += n;
      return true;
    }
    return false;
  }

  PV parse() {
    PV v = sum();
    skip();
    if (pos != s.size()) fail("trailing input");
    return v;
  }

  PV sum() {
    PV acc = term();
    while (true) {
      skip();
      bool minus = false;
      if (eat('+'))
        minus = false;
      else if (eat('-'))
        minus = true;
      else
        return acc;
      PV b = term();
      if (!acc.pure() || !b.pure()) fail("addition of non-polynomial factors");
      acc.rf = minus ? acc.rf - b.rf : acc.rf + b.rf;
    }
  }

  PV term() {
    PV acc = unary();
    while (true) {
      skip();
      if (eat('*')) {
        acc = mul(acc, unary());
      } else if (eat('/')) {
        acc = mul(acc, invert(unary()));
      } else if (pos < s.size() && (s[pos] == 'k' || s[pos] == '(')) {
        // implicit multiplication: "8k^2" is 8 * k^2, "(4k+3)(2k+1)" a product
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  static PV mul(PV a, PV b) {
    a.rf = a.rf * b.rf;
    for (auto& f : b.special) a.special.push_back(std::move(f));
    return a;
  }

  PV invert(PV v) {
    if (v.rf.is_zero()) fail("division by zero");
    v.rf = v.rf.inverse();
    for (auto& f : v.special) f.exponent = -f.exponent;
    return v;
  }

  PV unary() {
    bool neg = false;
    skip();
    while (eat('-')) neg = !neg;
    PV v = power();
    if (neg) v.rf = RatFunc(Rational(-1)) * v.rf;
    return v;
  }

  PV power() {
    PV base = atom();
    skip();
    if (!eat('^')) return base;
    skip();
    if (pos < s.size() && s[pos] == 'k') {
      ++pos;
      if (!base.pure() || !base.rf.is_polynomial() || base.rf.num().degree() > 0)
        fail("^k requires a constant base");
      Rational c = base.rf.as_poly().coeff(0);
      if (c.is_zero()) fail("zero base in geometric factor");
      TermFactor g;
      g.kind = TermFactor::Kind::Geometric;
      g.base = c;
      g.exponent = 1;
      return PV{RatFunc(Rational(1)), {g}};
    }
    int e = int_lit();
    if (base.pure()) {
      base.rf = base.rf.pow(e);
      return base;
    }
    base.rf = base.rf.pow(e);
    for (auto& f : base.special) f.exponent *= e;
    return base;
  }

  PV atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (eat_word("binom")) {
      if (!eat('(')) fail("expected '(' after binom");
      LinearForm u = linear();
      if (!eat(',')) fail("expected ',' in binom");
      LinearForm l = linear();
      if (!eat(')')) fail("expected ')' after binom");
      TermFactor f;
      f.kind = TermFactor::Kind::Binomial;
      f.upper = u;
      f.lower = l;
      return PV{RatFunc(Rational(1)), {f}};
    }
    if (eat_word("rising")) {
      if (!eat('(')) fail("expected '(' after rising");
      PV a = sum();
      if (!eat(')')) fail("expected ')' after rising");
      if (!a.pure() || !a.rf.is_polynomial() || a.rf.num().degree() > 0)
        fail("rising() takes a rational constant");
      TermFactor f;
      f.kind = TermFactor::Kind::Rising;
      f.base = a.rf.as_poly().coeff(0);
      return PV{RatFunc(Rational(1)), {f}};
    }
    if (c == 'k') {
      ++pos;
      if (pos < s.size() && s[pos] == '!') {
        ++pos;
        TermFactor f;
        f.kind = TermFactor::Kind::Factorial;
        return PV{RatFunc(Rational(1)), {f}};
      }
      return PV{RatFunc(Poly::var(), Poly(1)), {}};
    }
    if (c == '(') {
      ++pos;
      PV v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return PV{RatFunc(number()), {}};
    fail(std::string("unexpected character '") + c + "'");
  }

  LinearForm linear() {
    PV v = sum();
    if (!v.pure() || !v.rf.is_polynomial()) fail("expected a linear form");
    Poly p = v.rf.as_poly();
    if (p.degree() > 1) fail("expected a linear form");
    LinearForm lf{p.coeff(1), p.coeff(0)};
    if (!lf.slope.is_integer()) fail("binomial slope must be an integer");
    return lf;
  }

  Rational number() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Rational(Int(s.substr(start, pos - start)), Int(1));
  }

  int int_lit() {
    skip();
    bool neg = eat('-');
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer exponent");
    int v = std::stoi(s.substr(start, pos - start));
    return neg ? -v : v;
  }
};

bool factor_param_less(const TermFactor& a, const TermFactor& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case TermFactor::Kind::Binomial:
      if (a.upper.slope != b.upper.slope) return a.upper.slope < b.upper.slope;
      if (a.upper.intercept != b.upper.intercept) return a.upper.intercept < b.upper.intercept;
      if (a.lower.slope != b.lower.slope) return a.lower.slope < b.lower.slope;
      return a.lower.intercept < b.lower.intercept;
    case TermFactor::Kind::Geometric:
    case TermFactor::Kind::Rising:
      return a.base < b.base;
    default:
      return false;
  }
}

bool factor_param_equal(const TermFactor& a, const TermFactor& b) {
  return !factor_param_less(a, b) && !factor_param_less(b, a) && a.kind == b.kind;
}

/// Canonical TermSpec from a parse value: special factors sorted and merged,
/// the rational-function part as one numerator and one denominator factor.
TermSpec canonicalize(PV v, long start) {
  TermSpec out;
  out.start = start;
  std::stable_sort(v.special.begin(), v.special.end(), factor_param_less);
  for (size_t i = 0; i < v.special.size();) {
    TermFactor f = v.special[i];
    size_t j = i + 1;
    while (j < v.special.size() && factor_param_equal(v.special[j], f)) {
      f.exponent += v.special[j].exponent;
      ++j;
    }
    if (f.kind == TermFactor::Kind::Geometric && std::abs(f.exponent) > 1) {
      // (c^k)^e = (c^|e|)^(sign(e) k); keep geometric exponents at +-1
      f.base = f.base.pow(std::abs(f.exponent));
      f.exponent = f.exponent > 0 ? 1 : -1;
    }
    if (f.exponent != 0) out.factors.push_back(f);
    i = j;
  }
  if (v.rf.is_zero()) throw std::invalid_argument("term is identically zero");
  if (!(v.rf.num() == Poly(1))) {
    TermFactor f;
    f.kind = TermFactor::Kind::Polynomial;
    f.poly = v.rf.num();
    out.factors.insert(out.factors.begin(), f);
  }
  if (!v.rf.den().is_one()) {
    TermFactor f;
    f.kind = TermFactor::Kind::Polynomial;
    f.poly = v.rf.den();
    f.exponent = -1;
    out.factors.push_back(f);
  }
  if (out.factors.empty()) {
    TermFactor f;
    f.kind = TermFactor::Kind::Polynomial;
    f.poly = Poly(1);
    out.factors.push_back(f);
  }
  return out;
}

std::string render_linear(const LinearForm& lf) {
  Poly p = lf.poly();
  return p.str();
}

std::string render_factor_body(const TermFactor& f) {
  std::ostringstream os;
  switch (f.kind) {
    case TermFactor::Kind::Binomial:
      os << "binom(" << render_linear(f.upper) << "," << render_linear(f.lower) << ")";
      break;
    case TermFactor::Kind::Polynomial:
      os << "(" << f.poly.str() << ")";
      break;
    case TermFactor::Kind::Geometric:
      os << "(" << f.base.str() << ")^k";
      break;
    case TermFactor::Kind::Rising:
      os << "rising(" << f.base.str() << ")";
      break;
    case TermFactor::Kind::Factorial:
      os << "k!";
      break;
  }
  return os.str();
}

}  // namespace

TermSpec parse_term(const std::string& input, long start) {
  if (input.empty()) throw std::invalid_argument("term syntax: empty input");
  TParser p(input);
  return canonicalize(p.parse(), start);
}

std::string render_term(const TermSpec& spec) {
  std::ostringstream os;
  bool first = true;
  for (const TermFactor& f : spec.factors) {
    int e = f.exponent;
    if (first) {
      if (e < 0) os << "1 / ";
      first = false;
    } else {
      os << (e < 0 ? " / " : " * ");
    }
    os << render_factor_body(f);
    int a = std::abs(e);
    if (a != 1) {
      if (f.kind == TermFactor::Kind::Geometric) {
        // (c)^k^2 is not parseable; fold the power into the base
        throw std::invalid_argument("render_term: geometric factor with |exponent| != 1");
      }
      os << "^" << a;
    }
  }
  return os.str();
}

RatFunc factor_ratio(const TermFactor& f) {
  auto rise = [](const Poly& p, long n) {
    // (p+1)(p+2)...(p+n) for n >= 0; 1/(p (p-1) ... (p+n+1)) for n < 0
    Poly num(1), den(1);
    for (long i = 1; i <= n; ++i) num *= p + Poly(Rational(i));
    for (long i = 0; i < -n; ++i) den *= p - Poly(Rational(i));
    return RatFunc(num, den);
  };
  switch (f.kind) {
    case TermFactor::Kind::Binomial: {
      long a = f.upper.slope.num().get_si();
      long g = f.lower.slope.num().get_si();
      Poly u = f.upper.poly(), l = f.lower.poly();
      return rise(u, a) / (rise(l, g) * rise(u - l, a - g));
    }
    case TermFactor::Kind::Polynomial:
      return RatFunc(f.poly.shift(1), f.poly);
    case TermFactor::Kind::Geometric:
      return RatFunc(f.base);
    case TermFactor::Kind::Rising:
      return RatFunc(Poly::var() + Poly(f.base), Poly(1));
    case TermFactor::Kind::Factorial:
      return RatFunc(Poly::var() + Poly(1), Poly(1));
  }
  throw std::logic_error("factor_ratio: bad kind");
}

Rational factor_value(const TermFactor& f, long k) {
  switch (f.kind) {
    case TermFactor::Kind::Binomial: {
      Rational u = f.upper.at(k), l = f.lower.at(k);
      if (!u.is_integer() || !l.is_integer())
        throw std::domain_error("binomial arguments are not integers at the start index");
      if (l.sign() < 0 || u < l)
        throw std::domain_error("binomial vanishes at the start index");
      Int bin;
      mpz_bin_ui(bin.get_mpz_t(), u.num().get_mpz_t(), mpz_get_ui(l.num().get_mpz_t()));
      return Rational(bin);
    }
    case TermFactor::Kind::Polynomial:
      return f.poly(Rational(k));
    case TermFactor::Kind::Geometric:
      return f.base.pow(k);
    case TermFactor::Kind::Rising: {
      if (k < 0) throw std::domain_error("rising factorial needs a nonnegative start");
      Rational v(1);
      for (long i = 0; i < k; ++i) v *= f.base + Rational(i);
      return v;
    }
    case TermFactor::Kind::Factorial: {
      if (k < 0) throw std::domain_error("factorial needs a nonnegative start");
      Int v;
      mpz_fac_ui(v.get_mpz_t(), static_cast<unsigned long>(k));
      return Rational(v);
    }
  }
  throw std::logic_error("factor_value: bad kind");
}

HyperTerm build_term(const TermSpec& spec) {
  RatFunc ratio(Rational(1));
  Rational initial(1);
  for (const TermFactor& f : spec.factors) {
    ratio = ratio * factor_ratio(f).pow(f.exponent);
    Rational v = factor_value(f, spec.start);
    if (v.is_zero() && f.exponent < 0)
      throw std::domain_error("term denominator vanishes at the start index");
    initial *= v.pow(f.exponent);
  }
  return HyperTerm(ratio, spec.start, initial, render_term(spec));
}

RatFunc parse_ratfunc(const std::string& input) {
  TParser p(input);
  PV v = p.parse();
  if (!v.pure()) throw std::invalid_argument("expected a plain rational function in k");
  return v.rf;
}

Poly parse_poly(const std::string& input) {
  RatFunc r = parse_ratfunc(input);
  if (!r.is_polynomial()) throw std::invalid_argument("expected a polynomial in k");
  return r.as_poly();
}

CongruenceTarget parse_congruence_target(const std::string& input) {
  // sum of products of: 'p' ['^' int], '(-1/p)', integer ['^(p-1)'], '/' int
  CongruenceTarget t;
  size_t pos = 0;
  const std::string& s = input;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("congruence target: " + what + " at position " +
                                std::to_string(pos));
  };
  skip();
  while (pos < s.size()) {
    int sign = 1;
    skip();
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
      skip();
    }
    if (pos >= s.size()) fail("dangling sign");
    CongruenceTarget::Term term;
    term.coeff = Rational(sign);
    bool any = false;
    while (true) {
      skip();
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') break;
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (s[pos] == '/') {
        ++pos;
        skip();
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) fail("expected an integer after '/'");
        term.coeff /= Rational(Int(s.substr(st, pos - st)), Int(1));
        any = true;
        continue;
      }
      if (s.compare(pos, 6, "(-1/p)") == 0) {
        pos += 6;
        term.legendre_factor = !term.legendre_factor;
        any = true;
        continue;
      }
      if (s[pos] == 'p') {
        ++pos;
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          size_t st = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (st == pos) fail("expected an exponent");
          e = std::stoi(s.substr(st, pos - st));
        }
        term.p_power += e;
        any = true;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Int n(s.substr(st, pos - st));
        skip();
        if (s.compare(pos, 6, "^(p-1)") == 0) {
          pos += 6;
          if (term.base_power) fail("two exponential factors in one term");
          term.base_power = n;
        } else {
          term.coeff *= Rational(n);
        }
        any = true;
        continue;
      }
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
    if (!any) fail("empty term");
    t.terms.push_back(std::move(term));
    skip();
  }
  if (t.terms.empty()) throw std::invalid_argument("congruence target: empty input");
  return t;
}

}  // namespace hypsum
