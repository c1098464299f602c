#include "hypsum/constants.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hypsum {

std::string symbol_name(ConstantSymbol s) {
  switch (s) {
    case ConstantSymbol::One: return "1";
    case ConstantSymbol::InvPi: return "1/pi";
    case ConstantSymbol::PiSq: return "pi^2";
  }
  return "?";
}

ConstantExpr::ConstantExpr(const Rational& rational_part) {
  if (!rational_part.is_zero()) terms_[ConstantSymbol::One] = rational_part;
}

ConstantExpr ConstantExpr::term(ConstantSymbol s, const Rational& coeff) {
  ConstantExpr e;
  if (!coeff.is_zero()) e.terms_[s] = coeff;
  return e;
}

Rational ConstantExpr::coeff(ConstantSymbol s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ConstantExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.count(ConstantSymbol::One));
}

ConstantExpr ConstantExpr::operator-() const {
  ConstantExpr e = *this;
  for (auto& [s, c] : e.terms_) c = -c;
  return e;
}

ConstantExpr& ConstantExpr::operator+=(const ConstantExpr& o) {
  for (const auto& [s, c] : o.terms_) {
    Rational v = coeff(s) + c;
    if (v.is_zero())
      terms_.erase(s);
    else
      terms_[s] = v;
  }
  return *this;
}

ConstantExpr& ConstantExpr::operator-=(const ConstantExpr& o) { return *this += -o; }

ConstantExpr& ConstantExpr::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [sym, c] : terms_) c *= s;
  return *this;
}

std::string ConstantExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (ConstantSymbol s : {ConstantSymbol::One, ConstantSymbol::PiSq, ConstantSymbol::InvPi}) {
    Rational c = coeff(s);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    switch (s) {
      case ConstantSymbol::One: os << a.str(); break;
      case ConstantSymbol::PiSq:
        if (!a.is_one()) os << a.str() << "*";
        os << "pi^2";
        break;
      case ConstantSymbol::InvPi:
        os << a.num().get_str();
        if (a.den() != 1) os << "/(" << a.den().get_str() << "*pi)";
        else os << "/pi";
        break;
    }
  }
  return os.str();
}

namespace {

/// Parser value: expr * pi^pi_pow. The registry only admits pi powers
/// {-1, 0, 2} once fully combined; intermediates may hold pi^1.
struct Val {
  ConstantExpr expr;
  int pi_pow = 0;
};

struct CParser {
  const std::string& s;
  size_t pos = 0;

  explicit CParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("constant expression: " + what + " at position " +
                                std::to_string(pos));
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

  ConstantExpr collapse(const Val& v) {
    if (v.pi_pow == 0) return v.expr;
    if (!v.expr.is_rational())
      fail("pi may not multiply a mixed constant sum");
    Rational c = v.expr.coeff(ConstantSymbol::One);
    switch (v.pi_pow) {
      case -1: return ConstantExpr::term(ConstantSymbol::InvPi, c);
      case 2: return ConstantExpr::term(ConstantSymbol::PiSq, c);
      default: fail("pi^" + std::to_string(v.pi_pow) + " is outside the registry {1, 1/pi, pi^2}");
    }
  }

  ConstantExpr parse() {
    ConstantExpr e = sum();
    skip();
    if (pos != s.size()) fail("trailing input");
    return e;
  }

  ConstantExpr sum() {
    ConstantExpr acc = collapse(signed_product());
    while (true) {
      skip();
      if (eat('+'))
        acc += collapse(signed_product());
      else if (eat('-'))
        acc -= collapse(signed_product());
      else
        return acc;
    }
  }

  Val signed_product() {
    bool neg = false;
    skip();
    while (eat('-')) neg = !neg;
    Val v = product();
    if (neg) v.expr = -v.expr;
    return v;
  }

  Val product() {
    Val acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        Val b = power();
        acc = mul(acc, b);
      } else if (eat('/')) {
        Val b = power();
        if (!b.expr.is_rational()) fail("division by a mixed constant sum");
        Rational c = b.expr.coeff(ConstantSymbol::One);
        if (c.is_zero()) fail("division by zero");
        acc.expr *= c.inverse();
        acc.pi_pow -= b.pi_pow;
      } else {
        return acc;
      }
    }
  }

  Val mul(const Val& a, const Val& b) {
    if (a.expr.is_rational())
      return Val{b.expr * a.expr.coeff(ConstantSymbol::One), a.pi_pow + b.pi_pow};
    if (b.expr.is_rational())
      return Val{a.expr * b.expr.coeff(ConstantSymbol::One), a.pi_pow + b.pi_pow};
    fail("product of two non-rational constant sums");
  }

  Val power() {
    Val base = atom();
    skip();
    if (!eat('^')) return base;
    int e = int_lit();
    if (base.expr.is_rational() && base.pi_pow == 0)
      return Val{ConstantExpr(base.expr.coeff(ConstantSymbol::One).pow(e)), 0};
    if (base.expr == ConstantExpr(Rational(1)))
      return Val{base.expr, base.pi_pow * e};
    fail("exponent on a mixed constant sum");
  }

  Val atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    if (s.compare(pos, 2, "pi") == 0) {
      pos += 2;
      return Val{ConstantExpr(Rational(1)), 1};
    }
    if (s[pos] == '(') {
      ++pos;
      ConstantExpr inner = sum();
      if (!eat(')')) fail("missing ')'");
      return Val{inner, 0};
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Val{ConstantExpr(Rational(Int(s.substr(start, pos - start)), Int(1))), 0};
    }
    fail(std::string("unexpected character '") + s[pos] + "'");
  }

  int int_lit() {
    skip();
    bool neg = eat('-');
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer exponent");
    int v = std::stoi(s.substr(start, pos - start));
    return neg ? -v : v;
  }
};

}  // namespace

ConstantExpr parse_constant_expr(const std::string& input) {
  if (input.empty()) throw std::invalid_argument("constant expression: empty input");
  CParser p(input);
  return p.parse();
}

}  // namespace hypsum
