#include "hypsum/latex.hpp"

#include <algorithm>
#include <sstream>

namespace hypsum {

namespace {

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.num().get_str();
  std::string sign = r.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + r.num().get_str().substr(r.sign() < 0 ? 1 : 0) + "}{" +
         r.den().get_str() + "}";
}

struct Piece {
  std::string body;
  int exponent = 1;
  bool needs_parens = true;
};

std::string monomial_latex(int power) {
  if (power == 0) return "1";
  if (power == 1) return "k";
  return "k^" + std::to_string(power);
}

}  // namespace

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    Rational a = c.abs();
    if (i == 0 || !a.is_one()) os << rational_latex(a);
    if (i > 0) os << monomial_latex(i);
  }
  return os.str();
}

namespace {

struct FactoredPoly {
  Rational scale;
  std::vector<std::pair<Poly, int>> factors;  // primitive, ordered
};

FactoredPoly factor_for_display(const Poly& p) {
  FactoredPoly out;
  out.scale = p.is_zero() ? Rational(0) : p.leading();
  if (p.degree() <= 0) {
    out.scale = p.coeff(0);
    return out;
  }

  struct F {
    Poly prim;
    int mult;
    std::optional<Rational> root;
  };
  std::vector<F> fs;
  Rational unit(1);
  for (const auto& [f, mult] : squarefree_decompose(p.primitive_part())) {
    Poly rest = f;
    std::set<Rational> roots;
    try {
      roots = rational_roots(f);
    } catch (const std::domain_error&) {
      // coefficients too large to factor; keep the block atomic
    }
    for (const Rational& r : roots) {
      Poly lin = (Poly::var() - Poly(r)).primitive_part();
      fs.push_back({lin, mult, r});
      unit *= lin.leading().pow(-mult);
      rest = quotient(rest, Poly::var() - Poly(r));
    }
    if (rest.degree() > 0) {
      Poly prim = rest.primitive_part();
      unit *= (rest.leading() / prim.leading()).pow(mult);
      fs.push_back({prim, mult, std::nullopt});
    }
  }
  std::sort(fs.begin(), fs.end(), [](const F& a, const F& b) {
    if (a.root && b.root) return *a.root < *b.root;
    if (a.root != b.root) return a.root.has_value();
    return Poly::less(a.prim, b.prim);
  });
  out.scale = out.scale * unit;
  for (auto& f : fs) out.factors.emplace_back(std::move(f.prim), f.mult);
  return out;
}

std::string factored_pieces_latex(const std::vector<Piece>& pieces) {
  std::ostringstream os;
  bool sole = pieces.size() == 1;
  for (const Piece& pc : pieces) {
    bool parens = pc.needs_parens && !(sole && pc.exponent == 1);
    if (parens) os << "(";
    os << pc.body;
    if (parens) os << ")";
    if (pc.exponent != 1) os << "^" << pc.exponent;
  }
  return os.str();
}

std::vector<Piece> poly_pieces(const Poly& p) {
  std::vector<Piece> pieces;
  FactoredPoly f = factor_for_display(p);
  Rational scale = f.scale;
  // fold the scale into a leading numeral piece when it is not 1
  if (!scale.is_one()) pieces.push_back({rational_latex(scale), 1, false});
  for (const auto& [factor, mult] : f.factors) {
    // bare monomials render without parentheses
    bool is_monomial = factor.degree() >= 1 && [&] {
      for (int i = 0; i < factor.degree(); ++i)
        if (!factor.coeff(i).is_zero()) return false;
      return factor.leading().is_one();
    }();
    if (is_monomial && factor.degree() > 1)
      pieces.push_back({monomial_latex(factor.degree() * mult), 1, false});
    else if (is_monomial)
      pieces.push_back({monomial_latex(mult), 1, false});
    else
      pieces.push_back({poly_latex(factor), mult, true});
  }
  if (pieces.empty()) pieces.push_back({"1", 1, false});
  return pieces;
}

}  // namespace

std::string poly_latex_factored(const Poly& p) {
  if (p.is_zero()) return "0";
  return factored_pieces_latex(poly_pieces(p));
}

std::string constant_latex(const ConstantExpr& e) {
  if (e.is_zero()) return "0";
  const Rational one = e.coeff(ConstantSymbol::One);
  const Rational invpi = e.coeff(ConstantSymbol::InvPi);
  const Rational pisq = e.coeff(ConstantSymbol::PiSq);

  // common-denominator form for mixtures of 1 and pi^2
  if (invpi.is_zero() && !pisq.is_zero() && !one.is_zero()) {
    Int l;
    mpz_lcm(l.get_mpz_t(), one.den().get_mpz_t(), pisq.den().get_mpz_t());
    if (l != 1) {
      Rational lo = one * Rational(l), lp = pisq * Rational(l);
      std::ostringstream num;
      if (lp.sign() > 0) {
        if (!lp.is_one()) num << rational_latex(lp);
        num << "\\pi^2" << (lo.sign() < 0 ? "-" : "+") << rational_latex(lo.abs());
      } else {
        num << rational_latex(lo) << "-";
        if (!lp.abs().is_one()) num << rational_latex(lp.abs());
        num << "\\pi^2";
      }
      return "\\frac{" + num.str() + "}{" + l.get_str() + "}";
    }
  }

  struct T {
    Rational c;
    ConstantSymbol s;
  };
  std::vector<T> terms;
  for (ConstantSymbol s : {ConstantSymbol::One, ConstantSymbol::PiSq, ConstantSymbol::InvPi}) {
    Rational c = e.coeff(s);
    if (!c.is_zero()) terms.push_back({c, s});
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const T& a, const T& b) { return a.c.sign() > b.c.sign(); });
  std::ostringstream os;
  bool first = true;
  for (const T& t : terms) {
    if (first) {
      if (t.c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (t.c.sign() < 0 ? " - " : " + ");
    }
    Rational a = t.c.abs();
    switch (t.s) {
      case ConstantSymbol::One: os << rational_latex(a); break;
      case ConstantSymbol::PiSq:
        if (!a.is_one()) os << rational_latex(a);
        os << "\\pi^2";
        break;
      case ConstantSymbol::InvPi:
        os << "\\frac{" << a.num().get_str() << "}{";
        if (a.den() != 1) os << a.den().get_str();
        os << "\\pi}";
        break;
    }
  }
  return os.str();
}

namespace {

/// Splits a term spec into latex product pieces for numerator/denominator,
/// with extra_num/extra_den polynomial parts multiplied in and divide_out
/// removed from the polynomial part (exactly when possible).
void term_fraction_pieces(const TermSpec& spec, const Poly& mult_num, const Poly& mult_den,
                          const Poly& divide_out, std::vector<Piece>& num,
                          std::vector<Piece>& den) {
  Poly knum(1), kden(1);  // polynomial part of the kernel term
  std::vector<Piece> num_special, den_special;
  for (const TermFactor& f : spec.factors) {
    auto& side = f.exponent > 0 ? num_special : den_special;
    int e = std::abs(f.exponent);
    switch (f.kind) {
      case TermFactor::Kind::Polynomial: {
        Poly& acc = f.exponent > 0 ? knum : kden;
        acc *= f.poly.pow(e);
        break;
      }
      case TermFactor::Kind::Binomial:
        side.push_back({"\\binom{" + poly_latex(f.upper.poly()) + "}{" +
                            poly_latex(f.lower.poly()) + "}",
                        e, false});
        break;
      case TermFactor::Kind::Geometric: {
        std::string b = f.base.is_integer() ? f.base.num().get_str() : rational_latex(f.base);
        side.push_back({"(" + b + ")^k", 1, false});
        break;
      }
      case TermFactor::Kind::Rising:
        side.push_back({"(" + rational_latex(f.base) + ")_k", e, false});
        break;
      case TermFactor::Kind::Factorial:
        side.push_back({"k!", e, false});
        break;
    }
  }
  // divide the c-part out of the kernel polynomial part
  if (!divide_out.is_one()) {
    Poly q;
    if (divides(divide_out, knum, &q))
      knum = q;
    else
      kden *= divide_out;
  }
  // multiplier pieces first, then the kernel polynomial part, then the
  // structural factors
  auto add_poly = [](std::vector<Piece>& side, const Poly& p) {
    if (p.is_one()) return;
    auto pieces = poly_pieces(p);
    side.insert(side.end(), pieces.begin(), pieces.end());
  };
  add_poly(num, mult_num);
  add_poly(den, mult_den);
  add_poly(num, knum);
  add_poly(den, kden);
  num.insert(num.end(), num_special.begin(), num_special.end());
  den.insert(den.end(), den_special.begin(), den_special.end());
}

std::string render_sum(long start, const std::vector<Piece>& num, const std::vector<Piece>& den) {
  std::ostringstream os;
  os << "\\sum_{k=" << start << "}^\\infty ";
  std::string n = num.empty() ? "1" : factored_pieces_latex(num);
  if (den.empty()) {
    os << n;
  } else {
    os << "\\frac{" << n << "}{" << factored_pieces_latex(den) << "}";
  }
  return os.str();
}

}  // namespace

std::string emit_latex(const CatalogEntry& entry) {
  std::vector<Piece> num, den;
  if (entry.kind == CatalogEntry::Kind::Base) {
    term_fraction_pieces(entry.base_spec, Poly(1), Poly(1), Poly(1), num, den);
    return render_sum(entry.base_spec.start, num, den) + " = " + constant_latex(entry.base_sum);
  }
  const ForgedIdentity& f = *entry.forged;
  if (f.multiplier.is_zero()) return "0 = 0";
  term_fraction_pieces(entry.base_spec, f.multiplier.num(), f.multiplier.den(), f.c_prim, num,
                       den);
  return render_sum(f.start, num, den) + " = " + constant_latex(f.rhs);
}

}  // namespace hypsum
