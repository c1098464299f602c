#include "hypsum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hypsum {

Poly Poly::monomial(const Rational& c, int e) {
  if (c.is_zero()) return Poly();
  if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<Rational> v(static_cast<size_t>(e) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Rational& s) {
  if (s.is_zero()) throw std::domain_error("Poly: division by zero scalar");
  for (auto& c : c_) c /= s;
  return *this;
}

bool Poly::less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::shift(long h) const {
  if (h == 0 || is_zero()) return *this;
  // Horner in (k+h)
  Poly r, kh = var() + Poly(Rational(h));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * kh + Poly(*it);
  return r;
}

Rational Poly::signed_content() const {
  if (is_zero()) return Rational(0);
  Rational g;
  for (const auto& c : c_) g = gcd(g, c);
  return leading().sign() < 0 ? -g : g;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    if (i == 0 || !a.is_one()) os << a.str();
    if (i > 0) {
      if (!a.is_one()) os << "*";
      os << "k";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly q, r = a;
  const Rational blc = b.leading();
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    Rational c = r.leading() / blc;
    int e = r.degree() - db;
    Poly t = Poly::monomial(c, e);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

bool divides(const Poly& b, const Poly& a, Poly* q) {
  if (b.is_zero()) return a.is_zero();
  auto [qq, rr] = divmod(a, b);
  if (!rr.is_zero()) return false;
  if (q) *q = qq;
  return true;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = remainder(x, y);
    x = y;
    y = r.is_zero() ? r : r.monic();  // monic each step keeps coefficients small
  }
  return x.is_zero() ? x : x.monic();
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  // Newton form with divided differences.
  const size_t n = points.size();
  std::vector<Rational> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly r, prod(1);
  for (size_t i = 0; i < n; ++i) {
    r += prod * dd[i];
    prod *= Poly::var() - Poly(points[i].first);
  }
  return r;
}

Rational resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  if (a.is_zero() || b.is_zero()) return Rational(0);
  if (m == 0) return a.leading().pow(n);
  if (n == 0) return b.leading().pow(m);
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<size_t>(size),
                                       std::vector<Rational>(static_cast<size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
  // fraction Gaussian elimination, tracking the determinant
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (!s[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col].is_zero()) continue;
      Rational f = s[r][col] / s[col][col];
      for (int cc = col; cc < size; ++cc) s[r][cc] -= f * s[col][cc];
    }
  }
  return det;
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() <= 0) return out;
  // Yun's algorithm
  Poly fp = f.derivative();
  Poly a0 = poly_gcd(f, fp);
  Poly b = quotient(f, a0);
  Poly c = quotient(fp, a0);
  Poly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Poly ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = quotient(b, ai);
    c = quotient(d, ai);
    d = c - b.derivative();
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return Poly::less(x.first, y.first); });
  return out;
}

namespace {

std::vector<Int> divisors_of(const Int& n0) {
  Int n = abs(n0);
  if (n == 0) return {};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40)
    throw std::domain_error("rational_roots: extreme coefficient too large to factor");
  std::vector<Int> out;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      out.push_back(n / i);
    }
  }
  return out;
}

}  // namespace

std::set<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::set<Rational> roots;
  Poly q = p.primitive_part();
  // strip k^m
  int low = 0;
  while (low <= q.degree() && q.coeff(low).is_zero()) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    std::vector<Rational> v(q.coeffs().begin() + low, q.coeffs().end());
    q = Poly(std::move(v));
  }
  if (q.degree() <= 0) return roots;
  const Int c0 = q.coeff(0).num();  // integer poly: den = 1
  const Int cd = q.leading().num();
  for (const Int& u : divisors_of(c0))
    for (const Int& v : divisors_of(cd)) {
      Rational r(u, v);
      if (q(r).is_zero()) roots.insert(r);
      if (q(-r).is_zero()) roots.insert(-r);
    }
  return roots;
}

Rational root_bound(const Poly& p) {
  if (p.degree() <= 0) return Rational(0);
  Rational m;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = (p.coeff(i) / p.leading()).abs();
    if (q > m) m = q;
  }
  return m + Rational(1);
}

namespace {

long ceil_to_long(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::domain_error("root window too large");
  return q.get_si();
}

}  // namespace

std::vector<long> integer_roots_in(const Poly& p, long lo, long hi) {
  if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
  std::vector<long> out;
  for (long h = lo; h <= hi; ++h)
    if (p(Rational(h)).is_zero()) out.push_back(h);
  return out;
}

std::vector<long> integer_roots(const Poly& p) {
  if (p.degree() <= 0) return {};
  long m = ceil_to_long(root_bound(p));
  return integer_roots_in(p, -m, m);
}

std::vector<long> dispersion_set(const Poly& a, const Poly& b, ShiftDomain domain) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("dispersion_set: zero polynomial");
  if (a.degree() <= 0 || b.degree() <= 0) return {};
  // R(h) = Res_k(a(k), b(k+h)) has degree <= deg a * deg b in h; sample and interpolate.
  const int dr = a.degree() * b.degree();
  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(static_cast<size_t>(dr) + 1);
  for (long h = 0; h <= dr; ++h) samples.emplace_back(Rational(h), resultant(a, b.shift(h)));
  Poly r = interpolate(samples);
  // any common root of a(k), b(k+h) forces |h| <= |root_a| + |root_b|
  long window = ceil_to_long(root_bound(a) + root_bound(b));
  long lo = domain == ShiftDomain::NonNegative ? 0 : -window;
  if (r.is_zero()) throw std::logic_error("dispersion_set: vanishing resultant");
  return integer_roots_in(r, lo, window);
}

}  // namespace hypsum
