#include "jetexc/elliptic.hpp"

#include <algorithm>
#include <atomic>

#include "jetexc/groebner.hpp"

namespace jetexc {

namespace {

std::atomic<bool> g_fault{false};

bool rf_zero(const RationalFunction& a) { return a.is_zero(); }
bool rf_equal(const KPoint& a, const KPoint& b) { return a.x == b.x && a.y == b.y; }

}  // namespace

void set_fault_injection(bool on) { g_fault.store(on); }
bool fault_injection() { return g_fault.load(); }

EllipticCurve::EllipticCurve(std::array<RationalFunction, 5> a) : a_(std::move(a)) {
  const std::uint32_t p = a_[0].prime();
  auto k = [p](long long c) { return RationalFunction(p, c); };
  const auto& [a1, a2, a3, a4, a6] = a_;
  const RationalFunction b2 = a1 * a1 + k(4) * a2;
  const RationalFunction b4 = k(2) * a4 + a1 * a3;
  const RationalFunction b6 = a3 * a3 + k(4) * a6;
  const RationalFunction b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  const RationalFunction c4 = b2 * b2 - k(24) * b4;
  disc_ = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
  if (disc_.is_zero()) throw DomainError("elliptic curve: discriminant vanishes");
  j_ = c4 * c4 * c4 / disc_;
}

EllipticCurve EllipticCurve::parse(const std::array<std::string, 5>& a, std::uint32_t p) {
  std::array<RationalFunction, 5> v;
  static const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
  for (int i = 0; i < 5; ++i) {
    try {
      v[i] = parse_rational_function(a[i], p);
    } catch (const ParseError& e) {
      throw ParseError(names[i], e.what());
    }
  }
  return EllipticCurve(v);
}

Poly EllipticCurve::weierstrass(const RingPtr& ring, std::size_t xi, std::size_t yi) const {
  const Poly x = Poly::variable(ring, xi), y = Poly::variable(ring, yi);
  auto c = [&](const RationalFunction& v) { return Poly::constant(ring, v); };
  return y * y + c(a1()) * x * y + c(a3()) * y - x * x * x - c(a2()) * x * x - c(a4()) * x - c(a6());
}

bool EllipticCurve::contains(const RationalFunction& x, const RationalFunction& y) const {
  return (y * y + a1() * x * y + a3() * y - x * x * x - a2() * x * x - a4() * x - a6()).is_zero();
}

std::array<std::string, 5> EllipticCurve::serialize() const {
  std::array<std::string, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = a_[i].str();
  return out;
}

bool is_nonisotrivial(const EllipticCurve& e) { return !e.j_invariant().is_constant(); }

Coeffs<RationalFunction> coeffs(const EllipticCurve& e) {
  return {e.a1(), e.a2(), e.a3(), e.a4(), e.a6(), RationalFunction(e.prime(), 1)};
}

Coeffs<Jet> jet_coeffs(const EllipticCurve& e, std::size_t n) {
  auto j = [n](const RationalFunction& a) { return Jet(a.taylor(n)); };
  return {j(e.a1()), j(e.a2()), j(e.a3()), j(e.a4()), j(e.a6()), j(RationalFunction(e.prime(), 1))};
}

KPoint add(const EllipticCurve& e, const KPoint& p, const KPoint& q) {
  return add(coeffs(e), p, q, rf_zero, rf_equal);
}

KPoint negate(const EllipticCurve& e, const KPoint& p) { return negate(coeffs(e), p); }

KPoint scalar_mul(const EllipticCurve& e, long long m, const KPoint& p) {
  return multiply(coeffs(e), m, p, rf_zero, rf_equal);
}

JetCurvePoint lift(const KPoint& p, std::size_t n) {
  if (p.infinity) return JetCurvePoint::identity();
  return JetCurvePoint::at(Jet(p.x.taylor(n)), Jet(p.y.taylor(n)));
}

JetCurvePoint jet_add(const EllipticCurve& e, const JetCurvePoint& p, const JetCurvePoint& q, std::size_t n) {
  auto is_zero = [](const Jet& a) { return a[0].is_zero(); };
  auto equal = [](const JetCurvePoint& a, const JetCurvePoint& b) { return a.x == b.x && a.y == b.y; };
  return add(jet_coeffs(e, n), p, q, is_zero, equal);
}

namespace {

RationalExpr normalized(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational expression: zero denominator");
  const RationalFunction lc = den.lead_coeff();
  if (!lc.is_one()) {
    const RationalFunction inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (num.is_zero()) den = Poly::constant(den.ring(), RationalFunction(den.prime(), 1));
  return {std::move(num), std::move(den)};
}

}  // namespace

RationalExpr RationalExpr::constant(const RingPtr& ring, const RationalFunction& c) {
  return {Poly::constant(ring, c), Poly::constant(ring, RationalFunction(ring->prime(), 1))};
}

RationalExpr RationalExpr::variable(const RingPtr& ring, std::size_t i) {
  return {Poly::variable(ring, i), Poly::constant(ring, RationalFunction(ring->prime(), 1))};
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den == b.den) return normalized(a.num + b.num, a.den);
  return normalized(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  if (a.num == b.den) return normalized(b.num, a.den);
  if (b.num == a.den) return normalized(a.num, b.den);
  return normalized(a.num * b.num, a.den * b.den);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num.is_zero()) throw DomainError("rational expression: division by zero");
  if (a.den == b.den) return normalized(a.num, b.num);
  return normalized(a.num * b.den, a.den * b.num);
}

Coeffs<RationalExpr> symbolic_coeffs(const EllipticCurve& e, const RingPtr& ring) {
  auto c = [&](const RationalFunction& v) { return RationalExpr::constant(ring, v); };
  return {c(e.a1()), c(e.a2()), c(e.a3()), c(e.a4()), c(e.a6()), c(RationalFunction(e.prime(), 1))};
}

namespace {

// Dense univariate polynomials over K, low degree first, for cancelling
// common factors in x.
using KPoly = std::vector<RationalFunction>;

void trim(KPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

KPoly kpoly_mod(KPoly a, const KPoly& b) {
  trim(a);
  const RationalFunction inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const RationalFunction q = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
    trim(a);
  }
  return a;
}

KPoly kpoly_div(KPoly a, const KPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  KPoly q(a.size() - b.size() + 1, RationalFunction(b.back().prime()));
  const RationalFunction inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const RationalFunction c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    trim(a);
  }
  return q;
}

KPoly kpoly_gcd(KPoly a, KPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    KPoly r = kpoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Coefficient list in variable `v` of a polynomial involving only that variable.
KPoly to_kpoly(const Poly& f, std::size_t v) {
  KPoly out(static_cast<std::size_t>(std::max(0, f.degree_in(v))) + 1, RationalFunction(f.prime()));
  for (const auto& t : f.terms()) out[t.m.e[v]] = t.c;
  trim(out);
  return out;
}

Poly from_kpoly(const KPoly& f, const RingPtr& r, std::size_t v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    Monomial m{};
    m.e[v] = static_cast<std::uint8_t>(i);
    m.deg = static_cast<std::uint16_t>(i);
    terms.push_back({m, f[i]});
  }
  return Poly::from_terms(r, std::move(terms));
}

// Splits f = a + b*y (variable 0 is y, 1 is x) for f of y-degree <= 1.
std::pair<Poly, Poly> split_y(const Poly& f) {
  const RingPtr& r = f.ring();
  Poly a(r), b(r);
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    if (m.e[0] == 0) {
      a += Poly::from_sorted_terms(r, {t});
    } else {
      m.e[0] = 0;
      m.deg = static_cast<std::uint16_t>(m.deg - 1);
      b += Poly::from_sorted_terms(r, {{m, t.c}});
    }
  }
  return {a, b};
}

// Rewrites num/den as (a + b*y)/n(x) modulo the Weierstrass relation, where the
// ring orders y first lexicographically so the relation leads with y^2.
RationalExpr on_curve(const RationalExpr& f, const Poly& w, const EllipticCurve& e) {
  const RingPtr& r = w.ring();
  const std::vector<Poly> basis{w};
  const Poly num = reduce_full(f.num, basis), den = reduce_full(f.den, basis);
  if (den.is_zero()) throw DomainError("multiplication_map: denominator vanishes on the curve");
  Poly n = den, top = num;
  if (den.degree_in(0) > 0) {
    // den = a + b*y; its conjugate a + b*(-y - a1*x - a3) has a y-free product with den.
    const auto [a, b] = split_y(den);
    const Poly y = Poly::variable(r, 0), x = Poly::variable(r, 1);
    const Poly conj = a - b * (y + Poly::constant(r, e.a1()) * x + Poly::constant(r, e.a3()));
    top = reduce_full(num * conj, basis);
    n = reduce_full(den * conj, basis);
  }
  // Cancel the common factor of the x-polynomials in (a + b*y)/n.
  const auto [na, nb] = split_y(top);
  KPoly g = to_kpoly(n, 1);
  g = kpoly_gcd(g, to_kpoly(na, 1));
  g = kpoly_gcd(g, to_kpoly(nb, 1));
  if (g.size() > 1) {
    const Poly y = Poly::variable(r, 0);
    top = from_kpoly(kpoly_div(to_kpoly(na, 1), g), r, 1) + from_kpoly(kpoly_div(to_kpoly(nb, 1), g), r, 1) * y;
    n = from_kpoly(kpoly_div(to_kpoly(n, 1), g), r, 1);
  }
  return normalized(top, n);
}

}  // namespace

AffinePoint<RationalExpr> multiplication_map(const EllipticCurve& e, const RingPtr& ring, std::size_t xi,
                                             std::size_t yi, long long m) {
  if (m < 1) throw DomainError("multiplication_map: m must be positive");
  const RingPtr local = PolyRing::make(e.prime(), {"y", "x"}, TermOrder::lex());
  const Poly w = e.weierstrass(local, 1, 0);
  const auto c = symbolic_coeffs(e, local);
  const auto generic = AffinePoint<RationalExpr>::at(RationalExpr::variable(local, 1), RationalExpr::variable(local, 0));
  auto reduce = [&](const AffinePoint<RationalExpr>& p) {
    return AffinePoint<RationalExpr>::at(on_curve(p.x, w, e), on_curve(p.y, w, e));
  };
  // Left-to-right binary ladder: every intermediate multiple kP with k >= 2
  // is generically distinct from +-P, so the generic formulas apply.
  AffinePoint<RationalExpr> acc = generic;
  int top = 62;
  while (!((m >> top) & 1)) --top;
  for (int b = top - 1; b >= 0; --b) {
    acc = reduce(tangent_double(c, acc));
    if ((m >> b) & 1) acc = reduce(chord_add(c, acc, generic));
  }
  std::vector<Poly> images(2, Poly(ring));
  images[0] = Poly::variable(ring, yi);
  images[1] = Poly::variable(ring, xi);
  auto back = [&](const RationalExpr& f) { return RationalExpr{f.num.substitute(ring, images), f.den.substitute(ring, images)}; };
  return AffinePoint<RationalExpr>::at(back(acc.x), back(acc.y));
}

}  // namespace jetexc
