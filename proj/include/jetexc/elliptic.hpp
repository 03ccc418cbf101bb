// Long Weierstrass elliptic curves over K and the chord-tangent group law,
// written once over any field-like coefficient type so the same formulas
// serve K-points, jets (truncated series over K) and symbolic rational maps.
#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "jetexc/poly.hpp"
#include "jetexc/series.hpp"

namespace jetexc {

class EllipticCurve {
 public:
  /// a = {a1, a2, a3, a4, a6}. Throws DomainError for a singular curve.
  explicit EllipticCurve(std::array<RationalFunction, 5> a);
  static EllipticCurve parse(const std::array<std::string, 5>& a, std::uint32_t p);

  std::uint32_t prime() const { return a_[0].prime(); }
  const RationalFunction& a1() const { return a_[0]; }
  const RationalFunction& a2() const { return a_[1]; }
  const RationalFunction& a3() const { return a_[2]; }
  const RationalFunction& a4() const { return a_[3]; }
  const RationalFunction& a6() const { return a_[4]; }
  const std::array<RationalFunction, 5>& coefficients() const { return a_; }
  const RationalFunction& discriminant() const { return disc_; }
  const RationalFunction& j_invariant() const { return j_; }

  /// y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6 in the given variables.
  Poly weierstrass(const RingPtr& ring, std::size_t xi, std::size_t yi) const;
  bool contains(const RationalFunction& x, const RationalFunction& y) const;
  std::array<std::string, 5> serialize() const;

 private:
  std::array<RationalFunction, 5> a_;
  RationalFunction disc_, j_;
};

/// j(E) not in F_p: the curve is not isotrivial.
bool is_nonisotrivial(const EllipticCurve& e);

/// Process-wide negative-control switch: when on, the K-point chord law uses
/// a perturbed slope. Jet-level and symbolic formulas are unaffected.
void set_fault_injection(bool on);
bool fault_injection();
struct FaultInjectionScope {
  explicit FaultInjectionScope(bool on) : previous(fault_injection()) { set_fault_injection(on); }
  ~FaultInjectionScope() { set_fault_injection(previous); }
  FaultInjectionScope(const FaultInjectionScope&) = delete;
  FaultInjectionScope& operator=(const FaultInjectionScope&) = delete;
  bool previous;
};

/// Curve coefficients lifted into F.
template <class F>
struct Coeffs {
  F a1, a2, a3, a4, a6, one;
};

template <class F>
struct AffinePoint {
  bool infinity = true;
  F x{}, y{};
  static AffinePoint identity() { return {}; }
  static AffinePoint at(F x, F y) { return {false, std::move(x), std::move(y)}; }
};

template <class F>
F scalar_int(const F& one, int k) {
  F r = one - one;
  const F step = k >= 0 ? one : -one;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r + step;
  return r;
}

template <class F>
AffinePoint<F> negate(const Coeffs<F>& c, const AffinePoint<F>& p) {
  if (p.infinity) return p;
  return AffinePoint<F>::at(p.x, -p.y - c.a1 * p.x - c.a3);
}

namespace detail {

template <class F>
AffinePoint<F> finish(const Coeffs<F>& c, const F& lambda, const F& nu, const F& x1, const F& x2) {
  F x3 = lambda * lambda + c.a1 * lambda - c.a2 - x1 - x2;
  F y3 = -(lambda + c.a1) * x3 - nu - c.a3;
  return AffinePoint<F>::at(std::move(x3), std::move(y3));
}

}  // namespace detail

/// Chord through P and Q, valid where x(P) != x(Q).
template <class F>
AffinePoint<F> chord_add(const Coeffs<F>& c, const AffinePoint<F>& p, const AffinePoint<F>& q) {
  const F dx = q.x - p.x;
  F lambda = (q.y - p.y) / dx;
  if constexpr (std::is_same_v<F, RationalFunction>) {
    if (fault_injection()) lambda = lambda + c.one;
  }
  const F nu = (p.y * q.x - q.y * p.x) / dx;
  return detail::finish(c, lambda, nu, p.x, q.x);
}

/// Tangent doubling, valid where 2y + a1 x + a3 != 0.
template <class F>
AffinePoint<F> tangent_double(const Coeffs<F>& c, const AffinePoint<F>& p) {
  const F two = scalar_int(c.one, 2), three = scalar_int(c.one, 3);
  const F den = two * p.y + c.a1 * p.x + c.a3;
  const F lambda = (three * p.x * p.x + two * c.a2 * p.x + c.a4 - c.a1 * p.y) / den;
  const F nu = (-(p.x * p.x * p.x) + c.a4 * p.x + two * c.a6 - c.a3 * p.y) / den;
  return detail::finish(c, lambda, nu, p.x, p.x);
}

/// Full case analysis. `is_zero` decides vanishing in F (for jets: of the
/// constant term); `equal` decides P == Q when x-coordinates collide.
template <class F, class IsZero, class Equal>
AffinePoint<F> add(const Coeffs<F>& c, const AffinePoint<F>& p, const AffinePoint<F>& q, IsZero is_zero,
                   Equal equal) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (is_zero(p.x - q.x)) {
    if (is_zero(p.y + q.y + c.a1 * q.x + c.a3)) return AffinePoint<F>::identity();
    if (!equal(p, q)) throw DomainError("group law: jets over the same point with different higher terms");
    return tangent_double(c, p);
  }
  return chord_add(c, p, q);
}

template <class F, class IsZero, class Equal>
AffinePoint<F> multiply(const Coeffs<F>& c, long long m, const AffinePoint<F>& p, IsZero is_zero, Equal equal) {
  AffinePoint<F> base = m < 0 ? negate(c, p) : p;
  unsigned long long k = m < 0 ? static_cast<unsigned long long>(-m) : static_cast<unsigned long long>(m);
  AffinePoint<F> acc = AffinePoint<F>::identity();
  while (k) {
    if (k & 1) acc = add(c, acc, base, is_zero, equal);
    k >>= 1;
    if (k) base = add(c, base, base, is_zero, equal);
  }
  return acc;
}

using KPoint = AffinePoint<RationalFunction>;
using Jet = Truncated<RationalFunction>;
using JetCurvePoint = AffinePoint<Jet>;

Coeffs<RationalFunction> coeffs(const EllipticCurve& e);
/// Coefficients expanded along t -> t + eps (the jet of the curve itself).
Coeffs<Jet> jet_coeffs(const EllipticCurve& e, std::size_t n);

KPoint add(const EllipticCurve& e, const KPoint& p, const KPoint& q);
KPoint negate(const EllipticCurve& e, const KPoint& p);
KPoint scalar_mul(const EllipticCurve& e, long long m, const KPoint& p);

/// Hasse-Taylor lift of a K-point to its n-jet.
JetCurvePoint lift(const KPoint& p, std::size_t n);
/// J^n(add) on jets.
JetCurvePoint jet_add(const EllipticCurve& e, const JetCurvePoint& p, const JetCurvePoint& q, std::size_t n);

/// A rational function num/den on a polynomial ring; no cancellation is attempted.
struct RationalExpr {
  Poly num, den;

  static RationalExpr constant(const RingPtr& ring, const RationalFunction& c);
  static RationalExpr variable(const RingPtr& ring, std::size_t i);
  RationalExpr operator-() const { return {-num, den}; }
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalFunction evaluate(const std::vector<RationalFunction>& point) const {
    return num.evaluate(point) / den.evaluate(point);
  }
};

Coeffs<RationalExpr> symbolic_coeffs(const EllipticCurve& e, const RingPtr& ring);

/// [m] on the generic point (x, y) of E as rational functions in (x, y),
/// built from the generic tangent and chord formulas. m >= 1.
AffinePoint<RationalExpr> multiplication_map(const EllipticCurve& e, const RingPtr& ring, std::size_t xi,
                                             std::size_t yi, long long m);

}  // namespace jetexc
