// Jet schemes J^n(W/K) of affine presentations, realised by the substitution
// t -> t + eps, x -> sum_j x@j eps^j modulo eps^(n+1).
#pragma once

#include <string>
#include <vector>

#include "jetexc/ideal.hpp"
#include "jetexc/series.hpp"

namespace jetexc {

/// A closed subscheme of affine space over K: coordinate ring variables plus ideal.
struct AffinePresentation {
  RingPtr ring;
  Ideal ideal;

  static AffinePresentation affine_space(std::uint32_t p, std::vector<std::string> names);
  static AffinePresentation parse(std::uint32_t p, std::vector<std::string> names,
                                  const std::vector<std::string>& generators);
  /// Disjoint product; variable names must not collide.
  static AffinePresentation product(const AffinePresentation& a, const AffinePresentation& b);
};

/// "x@j"
std::string jet_name(const std::string& base, std::size_t order);
/// Variables base@j for j <= n, all order-0 variables first, then order 1, ...
RingPtr jet_ring(const RingPtr& base, std::size_t n);
/// Names of the jet variables of orders lo..hi inclusive.
std::vector<std::string> jet_names(const RingPtr& base, std::size_t lo, std::size_t hi);

struct JetPresentation {
  std::size_t order = 0;
  RingPtr ring;                          // jet ring over origin.ring
  Ideal ideal;
  std::vector<std::vector<Poly>> graded;  // graded[j]: eps^j coefficients of the generators
  AffinePresentation origin;
};

/// Coordinates of a point, listed in the order of `ring`.
struct JetPoint {
  RingPtr ring;
  std::vector<RationalFunction> coords;
  friend bool operator==(const JetPoint& a, const JetPoint& b) { return a.coords == b.coords; }
};

/// Expansion of f(t + eps, x(eps)) with x_i(eps) = sum_j x_i@j eps^j, in the jet ring.
Truncated<Poly> prolong_poly(const Poly& f, const RingPtr& jring, std::size_t n);
/// Same expansion, with the variable series supplied by the caller.
Truncated<Poly> expand_poly(const Poly& f, const std::vector<Truncated<Poly>>& var_series,
                            const RingPtr& target, std::size_t n);

JetPresentation prolong_ideal(const AffinePresentation& w, std::size_t n);

/// Keeps the generators of eps-degree <= m (Lambda_{n,m}).
JetPresentation truncate(const JetPresentation& j, std::size_t m);
JetPoint truncate(const JetPoint& p, const RingPtr& base, std::size_t m);

/// lambda_n: coordinates x_i@j = j-th Hasse-Taylor coefficient of x_i(t).
/// Throws DomainError naming the violated generator when P is not on W.
JetPoint lift_point(const AffinePresentation& w, const std::vector<RationalFunction>& point, std::size_t n);

/// A polynomial map: components[i] is the image of the i-th target variable,
/// a polynomial on the source ring.
struct PolyMap {
  RingPtr source;
  RingPtr target;
  std::vector<Poly> components;

  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& point) const;
  /// (this o inner)
  PolyMap compose(const PolyMap& inner) const;
  static PolyMap identity(const RingPtr& ring);
};

/// J^n(g) as a polynomial map between jet rings.
PolyMap prolong_morphism(const PolyMap& g, std::size_t n);
JetPoint apply(const PolyMap& jet_map, const JetPoint& p);

struct JetProductSplit {
  JetPresentation first, second;
  JetPresentation product;  // union of factor generators in the product jet ring
};
JetProductSplit jet_product_split(const AffinePresentation& a, const AffinePresentation& b, std::size_t n);

}  // namespace jetexc
