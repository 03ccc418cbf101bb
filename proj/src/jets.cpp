#include "jetexc/jets.hpp"

#include <map>

namespace jetexc {

AffinePresentation AffinePresentation::affine_space(std::uint32_t p, std::vector<std::string> names) {
  RingPtr ring = PolyRing::make(p, std::move(names));
  return {ring, Ideal::zero(ring)};
}

AffinePresentation AffinePresentation::parse(std::uint32_t p, std::vector<std::string> names,
                                             const std::vector<std::string>& generators) {
  RingPtr ring = PolyRing::make(p, std::move(names));
  return {ring, Ideal::parse(ring, generators)};
}

AffinePresentation AffinePresentation::product(const AffinePresentation& a, const AffinePresentation& b) {
  std::vector<std::string> names = a.ring->names();
  names.insert(names.end(), b.ring->names().begin(), b.ring->names().end());
  RingPtr ring = PolyRing::make(a.ring->prime(), names);
  std::vector<int> ma(a.ring->nvars()), mb(b.ring->nvars());
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < mb.size(); ++i) mb[i] = static_cast<int>(ma.size() + i);
  std::vector<Poly> gens;
  for (const auto& g : a.ideal.generators()) gens.push_back(g.rename(ring, ma));
  for (const auto& g : b.ideal.generators()) gens.push_back(g.rename(ring, mb));
  return {ring, Ideal(ring, std::move(gens))};
}

std::string jet_name(const std::string& base, std::size_t order) { return base + "@" + std::to_string(order); }

RingPtr jet_ring(const RingPtr& base, std::size_t n) {
  return PolyRing::make(base->prime(), jet_names(base, 0, n));
}

std::vector<std::string> jet_names(const RingPtr& base, std::size_t lo, std::size_t hi) {
  std::vector<std::string> names;
  for (std::size_t j = lo; j <= hi; ++j)
    for (const auto& v : base->names()) names.push_back(jet_name(v, j));
  return names;
}

namespace {

std::vector<Truncated<Poly>> variable_series(const RingPtr& base, const RingPtr& jring, std::size_t n) {
  std::vector<Truncated<Poly>> out;
  for (const auto& v : base->names()) {
    Truncated<Poly> s(n, Poly(jring));
    for (std::size_t j = 0; j <= n; ++j) s[j] = Poly::variable(jring, jet_name(v, j));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Truncated<Poly> expand_poly(const Poly& f, const std::vector<Truncated<Poly>>& var_series,
                            const RingPtr& target, std::size_t n) {
  const std::size_t nv = f.nvars();
  if (var_series.size() != nv) throw DomainError("expand_poly: arity mismatch");
  std::vector<std::vector<Truncated<Poly>>> powers(nv);
  auto power = [&](std::size_t v, unsigned e) -> const Truncated<Poly>& {
    auto& pv = powers[v];
    if (pv.empty()) {
      Truncated<Poly> one(n, Poly(target));
      one[0] = Poly::constant(target, RationalFunction(f.prime(), 1));
      pv.push_back(std::move(one));
    }
    while (pv.size() <= e) pv.push_back(pv.back() * var_series[v]);
    return pv[e];
  };
  Truncated<Poly> acc(n, Poly(target));
  for (const auto& term : f.terms()) {
    const auto shift = term.c.taylor(n);
    Truncated<Poly> s(n, Poly(target));
    for (std::size_t j = 0; j <= n; ++j) s[j] = Poly::constant(target, shift[j]);
    for (std::size_t v = 0; v < nv; ++v)
      if (term.m.e[v]) s = s * power(v, term.m.e[v]);
    acc = acc + s;
  }
  return acc;
}

Truncated<Poly> prolong_poly(const Poly& f, const RingPtr& jring, std::size_t n) {
  return expand_poly(f, variable_series(f.ring(), jring, n), jring, n);
}

JetPresentation prolong_ideal(const AffinePresentation& w, std::size_t n) {
  JetPresentation jp;
  jp.order = n;
  jp.origin = w;
  jp.ring = jet_ring(w.ring, n);
  jp.graded.assign(n + 1, {});
  const auto series = variable_series(w.ring, jp.ring, n);
  std::vector<Poly> gens;
  for (const auto& g : w.ideal.generators()) {
    const Truncated<Poly> s = expand_poly(g, series, jp.ring, n);
    for (std::size_t j = 0; j <= n; ++j) jp.graded[j].push_back(s[j]);
  }
  for (std::size_t j = 0; j <= n; ++j)
    for (const auto& g : jp.graded[j]) gens.push_back(g);
  jp.ideal = Ideal(jp.ring, std::move(gens));
  return jp;
}

JetPresentation truncate(const JetPresentation& j, std::size_t m) {
  if (m > j.order) throw DomainError("truncate: target order exceeds jet order");
  if (m == j.order) return j;
  JetPresentation out;
  out.order = m;
  out.origin = j.origin;
  out.ring = jet_ring(j.origin.ring, m);
  std::vector<int> map(j.ring->nvars(), -1);
  for (std::size_t i = 0; i < j.ring->nvars(); ++i) map[i] = out.ring->index_of(j.ring->names()[i]);
  std::vector<Poly> gens;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<Poly> level;
    for (const auto& g : j.graded[k]) level.push_back(g.rename(out.ring, map));
    gens.insert(gens.end(), level.begin(), level.end());
    out.graded.push_back(std::move(level));
  }
  out.ideal = Ideal(out.ring, std::move(gens));
  return out;
}

JetPoint truncate(const JetPoint& p, const RingPtr& base, std::size_t m) {
  const std::size_t keep = base->nvars() * (m + 1);
  if (keep > p.coords.size()) throw DomainError("truncate: target order exceeds jet order");
  return {jet_ring(base, m), std::vector<RationalFunction>(p.coords.begin(), p.coords.begin() + keep)};
}

JetPoint lift_point(const AffinePresentation& w, const std::vector<RationalFunction>& point, std::size_t n) {
  if (point.size() != w.ring->nvars()) throw DomainError("lift_point: arity mismatch");
  for (const auto& g : w.ideal.generators())
    if (!g.evaluate(point).is_zero()) throw DomainError("point is not on W: generator " + g.str() + " does not vanish");
  JetPoint jp{jet_ring(w.ring, n), std::vector<RationalFunction>(w.ring->nvars() * (n + 1))};
  for (std::size_t i = 0; i < point.size(); ++i) {
    const auto s = point[i].taylor(n);
    for (std::size_t j = 0; j <= n; ++j) jp.coords[j * point.size() + i] = s[j];
  }
  return jp;
}

std::vector<RationalFunction> PolyMap::apply(const std::vector<RationalFunction>& point) const {
  std::vector<RationalFunction> out;
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

PolyMap PolyMap::compose(const PolyMap& inner) const {
  if (!inner.target->same_variables(*source)) throw DomainError("compose: arity mismatch");
  PolyMap r{inner.source, target, {}};
  for (const auto& c : components) r.components.push_back(c.substitute(inner.source, inner.components));
  return r;
}

PolyMap PolyMap::identity(const RingPtr& ring) {
  PolyMap r{ring, ring, {}};
  for (std::size_t i = 0; i < ring->nvars(); ++i) r.components.push_back(Poly::variable(ring, i));
  return r;
}

PolyMap prolong_morphism(const PolyMap& g, std::size_t n) {
  if (g.components.size() != g.target->nvars()) throw DomainError("prolong_morphism: arity mismatch");
  PolyMap r{jet_ring(g.source, n), jet_ring(g.target, n), {}};
  const auto series = variable_series(g.source, r.source, n);
  std::vector<Truncated<Poly>> comps;
  for (const auto& c : g.components) comps.push_back(expand_poly(c, series, r.source, n));
  r.components.resize(r.target->nvars(), Poly(r.source));
  const std::size_t m = g.target->nvars();
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < m; ++i) r.components[j * m + i] = comps[i][j];
  return r;
}

JetPoint apply(const PolyMap& jet_map, const JetPoint& p) {
  return {jet_map.target, jet_map.apply(p.coords)};
}

JetProductSplit jet_product_split(const AffinePresentation& a, const AffinePresentation& b, std::size_t n) {
  JetProductSplit s{prolong_ideal(a, n), prolong_ideal(b, n), {}};
  const AffinePresentation prod = AffinePresentation::product(a, b);
  s.product.order = n;
  s.product.origin = prod;
  s.product.ring = jet_ring(prod.ring, n);
  s.product.graded.assign(n + 1, {});
  auto move_in = [&](const JetPresentation& f) {
    std::vector<int> map(f.ring->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = s.product.ring->index_of(f.ring->names()[i]);
    for (std::size_t j = 0; j <= n; ++j)
      for (const auto& g : f.graded[j]) s.product.graded[j].push_back(g.rename(s.product.ring, map));
  };
  move_in(s.first);
  move_in(s.second);
  std::vector<Poly> gens;
  for (const auto& level : s.product.graded) gens.insert(gens.end(), level.begin(), level.end());
  s.product.ideal = Ideal(s.product.ring, std::move(gens));
  return s;
}

}  // namespace jetexc
