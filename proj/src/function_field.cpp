#include "jetexc/function_field.hpp"

#include <algorithm>

namespace jetexc {

Place Place::finite(const UPoly& pi) {
  if (!pi.is_monic() || !pi.is_irreducible())
    throw DomainError("place " + pi.str() + " is not a monic irreducible polynomial");
  return Place(pi.prime(), pi, false);
}

Place Place::infinite(std::uint32_t p) { return Place(p, UPoly(p), true); }

Place Place::parse(const std::string& text, std::uint32_t p) {
  if (text == "inf") return infinite(p);
  const RationalFunction f = parse_rational_function(text, p);
  if (!f.is_polynomial()) throw ParseError("place", "\"" + text + "\" is not a polynomial in t");
  return finite(f.numerator());
}

RationalFunction Place::uniformizer() const {
  if (infinite_) return RationalFunction::t(p_).inverse();
  return RationalFunction(pi_);
}

std::string Place::str() const { return infinite_ ? "inf" : pi_.str(); }

long long valuation(const Place& v, const UPoly& f) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  if (v.is_infinite()) return -f.degree();
  long long k = 0;
  UPoly g = f;
  for (;;) {
    auto [q, r] = g.divmod(v.uniformizer_poly());
    if (!r.is_zero()) return k;
    g = std::move(q);
    ++k;
  }
}

Valuation valuation(const Place& v, const RationalFunction& f) {
  if (f.is_zero()) return Valuation::inf();
  return Valuation::of(valuation(v, f.numerator()) - valuation(v, f.denominator()));
}

Valuation valuation(const Place& v, const Poly& f) {
  Valuation m = Valuation::inf();
  for (const auto& t : f.terms()) m = std::min(m, valuation(v, t.c));
  return m;
}

std::vector<PrimitiveGenerator> normalize_primitive(const Place& v, const std::vector<Poly>& gens) {
  std::vector<PrimitiveGenerator> out;
  const RationalFunction pi = v.uniformizer();
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("normalize_primitive: zero generator");
    const long long shift = -valuation(v, g).value;
    out.push_back({shift == 0 ? g : g.scaled(pi.pow(shift)), shift});
  }
  return out;
}

bool is_integral(const Place& v, const std::vector<RationalFunction>& point) {
  for (const auto& c : point)
    if (valuation(v, c) < Valuation::of(0)) return false;
  return true;
}

void require_integral(const Place& v, const std::vector<RationalFunction>& point,
                      const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < point.size(); ++i)
    if (valuation(v, point[i]) < Valuation::of(0))
      throw DomainError("coordinate " + (i < names.size() ? names[i] : std::to_string(i)) + " = " +
                        point[i].str() + " is not integral at v = " + v.str());
}

ContactReport contact_order(const Place& v, const Ideal& ideal, const std::vector<RationalFunction>& point,
                            const Budget& budget) {
  require_integral(v, point, ideal.ring()->names());
  ContactReport rep{v, Valuation::inf(), Valuation::inf(), {}};
  for (const auto& g : normalize_primitive(v, ideal.basis(budget))) {
    const Valuation o = valuation(v, g.poly.evaluate(point));
    rep.generator_orders.push_back(o);
    rep.order = std::min(rep.order, o);
  }
  rep.distance_exponent =
      rep.order.infinite ? Valuation::inf() : Valuation::of(rep.order.value * v.residue_degree());
  return rep;
}

std::string HeightGap::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(exponent);
    case Kind::PlusInfinity:
      return "+inf";
    case Kind::MinusInfinity:
      return "-inf";
  }
  return "?";
}

DistanceComparison distance_compare(const Place& v, const Ideal& ix, const Ideal& iy,
                                    const std::vector<RationalFunction>& point, const Budget& budget) {
  DistanceComparison d{contact_order(v, ix, point, budget), contact_order(v, iy, point, budget), {}};
  const Valuation& a = d.x.distance_exponent;
  const Valuation& b = d.y.distance_exponent;
  if (a.infinite && b.infinite) {
    d.gap = {HeightGap::Kind::Finite, 0};
  } else if (a.infinite) {
    d.gap = {HeightGap::Kind::PlusInfinity, 0};
  } else if (b.infinite) {
    d.gap = {HeightGap::Kind::MinusInfinity, 0};
  } else {
    d.gap = {HeightGap::Kind::Finite, a.value - b.value};
  }
  return d;
}

long long containment_constant(const Place& v, const Ideal& i, const Ideal& j, const Budget& budget) {
  const Ideal jj = j.in_ring(i.ring());
  std::vector<Poly> jprim;
  for (auto& g : normalize_primitive(v, jj.basis(budget))) jprim.push_back(std::move(g.poly));
  long long c = 0;
  for (const auto& f : normalize_primitive(v, i.basis(budget))) {
    const Division d = divide(f.poly, jprim);
    if (!d.remainder.is_zero()) throw DomainError("containment_constant: first ideal is not inside the second");
    for (const auto& q : d.quotients) {
      const Valuation qv = valuation(v, q);
      if (!qv.infinite) c = std::max(c, -qv.value);
    }
  }
  return c;
}

}  // namespace jetexc
