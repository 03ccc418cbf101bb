#include "jetexc/exceptional.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace jetexc {

namespace {

std::mutex g_image_mutex;
std::map<std::string, Ideal> g_image_cache;
std::map<std::string, std::optional<Ideal>> g_x_image_cache;

std::string image_key(const GroupVariety& a, std::size_t factor, std::size_t k) {
  std::string key = std::to_string(a.prime()) + "|" + std::to_string(k);
  for (const auto& c : a.factor(factor).serialize()) key += "|" + c;
  const auto& names = a.ring()->names();
  key += "|" + names[a.x_index(factor)] + "|" + names[a.y_index(factor)];
  return key;
}

// Closure of the image of V(source) under J^k of a rational map. The map's
// components live on `base`; `source` is an ideal of jet_ring(base, k) and
// the result an ideal of jet_ring(target_base, k). The graph is presented as
// u_c^(j+1) T_{c,j} = numerator_{c,j}, with 1 - z * prod u_c removing the
// locus where the map is undefined.
Ideal jet_graph_image(const RingPtr& base, const std::vector<RationalExpr>& comps, const RingPtr& target_base,
                      const Ideal& source, std::size_t k, const Budget& budget) {
  const std::uint32_t p = base->prime();
  const RingPtr src_ring = jet_ring(base, k);
  const RingPtr dst_ring = jet_ring(target_base, k);
  std::vector<std::string> names{"_z"}, drop{"_z"};
  for (const auto& n : src_ring->names()) {
    names.push_back("_" + n);
    drop.push_back("_" + n);
  }
  for (const auto& n : dst_ring->names()) names.push_back(n);
  const RingPtr plain = PolyRing::make(p, names);
  const RingPtr ring = plain->with_order(TermOrder::block(plain->mask_of(drop)));

  std::vector<int> to_src(src_ring->nvars());
  for (std::size_t i = 0; i < to_src.size(); ++i) to_src[i] = ring->index_of("_" + src_ring->names()[i]);
  std::vector<Poly> gens;
  for (const auto& g : source.generators()) gens.push_back(g.in_ring(src_ring).rename(ring, to_src));

  std::vector<Truncated<Poly>> series;
  for (const auto& v : base->names()) {
    Truncated<Poly> s(k, Poly(ring));
    for (std::size_t j = 0; j <= k; ++j) s[j] = Poly::variable(ring, "_" + jet_name(v, j));
    series.push_back(std::move(s));
  }
  const Poly one = Poly::constant(ring, RationalFunction(p, 1));
  Poly units = one;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Truncated<Poly> num = expand_poly(comps[c].num, series, ring, k);
    Truncated<Poly> delta = expand_poly(comps[c].den, series, ring, k);
    const Poly u = delta[0];
    delta[0] = Poly(ring);
    if (!u.is_constant()) units *= u;
    // N/D = sum_i (-1)^i N delta^i / u^(i+1); coefficient j over u^(j+1).
    std::vector<Truncated<Poly>> nd{num};
    for (std::size_t i = 1; i <= k; ++i) nd.push_back(nd.back() * delta);
    std::vector<Poly> upow{one};
    for (std::size_t i = 1; i <= k + 1; ++i) upow.push_back(upow.back() * u);
    for (std::size_t j = 0; j <= k; ++j) {
      Poly numer(ring);
      for (std::size_t i = 0; i <= j; ++i) {
        const Poly term = upow[j - i] * nd[i][j];
        numer = (i % 2) ? numer - term : numer + term;
      }
      const Poly target = Poly::variable(ring, jet_name(target_base->names()[c], j));
      gens.push_back(upow[j + 1] * target - numer);
    }
  }
  gens.push_back(Poly::variable(ring, "_z") * units - one);
  return eliminate_into(Ideal(ring, std::move(gens)), drop, dst_ring, budget);
}

bool free_of(const RationalExpr& f, std::size_t var) { return f.num.degree_in(var) <= 0 && f.den.degree_in(var) <= 0; }

// W_y = 2y + a1 x + a3 in the named variables of `ring`.
Poly weierstrass_y(const EllipticCurve& e, const RingPtr& ring, const std::string& x, const std::string& y) {
  return Poly::constant(ring, RationalFunction(e.prime(), 2)) * Poly::variable(ring, y) +
         Poly::constant(ring, e.a1()) * Poly::variable(ring, x) + Poly::constant(ring, e.a3());
}

Ideal to_patch(const GroupVariety& a, const Ideal& low) {
  std::vector<int> map(low.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const std::string& n = low.ring()->names()[i];
    map[i] = a.ring()->index_of(n.substr(0, n.find('@')));
  }
  std::vector<Poly> gens;
  for (const auto& g : low.generators()) gens.push_back(g.rename(a.ring(), map));
  return Ideal(a.ring(), std::move(gens));
}

// How one factor's jets enter a piece of the critical scheme.
enum class FactorMode {
  Chart,   // W_y != 0 at the image point: only the x-jet relations of the image are needed
  Fibre,   // W_y = 0 at the image point: full jets, image restricted to that fibre
  Full,    // full jets and the whole image
  Pulled,  // shifted factor: full jets, cut by the pulled-back image
};

struct FactorData {
  std::optional<Ideal> xs;  // x-jet relations of the image, in the factor's x jet ring
  Ideal image;              // image in the factor's jet ring
  Ideal fibre;              // image + (W_y), reduced
};

using Series = Truncated<Poly>;

// Hasse-Taylor expansion of a constant of K, as a series of constants of `ring`.
Series constant_series(const RationalFunction& c, const RingPtr& ring, std::size_t k) {
  Series s(k, Poly(ring));
  const auto coeffs = c.taylor(k);
  for (std::size_t j = 0; j <= k; ++j) s[j] = Poly::constant(ring, coeffs[j]);
  return s;
}

// Substitutes series for the jets x@j, y@j of a factor-ring ideal.
std::vector<Poly> pull(const Ideal& ideal, const RingPtr& ring, const Series& xser, const Series* yser) {
  std::vector<Poly> images;
  for (const auto& n : ideal.ring()->names()) {
    const std::size_t at = n.find('@');
    const auto j = static_cast<std::size_t>(std::stoul(n.substr(at + 1)));
    images.push_back(n[0] == 'x' || yser == nullptr ? xser[j] : (*yser)[j]);
  }
  std::vector<Poly> out;
  for (const auto& g : ideal.generators()) out.push_back(g.substitute(ring, images));
  return out;
}

std::map<std::string, Ideal> g_pulled_cache;

enum class SlopeChart {
  Secant,   // (y - y_Q) / (x - x_Q), valid for x != x_Q
  Tangent,  // x = x_Q and the slope as M / (y + y_Q + a1 x_Q + a3)
};

// Jets d of factor i with d + Q in the image, one slope chart and one image
// mode, in the factor's jet ring. The slope jets enter as variables s@j tied
// by s * den = num.
Ideal pulled_piece(const GroupVariety& a, std::size_t i, const KPoint& q, std::size_t k, const FactorData& d,
                   FactorMode mode, SlopeChart slope, const Budget& budget) {
  const std::uint32_t p = a.prime();
  const EllipticCurve& e = a.factor(i);
  const AffinePresentation fp = a.factor_presentation(i);
  const auto jp = prolong_ideal(fp, k);
  std::vector<std::string> drop{"_l", "_u"};
  for (std::size_t j = 0; j <= k; ++j) drop.push_back("_s@" + std::to_string(j));
  std::vector<std::string> names = drop;
  for (const auto& n : jp.ring->names()) names.push_back(n);
  const RingPtr plain = PolyRing::make(p, names);
  const RingPtr ring = plain->with_order(TermOrder::block(plain->mask_of(drop)));
  const Poly one = Poly::constant(ring, RationalFunction(p, 1));
  const auto& base = fp.ring->names();
  Series xs(k, Poly(ring)), ys(k, Poly(ring)), s(k, Poly(ring));
  for (std::size_t j = 0; j <= k; ++j) {
    xs[j] = Poly::variable(ring, jet_name(base[0], j));
    ys[j] = Poly::variable(ring, jet_name(base[1], j));
    s[j] = Poly::variable(ring, "_s@" + std::to_string(j));
  }
  std::vector<int> into(jp.ring->nvars());
  for (std::size_t v = 0; v < into.size(); ++v) into[v] = ring->index_of(jp.ring->names()[v]);
  std::vector<Poly> gens;
  for (const auto& g : jp.ideal.generators()) gens.push_back(g.rename(ring, into));

  auto c = [&](const RationalFunction& v) { return constant_series(v, ring, k); };
  const Series xq = c(q.x), yq = c(q.y);
  const Series a1 = c(e.a1()), a2 = c(e.a2()), a3 = c(e.a3()), a4 = c(e.a4());
  Series num, den;
  if (slope == SlopeChart::Secant) {
    num = ys - yq;
    den = xs - xq;
  } else {
    gens.push_back(xs[0] - xq[0]);
    num = xs * xs + xs * xq + xq * xq + a2 * (xs + xq) + a4 - a1 * ys;
    den = ys + yq + a1 * xq + a3;
  }
  gens.push_back(Poly::variable(ring, "_l") * den[0] - one);
  const Series rel = s * den - num;
  for (std::size_t j = 0; j <= k; ++j) gens.push_back(rel[j]);
  const Series tx = s * s + a1 * s - a2 - xs - xq;
  const Series ty = -((s + a1) * tx) - (ys - s * xs) - a3;
  const Poly wy = Poly::constant(ring, RationalFunction(p, 2)) * ty[0] + a1[0] * tx[0] + a3[0];
  std::vector<Poly> cut;
  if (mode == FactorMode::Chart) {
    cut = pull(*d.xs, ring, tx, nullptr);
    cut.push_back(Poly::variable(ring, "_u") * wy - one);
  } else {
    cut = pull(d.image, ring, tx, &ty);
    if (mode == FactorMode::Fibre) cut.push_back(wy);
  }
  gens.insert(gens.end(), cut.begin(), cut.end());
  return eliminate_into(Ideal(ring, std::move(gens)), drop, jp.ring, budget);
}

// Order-0 projection of the part of J^k(X) whose image lies in
// [p^k]_* J^k(A) after translation by Q, restricted by `modes`. Unshifted
// factors use `data`; shifted ones use `pulled`.
Ideal exceptional_piece(const GroupVariety& a, const Subvariety& x, const std::vector<FactorData>& data,
                        const std::vector<Ideal>& pulled, const std::vector<FactorMode>& modes, std::size_t k,
                        const Budget& budget) {
  const std::uint32_t p = a.prime();
  const RingPtr jring = jet_ring(a.ring(), k);
  const auto& base = a.ring()->names();
  std::vector<std::string> drop;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (modes[i] == FactorMode::Chart) drop.push_back("_u" + std::to_string(i));
    for (std::size_t j = 1; j <= k; ++j) {
      drop.push_back(jet_name(base[a.x_index(i)], j));
      if (modes[i] != FactorMode::Chart) drop.push_back(jet_name(base[a.y_index(i)], j));
    }
  }
  std::vector<std::string> names = drop;
  for (const auto& n : base) names.push_back(n);
  const RingPtr plain = PolyRing::make(p, names);
  const RingPtr ring = plain->with_order(TermOrder::block(plain->mask_of(drop)));
  const Poly one = Poly::constant(ring, RationalFunction(p, 1));
  // Jet variable "v@j" of A as an element of `ring`; chart y-jets are filled below.
  auto jet_var = [&](const std::string& n) {
    if (n.ends_with("@0")) return Poly::variable(ring, n.substr(0, n.size() - 2));
    return ring->index_of(n) >= 0 ? Poly::variable(ring, n) : Poly(ring);
  };

  std::vector<Poly> image;
  for (const auto& n : jring->names()) image.push_back(jet_var(n));
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const EllipticCurve& e = a.factor(i);
    const std::string& xn = base[a.x_index(i)];
    const std::string& yn = base[a.y_index(i)];
    Series xs(k, Poly(ring)), ys(k, Poly(ring));
    for (std::size_t j = 0; j <= k; ++j) {
      xs[j] = jet_var(jet_name(xn, j));
      ys[j] = jet_var(jet_name(yn, j));
    }
    std::vector<Poly> cut;
    switch (modes[i]) {
      case FactorMode::Pulled: cut = pull(pulled[i], ring, xs, &ys); break;
      case FactorMode::Full: cut = pull(data[i].image, ring, xs, &ys); break;
      case FactorMode::Fibre: cut = pull(data[i].fibre, ring, xs, &ys); break;
      case FactorMode::Chart: {
        const Poly u = Poly::variable(ring, "_u" + std::to_string(i));
        cut = pull(*data[i].xs, ring, xs, nullptr);
        cut.push_back(u * weierstrass_y(e, ring, xn, yn) - one);
        // Order-j coefficient of the prolonged equation is W_y y@j + rest_j.
        const auto series = prolong_poly(e.weierstrass(a.ring(), a.x_index(i), a.y_index(i)), jring, k);
        for (std::size_t j = 1; j <= k; ++j) {
          const auto yj = static_cast<std::size_t>(jring->index_of(jet_name(yn, j)));
          std::vector<Poly> partial = image;
          partial[yj] = Poly(ring);
          image[yj] = -(u * series[j].substitute(ring, partial));
        }
        break;
      }
    }
    gens.insert(gens.end(), cut.begin(), cut.end());
  }
  const auto jx = prolong_ideal(x.patch, k);
  for (const auto& g : jx.ideal.generators()) gens.push_back(g.in_ring(jring).substitute(ring, image));
  return to_patch(a, eliminate(Ideal(ring, std::move(gens)), drop, budget));
}

}  // namespace

std::optional<Ideal> factor_x_image(const GroupVariety& a, std::size_t factor, std::size_t k, const Budget& budget) {
  const std::string key = image_key(a, factor, k);
  {
    std::lock_guard<std::mutex> lock(g_image_mutex);
    auto it = g_x_image_cache.find(key);
    if (it != g_x_image_cache.end()) return it->second;
  }
  const AffinePresentation fp = a.factor_presentation(factor);
  const EllipticCurve& e = a.factor(factor);
  const auto map = multiplication_map(e, fp.ring, 0, 1, e.prime());
  std::optional<Ideal> out;
  if (free_of(map.x, 1)) {
    // x o [p] is a function of x alone: iterate its jet map on x-jets only.
    const RingPtr xbase = PolyRing::make(e.prime(), {fp.ring->names()[0]});
    const std::vector<int> drop_y{0, -1};
    const RationalExpr xmap{map.x.num.rename(xbase, drop_y), map.x.den.rename(xbase, drop_y)};
    const RingPtr xjets = jet_ring(xbase, k);
    Ideal xs = Ideal::zero(xjets);
    for (std::size_t r = 0; r < k; ++r) {
      budget.check_deadline("multiplication_image");
      xs = jet_graph_image(xbase, {xmap}, xbase, xs, k, budget);
      xs = Ideal(xjets, xs.basis(budget));
    }
    out = xs;
  }
  std::lock_guard<std::mutex> lock(g_image_mutex);
  g_x_image_cache.emplace(key, out);
  return out;
}

MultiplicationImage factor_multiplication_image(const GroupVariety& a, std::size_t factor, std::size_t k,
                                                const Budget& budget) {
  const AffinePresentation fp = a.factor_presentation(factor);
  const RingPtr jring = jet_ring(fp.ring, k);
  const std::string key = image_key(a, factor, k);
  {
    std::lock_guard<std::mutex> lock(g_image_mutex);
    auto it = g_image_cache.find(key);
    if (it != g_image_cache.end()) return {k, jring, Ideal(jring, it->second.generators())};
  }
  const EllipticCurve& e = a.factor(factor);
  Ideal current = prolong_ideal(fp, k).ideal;
  if (const auto xs = factor_x_image(a, factor, k, budget)) {
    // The y-jets of a jet of E are determined by its x-jets wherever W_y != 0,
    // so the image is J^k(E) cut by the x-jet relations, away from W_y = 0.
    std::vector<int> into(xs->ring()->nvars());
    for (std::size_t i = 0; i < into.size(); ++i) into[i] = jring->index_of(xs->ring()->names()[i]);
    std::vector<Poly> gens = current.generators();
    for (const auto& g : xs->generators()) gens.push_back(g.rename(jring, into));
    const Poly wy = weierstrass_y(e, jring, jet_name(fp.ring->names()[0], 0), jet_name(fp.ring->names()[1], 0));
    current = Ideal(jring, std::move(gens));
    if (!wy.is_constant()) current = saturate(current, wy, budget);
    current = Ideal(jring, current.basis(budget));
  } else {
    const auto map = multiplication_map(e, fp.ring, 0, 1, e.prime());
    for (std::size_t r = 0; r < k; ++r) {
      budget.check_deadline("multiplication_image");
      current = jet_graph_image(fp.ring, {map.x, map.y}, fp.ring, current, k, budget);
      current = Ideal(jring, current.basis(budget));
    }
  }
  {
    std::lock_guard<std::mutex> lock(g_image_mutex);
    g_image_cache.emplace(key, current);
  }
  return {k, jring, current};
}

MultiplicationImage multiplication_image(const GroupVariety& a, std::size_t k, const Budget& budget) {
  const RingPtr jring = jet_ring(a.ring(), k);
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const auto img = factor_multiplication_image(a, i, k, budget);
    std::vector<int> map(img.ring->nvars());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = jring->index_of(img.ring->names()[v]);
    for (const auto& g : img.ideal.generators()) gens.push_back(g.rename(jring, map));
  }
  return {k, jring, Ideal(jring, std::move(gens))};
}

CriticalScheme critical_scheme(const GroupVariety& a, const Subvariety& x, std::size_t k, const Budget& budget) {
  const auto img = multiplication_image(a, k, budget);
  const auto jx = prolong_ideal(x.patch, k);
  std::vector<Poly> gens = img.ideal.generators();
  for (const auto& g : jx.ideal.generators()) gens.push_back(g.in_ring(img.ring));
  return {k, img.ring, Ideal(img.ring, std::move(gens))};
}

ExceptionalScheme shifted_exceptional(const GroupVariety& a, const Subvariety& x, const GroupPoint& q, std::size_t k,
                                      const Budget& budget) {
  require_on(a, q, "shift");
  ExceptionalScheme out;
  out.k = k;
  // Points of X over -Q_i translate to O in factor i, off the affine patch.
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const KPoint& qi = q.parts[i];
    if (qi.infinity) continue;
    GroupPoint minus = identity(a);
    minus.parts[i] = negate(a.factor(i), qi);
    const auto& names = a.ring()->names();
    std::vector<Poly> gens = x.patch.ideal.generators();
    gens.push_back(Poly::variable(a.ring(), a.x_index(i)) - Poly::constant(a.ring(), minus.parts[i].x));
    gens.push_back(Poly::variable(a.ring(), a.y_index(i)) - Poly::constant(a.ring(), minus.parts[i].y));
    if (!Ideal(a.ring(), std::move(gens)).is_unit(budget))
      out.left_patch.push_back("points of X with (" + names[a.x_index(i)] + "," + names[a.y_index(i)] + ") = " +
                               "(" + minus.parts[i].x.str() + "," + minus.parts[i].y.str() + ") leave the patch");
  }
  if (k == 0) {
    out.ideal = Ideal(a.ring(), x.patch.ideal.basis(budget));
    return out;
  }
  // V(Crit^k) splits by whether each factor's image jet sits over W_y = 0;
  // every piece is eliminated separately and the result is the union of
  // the projections. A shifted factor contributes the pulled-back image,
  // itself a union over slope charts and image modes.
  std::vector<FactorData> data;
  std::vector<Ideal> pulled;
  std::vector<std::vector<FactorMode>> choices;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const auto img = factor_multiplication_image(a, i, k, budget);
    FactorData d{factor_x_image(a, i, k, budget), img.ideal, {}};
    const auto& names = img.ring->names();
    const Poly wy = weierstrass_y(a.factor(i), img.ring, names[0], names[1]);
    std::vector<FactorMode> modes;
    if (d.xs) modes.push_back(FactorMode::Chart);
    if (d.xs && !wy.is_constant()) modes.push_back(FactorMode::Fibre);
    if (!d.xs) modes.push_back(FactorMode::Full);
    const KPoint& qi = q.parts[i];
    if (!qi.infinity) {
      const std::string key = image_key(a, i, k) + "|" + qi.x.str() + "|" + qi.y.str();
      std::optional<Ideal> cached;
      {
        std::lock_guard<std::mutex> lock(g_image_mutex);
        auto it = g_pulled_cache.find(key);
        if (it != g_pulled_cache.end()) cached = it->second;
      }
      if (!cached) {
        std::optional<Ideal> acc;
        for (const auto mode : modes)
          for (const auto slope : {SlopeChart::Secant, SlopeChart::Tangent}) {
            const Ideal piece = pulled_piece(a, i, qi, k, d, mode, slope, budget);
            if (!piece.is_unit(budget)) acc = acc ? ideal_intersect(*acc, piece, budget) : piece;
          }
        cached = acc ? Ideal(img.ring, acc->basis(budget)) : Ideal::unit(img.ring);
        std::lock_guard<std::mutex> lock(g_image_mutex);
        g_pulled_cache.emplace(key, *cached);
      }
      pulled.push_back(*cached);
      choices.push_back({FactorMode::Pulled});
    } else {
      if (std::find(modes.begin(), modes.end(), FactorMode::Fibre) != modes.end()) {
        std::vector<Poly> gens = img.ideal.generators();
        gens.push_back(wy);
        d.fibre = Ideal(img.ring, Ideal(img.ring, std::move(gens)).basis(budget));
      }
      pulled.push_back(Ideal::zero(img.ring));
      choices.push_back(std::move(modes));
    }
    data.push_back(std::move(d));
  }
  std::optional<Ideal> acc;
  std::vector<std::size_t> pick(a.dimension(), 0);
  while (true) {
    budget.check_deadline("exceptional_scheme");
    std::vector<FactorMode> modes;
    for (std::size_t i = 0; i < pick.size(); ++i) modes.push_back(choices[i][pick[i]]);
    const Ideal piece = exceptional_piece(a, x, data, pulled, modes, k, budget);
    if (!piece.is_unit(budget)) acc = acc ? ideal_intersect(*acc, piece, budget) : piece;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  out.ideal = acc ? Ideal(a.ring(), acc->basis(budget)) : Ideal::unit(a.ring());
  return out;
}

ExceptionalScheme exceptional_scheme(const GroupVariety& a, const Subvariety& x, std::size_t k, const Budget& budget) {
  return shifted_exceptional(a, x, identity(a), k, budget);
}

ExceptionalChain stable_exceptional(const GroupVariety& a, const Subvariety& x, std::size_t k_max,
                                    const Budget& budget) {
  ExceptionalChain out;
  out.chain.push_back(exceptional_scheme(a, x, 0, budget));
  for (std::size_t k = 1; k <= k_max; ++k) {
    out.chain.push_back(exceptional_scheme(a, x, k, budget));
    const auto rel = subscheme_relation(out.chain[k].ideal, out.chain[k - 1].ideal, budget);
    if (rel != SubschemeRelation::Equal && rel != SubschemeRelation::IContainsJ) out.descending = false;
    if (rel == SubschemeRelation::Equal) {
      out.stabilized_at = k - 1;
      break;
    }
  }
  if (out.stabilized_at)
    for (auto& e : out.chain) e.stabilized_at = out.stabilized_at;
  return out;
}

bool is_zero_dimensional(const Ideal& ideal, const Budget& budget) {
  const auto& basis = ideal.basis(budget);
  const std::size_t n = ideal.ring()->nvars();
  std::vector<bool> hit(n, false);
  for (const auto& g : basis) {
    const Monomial& m = g.lead_monomial();
    if (m.deg == 0) return true;
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.e[i]) {
        ++nz;
        which = i;
      }
    if (nz == 1) hit[which] = true;
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool vanishes_at(const Ideal& ideal, const std::vector<RationalFunction>& point) {
  for (const auto& g : ideal.generators())
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

namespace {

struct StepResult {
  std::vector<Ideal> pieces;
  std::vector<std::string> notes;
};

StepResult locus_step(const GroupVariety& a, const std::vector<Ideal>& pieces, const std::vector<Combination>& reps,
                      std::size_t m, const Budget& budget) {
  StepResult out;
  std::set<std::vector<std::string>> seen;
  for (const auto& piece : pieces) {
    for (const auto& rep : reps) {
      budget.check_deadline("build_linear_locus");
      const auto exc = shifted_exceptional(a, {{a.ring(), piece}, true}, rep.point, m, budget);
      for (const auto& n : exc.left_patch) out.notes.push_back("Q=" + rep.point.str() + ": " + n);
      if (exc.ideal.is_unit(budget)) continue;
      if (seen.insert(exc.ideal.canonical()).second) out.pieces.push_back(exc.ideal);
    }
  }
  return out;
}

Ideal union_of(const GroupVariety& a, const std::vector<Ideal>& pieces, const Budget& budget) {
  if (pieces.empty()) return Ideal::unit(a.ring());
  Ideal acc = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) acc = ideal_intersect(acc, pieces[i], budget);
  return Ideal(a.ring(), acc.basis(budget));
}

LinearLocusResult run_locus(const GroupVariety& a, const Subvariety& x, const Subgroup& gamma, std::size_t m,
                            std::size_t max_iterations, const Budget& budget) {
  LinearLocusResult out;
  out.m_used = m;
  long long pm = 1;
  for (std::size_t i = 0; i < m; ++i) pm *= a.prime();
  const auto reps = coset_reps(a, gamma, pm, budget);
  const Ideal x_ideal(a.ring(), x.patch.ideal.basis(budget));
  std::vector<Ideal> pieces{x_ideal};
  out.iterations.push_back(x_ideal);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    auto step = locus_step(a, pieces, reps, m, budget);
    const Ideal next = union_of(a, step.pieces, budget);
    const auto rel = subscheme_relation(next, out.iterations.back(), budget);
    IterationCertificate cert;
    cert.iteration = it;
    cert.stable = rel == SubschemeRelation::Equal;
    cert.strict = rel == SubschemeRelation::IContainsJ;
    cert.pieces = step.pieces.size();
    cert.notes = std::move(step.notes);
    if (!cert.stable && !cert.strict) cert.notes.push_back("step is not descending: " + to_string(rel));
    out.certificate.push_back(std::move(cert));
    out.iterations.push_back(next);
    for (const auto& p : step.pieces)
      if (!is_zero_dimensional(p, budget) && subscheme_relation(p, x_ideal, budget) != SubschemeRelation::Equal)
        out.decomposition_incomplete = true;
    if (out.certificate.back().stable) {
      out.stabilized = true;
      // Keep the constituents of the previous step: they describe the same set.
      if (it > 1) step.pieces = pieces;
      else step.pieces = {x_ideal};
      pieces = std::move(step.pieces);
      break;
    }
    pieces = std::move(step.pieces);
  }
  out.pieces = pieces;
  out.y = {{a.ring(), out.iterations.back()}, true};
  bool all_points = true;
  for (const auto& p : out.pieces)
    if (!is_zero_dimensional(p, budget)) all_points = false;
  const bool unchanged = out.certificate.size() == 1 && out.certificate.front().stable;
  out.linearity_certified = out.stabilized && (all_points || unchanged);
  return out;
}

}  // namespace

LinearLocusResult build_linear_locus(const GroupVariety& a, const Subvariety& x, const Subgroup& gamma,
                                     const LocusOptions& options, const Budget& budget) {
  if (options.m < 1) throw DomainError("build_linear_locus: m must be at least 1");
  const std::size_t last = options.m_max ? std::max(*options.m_max, options.m) : options.m;
  LinearLocusResult out;
  for (std::size_t m = options.m; m <= last; ++m) {
    out = run_locus(a, x, gamma, m, options.max_iterations, budget);
    if (!options.m_max || (!out.certificate.empty() && out.certificate.front().strict)) break;
  }
  return out;
}

}  // namespace jetexc
