#include "jetexc/group_variety.hpp"

#include <map>

namespace jetexc {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back("x" + std::to_string(i));
    out.push_back("y" + std::to_string(i));
  }
  return out;
}

void require_same(const GroupVariety& a, const GroupPoint& p) {
  if (p.parts.size() != a.dimension()) throw DomainError("group point has the wrong number of factors");
}

}  // namespace

GroupVariety::GroupVariety(std::vector<EllipticCurve> factors, std::vector<std::string> names)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("group variety needs at least one factor");
  for (const auto& e : factors_)
    if (e.prime() != factors_.front().prime()) throw DomainError("factors over different primes");
  if (names.empty()) names = default_names(factors_.size());
  if (names.size() != 2 * factors_.size()) throw DomainError("group variety: need two coordinate names per factor");
  ring_ = PolyRing::make(prime(), std::move(names));
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) gens.push_back(factors_[i].weierstrass(ring_, x_index(i), y_index(i)));
  ideal_ = Ideal(ring_, std::move(gens));
}

AffinePresentation GroupVariety::factor_presentation(std::size_t i) const {
  RingPtr r = PolyRing::make(prime(), {ring_->names()[x_index(i)], ring_->names()[y_index(i)]});
  return {r, Ideal(r, {factors_[i].weierstrass(r, 0, 1)})};
}

bool GroupPoint::is_affine() const {
  for (const auto& q : parts)
    if (q.infinity) return false;
  return true;
}

bool GroupPoint::is_identity() const {
  for (const auto& q : parts)
    if (!q.infinity) return false;
  return true;
}

std::vector<RationalFunction> GroupPoint::coordinates() const {
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].infinity) throw DomainError("point " + str() + " is off the affine patch in factor " + std::to_string(i + 1));
    out.push_back(parts[i].x);
    out.push_back(parts[i].y);
  }
  return out;
}

std::string GroupPoint::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i].infinity ? "O" : "(" + parts[i].x.str() + "," + parts[i].y.str() + ")";
  }
  return s + "]";
}

bool operator==(const GroupPoint& a, const GroupPoint& b) {
  if (a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const auto &p = a.parts[i], &q = b.parts[i];
    if (p.infinity != q.infinity) return false;
    if (!p.infinity && !(p.x == q.x && p.y == q.y)) return false;
  }
  return true;
}

GroupPoint identity(const GroupVariety& a) { return {std::vector<KPoint>(a.dimension())}; }

void require_on(const GroupVariety& a, const GroupPoint& p, const std::string& what) {
  require_same(a, p);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& q = p.parts[i];
    if (!q.infinity && !a.factor(i).contains(q.x, q.y))
      throw DomainError(what + " = " + p.str() + " is not on curve " + std::to_string(i + 1));
  }
}

bool contains(const GroupVariety& a, const GroupPoint& p) {
  if (p.parts.size() != a.dimension()) return false;
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    if (!p.parts[i].infinity && !a.factor(i).contains(p.parts[i].x, p.parts[i].y)) return false;
  return true;
}

GroupPoint add(const GroupVariety& a, const GroupPoint& p, const GroupPoint& q) {
  require_same(a, p);
  require_same(a, q);
  GroupPoint r;
  for (std::size_t i = 0; i < a.dimension(); ++i) r.parts.push_back(add(a.factor(i), p.parts[i], q.parts[i]));
  return r;
}

GroupPoint negate(const GroupVariety& a, const GroupPoint& p) {
  require_same(a, p);
  GroupPoint r;
  for (std::size_t i = 0; i < a.dimension(); ++i) r.parts.push_back(negate(a.factor(i), p.parts[i]));
  return r;
}

GroupPoint scalar_mul(const GroupVariety& a, long long m, const GroupPoint& p) {
  require_same(a, p);
  GroupPoint r;
  for (std::size_t i = 0; i < a.dimension(); ++i) r.parts.push_back(scalar_mul(a.factor(i), m, p.parts[i]));
  return r;
}

Subvariety subvariety(const GroupVariety& a, const std::vector<Poly>& gens, bool reduced) {
  std::vector<Poly> all = a.ideal().generators();
  for (const auto& g : gens) {
    if (!g.ring()->same_variables(*a.ring())) throw DomainError("subvariety generator in a foreign ring");
    all.push_back(g.in_ring(a.ring()));
  }
  return {{a.ring(), Ideal(a.ring(), std::move(all))}, reduced};
}

Subvariety subvariety(const GroupVariety& a, const std::vector<std::string>& gens, bool reduced) {
  std::vector<Poly> polys;
  for (const auto& g : gens) polys.push_back(parse_poly(g, a.ring()));
  return subvariety(a, polys, reduced);
}

Ideal point_ideal(const GroupVariety& a, const GroupPoint& p) {
  const auto c = p.coordinates();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < c.size(); ++i)
    gens.push_back(Poly::variable(a.ring(), i) - Poly::constant(a.ring(), c[i]));
  return Ideal(a.ring(), std::move(gens));
}

bool contains(const Subvariety& x, const GroupPoint& p) {
  if (!p.is_affine()) return false;
  const auto c = p.coordinates();
  for (const auto& g : x.patch.ideal.generators())
    if (!g.evaluate(c).is_zero()) return false;
  return true;
}

Poly substitute_rational(const Poly& f, const std::vector<RationalExpr>& images, const RingPtr& target) {
  const std::size_t nv = f.nvars();
  if (images.size() != nv) throw DomainError("substitute_rational: arity mismatch");
  std::vector<int> deg(nv);
  for (std::size_t v = 0; v < nv; ++v) deg[v] = f.degree_in(v);
  std::vector<std::vector<Poly>> npow(nv), dpow(nv);
  const Poly one = Poly::constant(target, RationalFunction(f.prime(), 1));
  for (std::size_t v = 0; v < nv; ++v) {
    npow[v].push_back(one);
    dpow[v].push_back(one);
    for (int e = 1; e <= deg[v]; ++e) {
      npow[v].push_back(npow[v].back() * images[v].num);
      dpow[v].push_back(dpow[v].back() * images[v].den);
    }
  }
  Poly acc(target);
  for (const auto& term : f.terms()) {
    Poly s = Poly::constant(target, term.c);
    for (std::size_t v = 0; v < nv; ++v) {
      if (deg[v] == 0) continue;
      const int e = term.m.e[v];
      if (e) s = s * npow[v][e];
      if (deg[v] - e) s = s * dpow[v][deg[v] - e];
    }
    acc += s;
  }
  return acc;
}

TranslationResult translate(const GroupVariety& a, const Subvariety& x, const GroupPoint& q, const Budget& budget) {
  require_on(a, q, "translation point");
  TranslationResult out{x, {}};
  if (q.is_identity()) return out;
  const RingPtr& ring = a.ring();
  const std::size_t n = a.dimension();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (!q.parts[i].infinity) active.push_back(i);

  const std::vector<Poly> weier = a.ideal().generators();
  std::optional<Ideal> acc;
  for (unsigned mask = 0; mask < (1u << active.size()); ++mask) {
    budget.check_deadline("translate");
    std::vector<RationalExpr> images;
    for (std::size_t v = 0; v < ring->nvars(); ++v) images.push_back(RationalExpr::variable(ring, v));
    std::vector<Poly> extra;
    Poly chart = Poly::constant(ring, RationalFunction(a.prime(), 1));
    bool off_patch = false;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t i = active[k];
      const EllipticCurve& e = a.factor(i);
      const KPoint neg_q = negate(e, q.parts[i]);
      const Poly xi = Poly::variable(ring, a.x_index(i)), yi = Poly::variable(ring, a.y_index(i));
      if (mask & (1u << k)) {
        // R_i = -Q_i, so R_i - Q_i = -2Q_i.
        const KPoint target = add(e, neg_q, neg_q);
        if (target.infinity) {
          off_patch = true;
          break;
        }
        images[a.x_index(i)] = RationalExpr::constant(ring, target.x);
        images[a.y_index(i)] = RationalExpr::constant(ring, target.y);
        extra.push_back(xi - Poly::constant(ring, neg_q.x));
        extra.push_back(yi - Poly::constant(ring, neg_q.y));
      } else {
        const auto c = symbolic_coeffs(e, ring);
        const auto generic = AffinePoint<RationalExpr>::at(RationalExpr::variable(ring, a.x_index(i)),
                                                            RationalExpr::variable(ring, a.y_index(i)));
        const auto shifted = chord_add(c, generic,
                                       AffinePoint<RationalExpr>::at(RationalExpr::constant(ring, neg_q.x),
                                                                     RationalExpr::constant(ring, neg_q.y)));
        images[a.x_index(i)] = shifted.x;
        images[a.y_index(i)] = shifted.y;
        chart = chart * (xi - Poly::constant(ring, neg_q.x));
      }
    }
    if (off_patch) {
      std::string where;
      for (std::size_t k = 0; k < active.size(); ++k)
        if (mask & (1u << k)) where += (where.empty() ? "" : ",") + std::to_string(active[k] + 1);
      out.left_patch.push_back("points of X with -2Q_i = O in factors {" + where + "}");
      continue;
    }
    std::vector<Poly> gens = extra;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(weier[i]);
    for (const auto& f : x.patch.ideal.generators()) {
      Poly g = substitute_rational(f.in_ring(ring), images, ring);
      g = reduce_full(g, weier);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    Ideal piece(ring, std::move(gens));
    if (!chart.is_constant()) piece = saturate(piece, chart, budget);
    if (piece.is_unit(budget)) continue;
    acc = acc ? ideal_intersect(*acc, piece, budget) : piece;
  }
  out.translate.patch = {ring, acc ? Ideal(ring, acc->basis(budget)) : Ideal::unit(ring)};
  return out;
}

namespace {

std::vector<Combination> enumerate(const GroupVariety& a, const Subgroup& gamma, long long lo, long long hi,
                                   const Budget& budget, const char* stage) {
  const std::size_t r = gamma.generators.size();
  const long long width = hi - lo + 1;
  double count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= static_cast<double>(width);
  if (count > static_cast<double>(budget.max_cosets))
    throw ResourceLimitError(stage, std::to_string(static_cast<long long>(count)) + " elements exceed max_cosets=" +
                                        std::to_string(budget.max_cosets));
  for (const auto& g : gamma.generators) require_on(a, g, "generator");
  std::vector<Combination> out;
  std::vector<long long> c(r, lo);
  while (true) {
    budget.check_deadline(stage);
    GroupPoint pt = identity(a);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i]) pt = add(a, pt, scalar_mul(a, c[i], gamma.generators[i]));
    out.push_back({c, std::move(pt)});
    std::size_t i = r;
    while (i > 0 && c[i - 1] == hi) c[--i] = lo;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

}  // namespace

std::vector<Combination> coset_reps(const GroupVariety& a, const Subgroup& gamma, long long pm, const Budget& budget) {
  if (pm < 1) throw DomainError("coset_reps: p^m must be positive");
  return enumerate(a, gamma, 0, pm - 1, budget, "coset_reps");
}

std::vector<Combination> gamma_ball(const GroupVariety& a, const Subgroup& gamma, int radius, const Budget& budget) {
  if (radius < 0) throw DomainError("gamma_ball: negative radius");
  return enumerate(a, gamma, -radius, radius, budget, "gamma_ball");
}

}  // namespace jetexc
