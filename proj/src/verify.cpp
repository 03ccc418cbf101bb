#include "jetexc/verify.hpp"

#include <random>

#include "jetexc/jets.hpp"

namespace jetexc {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return "pass";
    case VerifyStatus::Fail:
      return "fail";
    case VerifyStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::string coeff_str(const std::vector<long long>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

// Keeps reports readable when a battery fails wholesale.
constexpr std::size_t kMaxListedFailures = 8;

void fail(VerificationReport& r, const std::string& what) {
  if (r.failures.size() < kMaxListedFailures) r.failures.push_back(what);
  else if (r.failures.size() == kMaxListedFailures) r.failures.push_back("further failures omitted");
  r.status = VerifyStatus::Fail;
}

// The contact of a v-integral affine point, or nothing when it is not integral.
std::optional<Valuation> contact(const Place& v, const Ideal& ideal, const GroupPoint& p, const Budget& budget) {
  if (!p.is_affine()) return std::nullopt;
  const auto c = p.coordinates();
  if (!is_integral(v, c)) return std::nullopt;
  return contact_order(v, ideal, c, budget).order;
}

long long p_power(std::uint32_t p, std::size_t k) {
  long long m = 1;
  for (std::size_t i = 0; i < k; ++i) m *= p;
  return m;
}

}  // namespace

VerificationReport check_excdist(const GroupVariety& a, const Subvariety& x, const Ideal& exc, const Subgroup& gamma,
                                 const Place& v, std::size_t k, int radius, const std::string& fixture,
                                 const Budget& budget) {
  VerificationReport r;
  r.statement = "excdist k=" + std::to_string(k) + " v=" + v.str();
  r.fixture = fixture;
  if (k == 0) {
    r.n_min = 0;
    r.notes.push_back("Exc^0 = X: the statement holds for every sample");
    return r;
  }
  const long long mult = p_power(a.prime(), k);
  std::optional<long long> worst;  // largest X-contact among violating samples
  bool unbounded = false;
  struct Seen {
    Valuation x, e;
  };
  std::vector<Seen> seen;
  std::size_t skipped = 0;
  for (const auto& q : gamma_ball(a, gamma, radius, budget)) {
    budget.check_deadline("check_excdist");
    const GroupPoint p = scalar_mul(a, mult, q.point);
    SampleRecord s;
    s.id = coeff_str(q.coefficients);
    s.fields.push_back({"point", p.str()});
    const auto cx = contact(v, x.patch.ideal, p, budget);
    if (!cx) {
      s.fields.push_back({"skipped", p.is_affine() ? "not v-integral" : "off the affine patch"});
      r.samples.push_back(std::move(s));
      ++skipped;
      continue;
    }
    const Valuation ce = *contact(v, exc, p, budget);
    s.fields.push_back({"x_contact", cx->str()});
    s.fields.push_back({"exc_contact", ce.str()});
    ++r.samples_tested;
    if (ce < *cx) {
      s.ok = false;
      if (cx->infinite) unbounded = true;
      else worst = std::max(worst.value_or(cx->value), cx->value);
    }
    seen.push_back({*cx, ce});
    r.samples.push_back(std::move(s));
  }
  if (skipped) r.notes.push_back(std::to_string(skipped) + " samples skipped (not on the patch or not v-integral)");
  if (unbounded) {
    fail(r, "a sample on X has finite contact with Exc^" + std::to_string(k));
    return r;
  }
  r.n_min = worst ? *worst + 1 : 0;
  const long long deep = std::max<long long>(*r.n_min, 1);
  bool any_deep = false;
  for (const auto& s : seen) any_deep = any_deep || s.x.infinite || s.x.value >= deep;
  if (!any_deep) {
    r.status = VerifyStatus::Inconclusive;
    r.notes.push_back("no sample reaches contact " + std::to_string(deep) + " with X");
  }
  return r;
}

VerificationReport check_containment(const GroupVariety& a, const Subvariety& x, const Ideal& exc,
                                     const Subgroup& gamma, std::size_t k, int radius, const std::string& fixture,
                                     const Budget& budget) {
  VerificationReport r;
  r.statement = "containment k=" + std::to_string(k);
  r.fixture = fixture;
  const long long mult = p_power(a.prime(), k);
  for (const auto& q : gamma_ball(a, gamma, radius, budget)) {
    budget.check_deadline("check_containment");
    const GroupPoint p = scalar_mul(a, mult, q.point);
    if (!contains(x, p)) continue;
    SampleRecord s;
    s.id = coeff_str(q.coefficients);
    s.fields.push_back({"point", p.str()});
    s.ok = vanishes_at(exc, p.coordinates());
    s.fields.push_back({"on_exc", s.ok ? "true" : "false"});
    ++r.samples_tested;
    if (!s.ok) fail(r, p.str() + " lies on X but not on Exc^" + std::to_string(k));
    r.samples.push_back(std::move(s));
  }
  if (r.samples_tested == 0) r.notes.push_back("no point of X in the sampled multiples");
  return r;
}

VerificationReport check_inequality(const GroupVariety& a, const Subvariety& x, const Subvariety& y,
                                    const Subgroup& gamma, const Place& v, int radius, const std::string& fixture,
                                    const Budget& budget) {
  VerificationReport r;
  r.statement = "inequality v=" + v.str() + " radius=" + std::to_string(radius);
  r.fixture = fixture;
  std::optional<long long> best;
  bool infinite = false;
  for (const auto& q : gamma_ball(a, gamma, radius, budget)) {
    budget.check_deadline("check_inequality");
    const GroupPoint& p = q.point;
    if (!p.is_affine() || !is_integral(v, p.coordinates())) continue;
    const auto cmp = distance_compare(v, x.patch.ideal, y.patch.ideal, p.coordinates(), budget);
    SampleRecord s;
    s.id = coeff_str(q.coefficients);
    s.fields.push_back({"point", p.str()});
    s.fields.push_back({"x_contact", cmp.x.order.str()});
    s.fields.push_back({"y_contact", cmp.y.order.str()});
    ++r.samples_tested;
    long long gap = 0;
    switch (cmp.gap.kind) {
      case HeightGap::Kind::PlusInfinity:
        s.ok = false;
        infinite = true;
        fail(r, p.str() + " lies on X but not on Y");
        break;
      case HeightGap::Kind::MinusInfinity:
        s.fields.push_back({"gap", "-inf"});
        r.samples.push_back(std::move(s));
        continue;
      case HeightGap::Kind::Finite:
        gap = cmp.gap.exponent;
        break;
    }
    if (s.ok) {
      s.fields.push_back({"gap", std::to_string(gap)});
      best = std::max(best.value_or(gap), gap);
    }
    r.samples.push_back(std::move(s));
  }
  if (!infinite) r.c_v_exponent = best.value_or(0);
  if (r.samples_tested == 0) {
    r.status = VerifyStatus::Inconclusive;
    r.notes.push_back("no v-integral sample");
  }
  return r;
}

VerificationReport check_corollary(const GroupVariety& a, const Subvariety& x, const Subvariety& y,
                                   const Subgroup& gamma, int radius, const std::string& fixture,
                                   const Budget& budget) {
  VerificationReport r;
  r.statement = "corollary radius=" + std::to_string(radius);
  r.fixture = fixture;
  std::size_t at_infinity = 0;
  for (const auto& q : gamma_ball(a, gamma, radius, budget)) {
    budget.check_deadline("check_corollary");
    if (!q.point.is_affine()) {
      ++at_infinity;
      continue;
    }
    const bool in_x = contains(x, q.point), in_y = contains(y, q.point);
    ++r.samples_tested;
    if (!in_x && !in_y) continue;
    SampleRecord s;
    s.id = coeff_str(q.coefficients);
    s.fields.push_back({"point", q.point.str()});
    s.fields.push_back({"in_x", in_x ? "true" : "false"});
    s.fields.push_back({"in_y", in_y ? "true" : "false"});
    s.ok = in_x == in_y;
    if (!s.ok) fail(r, q.point.str() + (in_x ? " is on X only" : " is on Y only"));
    r.samples.push_back(std::move(s));
  }
  if (at_infinity) r.notes.push_back(std::to_string(at_infinity) + " points with a part at O are off the patch");
  return r;
}

std::vector<BatteryCurve> battery_curves() {
  auto rf = [](const std::string& s, std::uint32_t p) { return parse_rational_function(s, p); };
  auto pt = [&](const std::string& x, const std::string& y, std::uint32_t p) {
    return KPoint::at(rf(x, p), rf(y, p));
  };
  return {
      {"p2", EllipticCurve::parse({"1", "0", "0", "0", "t^3"}, 2), {pt("t", "t", 2)}},
      {"p3", EllipticCurve::parse({"0", "1", "0", "0", "t^2"}, 3), {pt("0", "t", 3), pt("2", "t", 3)}},
      {"p5", EllipticCurve::parse({"0", "0", "0", "1", "t^2"}, 5), {pt("0", "t", 5), pt("2", "t", 5), pt("3", "t", 5)}},
  };
}

namespace {

KPoint random_point(std::mt19937_64& rng, const BatteryCurve& c) {
  KPoint acc;
  for (const auto& g : c.generators) {
    const long long m = static_cast<long long>(rng() % 7) - 3;
    acc = add(c.curve, acc, scalar_mul(c.curve, m, g));
  }
  return acc;
}

RationalFunction random_coefficient(std::mt19937_64& rng, std::uint32_t p) {
  std::vector<std::uint32_t> c(3);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
  return RationalFunction(UPoly(p, c));
}

Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, int maxdeg) {
  std::vector<Term> terms;
  for (int i = 0; i < 4; ++i) {
    Monomial m{};
    int left = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (std::size_t v = 0; v < ring->nvars() && left > 0; ++v) {
      const int e = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      m.e[v] = static_cast<std::uint8_t>(e);
      m.deg = static_cast<std::uint16_t>(m.deg + e);
      left -= e;
    }
    terms.push_back({m, random_coefficient(rng, ring->prime())});
  }
  return Poly::from_terms(ring, std::move(terms));
}

bool same(const KPoint& a, const KPoint& b) {
  return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
}

struct Tally {
  std::string id;
  std::size_t tested = 0, failed = 0;
};

void record(VerificationReport& r, std::vector<Tally>& tallies) {
  for (const auto& t : tallies) {
    SampleRecord s;
    s.id = t.id;
    s.fields.push_back({"tested", std::to_string(t.tested)});
    s.fields.push_back({"failed", std::to_string(t.failed)});
    s.ok = t.failed == 0;
    r.samples_tested += t.tested;
    r.samples.push_back(std::move(s));
  }
}

// Runs one exact check; exceptions count as failures.
template <class F>
void probe(VerificationReport& r, Tally& t, const std::string& what, F&& check) {
  ++t.tested;
  bool ok = false;
  std::string why;
  try {
    ok = check();
  } catch (const std::exception& e) {
    why = std::string(": ") + e.what();
  }
  if (!ok) {
    ++t.failed;
    fail(r, t.id + " " + what + why);
  }
}

}  // namespace

VerificationReport jet_battery(const BatteryOptions& o) {
  FaultInjectionScope scope(o.fault);
  VerificationReport r;
  r.statement = "jet identities";
  r.fixture = "battery curves";
  std::mt19937_64 rng(o.seed);
  std::vector<Tally> tallies;
  for (const auto& c : battery_curves()) {
    const std::uint32_t p = c.curve.prime();
    const RingPtr ring = PolyRing::make(p, {"x", "y"});
    const AffinePresentation curve{ring, Ideal(ring, {c.curve.weierstrass(ring, 0, 1)})};
    std::vector<JetPresentation> jets;
    for (std::size_t n = 0; n <= o.max_order; ++n) jets.push_back(prolong_ideal(curve, n));
    Tally trunc{c.id + "/truncation"}, on_jets{c.id + "/lift-on-jet-scheme"}, maps{c.id + "/map-functoriality"},
        compose{c.id + "/composition"};
    std::vector<std::vector<RationalFunction>> points;
    for (std::size_t attempts = 0; points.size() < o.points && attempts < 8 * o.points; ++attempts) {
      const KPoint q = random_point(rng, c);
      if (!q.infinity) points.push_back({q.x, q.y});
    }
    for (const auto& pt : points) {
      const std::size_t n = 1 + rng() % o.max_order;
      const std::size_t m = rng() % (n + 1);
      const std::string at = "(" + pt[0].str() + "," + pt[1].str() + ") n=" + std::to_string(n);
      probe(r, trunc, at, [&] {
        return truncate(lift_point(curve, pt, n), ring, m) == lift_point(curve, pt, m);
      });
      probe(r, on_jets, at, [&] { return vanishes_at(jets[n].ideal, lift_point(curve, pt, n).coords); });
    }
    const AffinePresentation plane = AffinePresentation::affine_space(p, {"x", "y"});
    for (std::size_t i = 0; i < o.maps && !points.empty(); ++i) {
      const PolyMap f{plane.ring, plane.ring, {random_poly(rng, plane.ring, 3), random_poly(rng, plane.ring, 3)}};
      const PolyMap g{plane.ring, plane.ring, {random_poly(rng, plane.ring, 2), random_poly(rng, plane.ring, 2)}};
      const std::size_t n = 1 + i % o.max_order;
      const auto& pt = points[i % points.size()];
      probe(r, maps, "map " + std::to_string(i), [&] {
        return apply(prolong_morphism(f, n), lift_point(plane, pt, n)) == lift_point(plane, f.apply(pt), n);
      });
      probe(r, compose, "map " + std::to_string(i), [&] {
        const auto lhs = prolong_morphism(g.compose(f), n);
        const auto rhs = prolong_morphism(g, n).compose(prolong_morphism(f, n));
        for (std::size_t v = 0; v < lhs.components.size(); ++v)
          if (!(lhs.components[v] == rhs.components[v])) return false;
        return true;
      });
    }
    for (auto* t : {&trunc, &on_jets, &maps, &compose}) tallies.push_back(*t);
  }
  record(r, tallies);
  return r;
}

VerificationReport group_battery(const BatteryOptions& o) {
  FaultInjectionScope scope(o.fault);
  VerificationReport r;
  r.statement = "group law";
  r.fixture = "battery curves";
  std::mt19937_64 rng(o.seed);
  std::vector<Tally> tallies;
  for (const auto& c : battery_curves()) {
    const auto& e = c.curve;
    Tally assoc{c.id + "/associativity"}, comm{c.id + "/commutativity"}, inv{c.id + "/inverse"},
        hom{c.id + "/lambda1-homomorphism"};
    for (std::size_t i = 0; i < o.triples; ++i) {
      const KPoint p = random_point(rng, c), q = random_point(rng, c), s = random_point(rng, c);
      const std::string at = "triple " + std::to_string(i);
      probe(r, assoc, at, [&] { return same(add(e, add(e, p, q), s), add(e, p, add(e, q, s))); });
      probe(r, comm, at, [&] { return same(add(e, p, q), add(e, q, p)); });
      probe(r, inv, at, [&] { return add(e, p, negate(e, p)).infinity; });
    }
    for (std::size_t attempts = 0; hom.tested < o.pairs && attempts < 8 * o.pairs; ++attempts) {
      const KPoint p = random_point(rng, c), q = random_point(rng, c);
      if (p.infinity || q.infinity) continue;
      probe(r, hom, "pair " + std::to_string(attempts), [&] {
        const KPoint s = add(e, p, q);
        if (s.infinity) return jet_add(e, lift(p, 1), lift(q, 1), 1).infinity;
        const auto j = jet_add(e, lift(p, 1), lift(q, 1), 1);
        const auto l = lift(s, 1);
        return !j.infinity && j.x == l.x && j.y == l.y;
      });
    }
    for (auto* t : {&assoc, &comm, &inv, &hom}) tallies.push_back(*t);
  }
  record(r, tallies);
  return r;
}

VerificationReport exceptional_battery(const GroupVariety& a, const Subvariety& x, const Subgroup& gamma,
                                       const std::string& fixture, const Budget& budget) {
  VerificationReport r;
  r.statement = "exceptional invariants";
  r.fixture = fixture;
  Tally zero{"exc0-equals-x"}, descent{"chain-descent"}, sound{"crit-to-exc-soundness"};
  const auto chain = stable_exceptional(a, x, 2, budget);
  probe(r, zero, "", [&] {
    return subscheme_relation(exceptional_scheme(a, x, 0, budget).ideal, x.patch.ideal, budget) ==
           SubschemeRelation::Equal;
  });
  for (std::size_t k = 0; k + 1 < chain.chain.size(); ++k)
    probe(r, descent, "k=" + std::to_string(k + 1), [&] {
      return radical_contains(chain.chain[k + 1].ideal, chain.chain[k].ideal, budget);
    });
  const auto crit = critical_scheme(a, x, 1, budget);
  const Ideal& exc1 = chain.chain.at(1).ideal;
  for (const auto& q : gamma_ball(a, gamma, 2, budget)) {
    const GroupPoint p = scalar_mul(a, a.prime(), q.point);
    if (!p.is_affine()) continue;
    const auto jet = lift_point(a.presentation(), p.coordinates(), 1);
    if (!vanishes_at(crit.ideal, jet.coords)) continue;
    probe(r, sound, p.str(), [&] { return vanishes_at(exc1, p.coordinates()); });
  }
  std::vector<Tally> tallies{zero, descent, sound};
  record(r, tallies);
  if (chain.stabilized_at) r.notes.push_back("chain stabilized at k=" + std::to_string(*chain.stabilized_at));
  return r;
}

std::vector<VerificationReport> property_suite(std::uint64_t seed, bool fault) {
  BatteryOptions o;
  o.seed = seed;
  o.fault = fault;
  return {jet_battery(o), group_battery(o)};
}

}  // namespace jetexc
