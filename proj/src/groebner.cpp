#include "jetexc/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace jetexc {

Budget Budget::with_env_overrides() const {
  Budget b = *this;
  const char* env = std::getenv("JETEXC_BUDGET");
  if (env == nullptr) return b;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("JETEXC_BUDGET", "expected key=value, got " + item);
    const std::string key = item.substr(0, eq);
    const long long v = std::stoll(item.substr(eq + 1));
    if (v < 0) throw ParseError("JETEXC_BUDGET", key + " must be nonnegative");
    if (key == "max_pairs") {
      b.max_pairs = static_cast<std::size_t>(v);
    } else if (key == "max_degree") {
      b.max_degree = static_cast<int>(v);
    } else if (key == "max_basis") {
      b.max_basis = static_cast<std::size_t>(v);
    } else if (key == "max_cosets") {
      b.max_cosets = static_cast<std::size_t>(v);
    } else if (key == "wall_time_s") {
      b.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(v);
    } else {
      throw ParseError("JETEXC_BUDGET", "unknown key " + key);
    }
  }
  return b;
}

void Budget::check_deadline(const char* stage) const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw ResourceLimitError(stage, "wall-time budget exhausted");
}

namespace {

// Coefficients cleared to F_p[t], content removed, leading coefficient monic in t.
// The Buchberger loop below works on such representatives only, which keeps
// rational-function gcds out of the inner reduction step.
Poly primitive(const Poly& f) {
  if (f.is_zero()) return f;
  const std::uint32_t p = f.prime();
  UPoly l = UPoly::constant(p, 1);
  for (const auto& t : f.terms()) {
    const UPoly& d = t.c.denominator();
    if (!d.is_one()) l = l * d.exact_div(gcd(l, d));
  }
  std::vector<UPoly> nums;
  nums.reserve(f.size());
  UPoly content(p);
  for (const auto& t : f.terms()) {
    UPoly n = l.is_one() ? t.c.numerator() : t.c.numerator() * l.exact_div(t.c.denominator());
    if (!content.is_constant() || content.is_zero()) content = gcd(content, n);
    nums.push_back(std::move(n));
  }
  const bool divide = !content.is_constant();
  std::vector<Term> out;
  out.reserve(nums.size());
  std::uint32_t scale = 1;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    UPoly n = divide ? nums[i].exact_div(content) : std::move(nums[i]);
    if (i == 0) scale = fp::inv(n.lead(), p);
    if (scale != 1) n = n.scaled(scale);
    out.push_back({f.terms()[i].m, RationalFunction(std::move(n))});
  }
  return Poly::from_sorted_terms(f.ring(), std::move(out));
}

// Divides every coefficient of `rest` and `f` by their common content.
void strip_content(std::vector<Term>& rest, Poly& f) {
  const std::uint32_t p = f.ring()->prime();
  UPoly content(p);
  for (const auto& t : rest) {
    content = gcd(content, t.c.numerator());
    if (content.is_constant()) return;
  }
  for (const auto& t : f.terms()) {
    content = gcd(content, t.c.numerator());
    if (content.is_constant()) return;
  }
  if (content.is_zero()) return;
  for (auto& t : rest) t.c = RationalFunction(t.c.numerator().exact_div(content));
  std::vector<Term> ft = f.terms();
  for (auto& t : ft) t.c = RationalFunction(t.c.numerator().exact_div(content));
  f = Poly::from_sorted_terms(f.ring(), std::move(ft));
}

// Full fraction-free reduction of a primitive f; find(m) returns a divisor
// whose leading monomial divides m, or nullptr. Result is primitive.
template <class Find>
Poly ff_reduce(Poly f, std::size_t n, Find&& find) {
  std::vector<Term> rest;
  std::size_t scaled_steps = 0;
  while (!f.is_zero()) {
    const Term& lt = f.lead();
    const Poly* g = find(lt.m);
    if (g == nullptr) {
      rest.push_back(lt);
      f = f.tail();
      continue;
    }
    UPoly a = g->lead_coeff().numerator();
    UPoly b = lt.c.numerator();
    const UPoly d = gcd(a, b);
    if (!d.is_one()) {
      a = a.exact_div(d);
      b = b.exact_div(d);
    }
    const Monomial q = Monomial::quotient(lt.m, g->lead_monomial(), n);
    if (!a.is_one()) {
      const RationalFunction ra(a);
      f = f.scaled(ra);
      for (auto& t : rest) t.c = t.c * ra;
      if (!a.is_constant()) ++scaled_steps;
    }
    f = f.sub_mul(RationalFunction(std::move(b)), q, *g);
    if (scaled_steps >= 8) {
      strip_content(rest, f);
      scaled_steps = 0;
    }
  }
  if (rest.empty()) return f;
  return primitive(Poly::from_sorted_terms(f.ring(), std::move(rest)));
}

struct Element {
  Poly f;
  Monomial lm;
  VarMask lm_mask;
  int sugar;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const Budget& budget, GroebnerStats* stats)
      : ring_(std::move(ring)), n_(ring_->nvars()), budget_(budget), stats_(stats) {}

  std::vector<Poly> run(const std::vector<Poly>& gens) {
    // Seed with the inputs ordered by leading monomial, smallest first.
    std::vector<Poly> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(primitive(g.in_ring(ring_)));
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      return ring_->order().compare(a.lead_monomial(), b.lead_monomial(), n_) < 0;
    });
    for (auto& g : input) {
      Poly h = reduce(g);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Poly::constant(ring_, RationalFunction(ring_->prime(), 1))};
      add(std::move(h), g.total_degree());
    }
    while (!pairs_.empty()) {
      budget_.check_deadline("groebner");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        const int c = ring_->order().compare(a.lcm, b.lcm, n_);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair pr = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      if (++pairs_done_ > budget_.max_pairs)
        throw ResourceLimitError("groebner", "pair budget of " + std::to_string(budget_.max_pairs) + " exceeded");
      if (stats_) ++stats_->pairs_reduced;
      Poly s = spoly(pr);
      Poly h = reduce(s);
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (h.is_constant()) return {Poly::constant(ring_, RationalFunction(ring_->prime(), 1))};
      add(std::move(h), pr.sugar);
    }
    return finish();
  }

 private:
  Poly spoly(const Pair& pr) const {
    const Element& a = basis_[pr.i];
    const Element& b = basis_[pr.j];
    UPoly ca = a.f.lead_coeff().numerator(), cb = b.f.lead_coeff().numerator();
    const UPoly d = gcd(ca, cb);
    if (!d.is_one()) {
      ca = ca.exact_div(d);
      cb = cb.exact_div(d);
    }
    Poly fa = a.f.mul_term(RationalFunction(std::move(cb)), Monomial::quotient(pr.lcm, a.lm, n_));
    return primitive(fa.sub_mul(RationalFunction(std::move(ca)), Monomial::quotient(pr.lcm, b.lm, n_), b.f));
  }

  const Poly* divisor_of(const Monomial& m) const {
    const VarMask mm = m.support(n_);
    for (const auto& e : basis_)
      if (e.active && (e.lm_mask & ~mm) == 0 && e.lm.divides(m, n_)) return &e.f;
    return nullptr;
  }

  Poly reduce(Poly f) const {
    return ff_reduce(std::move(f), n_, [this](const Monomial& m) { return divisor_of(m); });
  }

  void add(Poly h, int sugar) {
    Element e{std::move(h), {}, 0, sugar};
    e.lm = e.f.lead_monomial();
    e.lm_mask = e.lm.support(n_);
    if (e.lm.deg > budget_.max_degree)
      throw ResourceLimitError("groebner", "degree budget of " + std::to_string(budget_.max_degree) + " exceeded");
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(e));
    update(hi);
    std::size_t active = 0;
    for (const auto& b : basis_) active += b.active;
    if (stats_) stats_->max_basis_size = std::max(stats_->max_basis_size, active);
    if (active > budget_.max_basis)
      throw ResourceLimitError("groebner", "basis budget of " + std::to_string(budget_.max_basis) + " exceeded");
  }

  // Gebauer-Moeller update for the new element at index hi.
  void update(std::size_t hi) {
    const Element& h = basis_[hi];
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < hi; ++i) {
      if (!basis_[i].active) continue;
      const Element& g = basis_[i];
      const Monomial l = Monomial::lcm(g.lm, h.lm, n_);
      const int s = std::max(g.sugar + l.deg - g.lm.deg, h.sugar + l.deg - h.lm.deg);
      cand.push_back({i, hi, l, s});
    }
    std::vector<bool> coprime(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k)
      coprime[k] = Monomial::coprime(basis_[cand[k].i].lm, h.lm, n_);

    // Keep a candidate unless another candidate's lcm divides its lcm
    // (properly, or equal with a smaller index among the equal ones).
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (!cand[b].lcm.divides(cand[a].lcm, n_)) continue;
        if (!(cand[b].lcm == cand[a].lcm)) {
          keep[a] = false;
        } else if (coprime[a] ? false : (coprime[b] || b < a)) {
          keep[a] = false;
        }
      }
    }
    // Among equal-lcm survivors, a coprime one removes the whole class.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a] || !coprime[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b)
        if (b != a && cand[b].lcm == cand[a].lcm) keep[b] = false;
      keep[a] = false;
    }

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const Pair& pr : pairs_) {
      if (h.lm.divides(pr.lcm, n_)) {
        const Monomial li = Monomial::lcm(basis_[pr.i].lm, h.lm, n_);
        const Monomial lj = Monomial::lcm(basis_[pr.j].lm, h.lm, n_);
        if (!(li == pr.lcm) && !(lj == pr.lcm)) continue;
      }
      old.push_back(pr);
    }
    pairs_ = std::move(old);
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (keep[k]) pairs_.push_back(cand[k]);
    for (std::size_t i = 0; i < hi; ++i)
      if (basis_[i].active && h.lm.divides(basis_[i].lm, n_)) basis_[i].active = false;
  }

  std::vector<Poly> finish() {
    std::vector<Poly> g;
    for (const auto& e : basis_)
      if (e.active) g.push_back(e.f);
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
      return ring_->order().compare(a.lead_monomial(), b.lead_monomial(), n_) < 0;
    });
    // Minimal basis: no leading monomial divides another (ties already removed).
    std::vector<Poly> minimal;
    for (const auto& f : g) {
      bool redundant = false;
      for (const auto& m : minimal)
        if (m.lead_monomial().divides(f.lead_monomial(), n_)) redundant = true;
      if (!redundant) minimal.push_back(f);
    }
    std::vector<VarMask> masks;
    for (const auto& f : minimal) masks.push_back(f.lead_monomial().support(n_));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      minimal[i] = ff_reduce(minimal[i], n_, [&](const Monomial& m) -> const Poly* {
        const VarMask mm = m.support(n_);
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (j != i && (masks[j] & ~mm) == 0 && minimal[j].lead_monomial().divides(m, n_)) return &minimal[j];
        return nullptr;
      });
    }
    for (auto& f : minimal) f = f.monic();
    return minimal;
  }

  RingPtr ring_;
  std::size_t n_;
  const Budget& budget_;
  GroebnerStats* stats_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::size_t pairs_done_ = 0;
};

}  // namespace

std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& gens, const Budget& budget,
                                         GroebnerStats* stats) {
  if (gens.empty()) return {};
  return Buchberger(gens.front().ring(), budget, stats).run(gens);
}

Poly reduce_full(const Poly& f, const std::vector<Poly>& basis) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->nvars();
  std::vector<VarMask> masks;
  for (const auto& g : basis) masks.push_back(g.lead_monomial().support(n));
  std::vector<Term> rest;
  Poly cur = f;
  while (!cur.is_zero()) {
    const Term& lt = cur.lead();
    const VarMask mm = lt.m.support(n);
    const Poly* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if ((masks[k] & ~mm) == 0 && basis[k].lead_monomial().divides(lt.m, n)) {
        div = &basis[k];
        break;
      }
    }
    if (div) {
      const RationalFunction c = lt.c / div->lead_coeff();
      cur = cur.sub_mul(c, Monomial::quotient(lt.m, div->lead_monomial(), n), *div);
    } else {
      rest.push_back(lt);
      cur = cur.tail();
    }
  }
  return Poly::from_sorted_terms(ring, std::move(rest));
}

Division divide(const Poly& f, const std::vector<Poly>& divisors) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->nvars();
  Division d;
  std::vector<std::vector<Term>> q(divisors.size());
  std::vector<Term> rest;
  Poly cur = f;
  while (!cur.is_zero()) {
    const Term lt = cur.lead();
    std::size_t k = 0;
    for (; k < divisors.size(); ++k)
      if (divisors[k].lead_monomial().divides(lt.m, n)) break;
    if (k < divisors.size()) {
      const RationalFunction c = lt.c / divisors[k].lead_coeff();
      const Monomial m = Monomial::quotient(lt.m, divisors[k].lead_monomial(), n);
      q[k].push_back({m, c});
      cur = cur.sub_mul(c, m, divisors[k]);
    } else {
      rest.push_back(lt);
      cur = cur.tail();
    }
  }
  for (auto& terms : q) d.quotients.push_back(Poly::from_terms(ring, std::move(terms)));
  d.remainder = Poly::from_sorted_terms(ring, std::move(rest));
  return d;
}

}  // namespace jetexc
