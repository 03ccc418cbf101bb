#include "jetexc/ideal.hpp"

#include <algorithm>

namespace jetexc {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->same_variables(*ring_)) throw DomainError("ideal generator from a different ring");
    if (g.is_zero()) continue;
    Poly h = g.in_ring(ring_).monic();
    if (std::find(gens_.begin(), gens_.end(), h) == gens_.end()) gens_.push_back(std::move(h));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, RationalFunction(ring->prime(), 1));
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Poly> g;
  for (const auto& s : generators) g.push_back(parse_poly(s, ring));
  return Ideal(std::move(ring), std::move(g));
}

const std::vector<Poly>& Ideal::basis(const Budget& budget) const {
  std::call_once(cache_->once, [&] {
    cache_->basis = reduced_groebner_basis(gens_, budget);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const { return cache_->ready; }

bool Ideal::is_unit(const Budget& budget) const {
  const auto& b = basis(budget);
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::contains(const Poly& f, const Budget& budget) const {
  return reduce_full(f.in_ring(ring_), basis(budget)).is_zero();
}

Ideal Ideal::in_ring(RingPtr ring) const {
  if (!ring->same_variables(*ring_)) throw DomainError("Ideal::in_ring: variable sets differ");
  return Ideal(std::move(ring), gens_);
}

std::vector<std::string> Ideal::canonical() const {
  const auto& b = basis();
  std::vector<std::string> out;
  for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(it->str());
  return out;
}

Ideal groebner_basis(const Ideal& ideal, TermOrder order, const Budget& budget) {
  Ideal r = ideal.in_ring(ideal.ring()->with_order(order));
  r.basis(budget);
  return r;
}

Poly normal_form(const Poly& f, const Ideal& ideal, const Budget& budget) {
  return reduce_full(f.in_ring(ideal.ring()), ideal.basis(budget));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_front, TermOrder order) {
  std::vector<std::string> names = extra_front;
  for (const auto& n : extra_front)
    if (ring->index_of(n) >= 0) throw DomainError("auxiliary variable clashes with " + n);
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return PolyRing::make(ring->prime(), std::move(names), order);
}

namespace {

// Moves generators into a ring whose variable list is a permutation/superset.
std::vector<Poly> lift_into(const std::vector<Poly>& gens, const RingPtr& target) {
  std::vector<Poly> out;
  if (gens.empty()) return out;
  const auto& src = *gens.front().ring();
  std::vector<int> map(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) map[i] = target->index_of(src.names()[i]);
  for (const auto& g : gens) out.push_back(g.rename(target, map));
  return out;
}

}  // namespace

Ideal eliminate_into(const Ideal& ideal, const std::vector<std::string>& drop, const RingPtr& target,
                     const Budget& budget) {
  const RingPtr& ring = ideal.ring();
  const VarMask dmask = ring->mask_of(drop);
  const Ideal blocked = groebner_basis(ideal, TermOrder::block(dmask), budget);
  std::vector<Poly> kept;
  for (const auto& g : blocked.basis(budget))
    if ((g.support() & dmask) == 0) kept.push_back(g);
  std::vector<int> map(ring->nvars(), -1);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (dmask >> i & 1) continue;
    map[i] = target->index_of(ring->names()[i]);
    if (map[i] < 0) throw DomainError("eliminate: target ring lacks variable " + ring->names()[i]);
  }
  std::vector<Poly> out;
  for (const auto& g : kept) out.push_back(g.rename(target, map));
  return Ideal(target, std::move(out));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const Budget& budget) {
  const RingPtr& ring = ideal.ring();
  const VarMask dmask = ring->mask_of(drop);
  std::vector<std::string> remaining;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!(dmask >> i & 1)) remaining.push_back(ring->names()[i]);
  return eliminate_into(ideal, drop, PolyRing::make(ring->prime(), remaining), budget);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Poly> g = a.generators();
  for (const auto& f : b.generators()) g.push_back(f.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
  const RingPtr ext = extend_ring(a.ring(), {"_s"}, TermOrder::block(1));
  const Poly s = Poly::variable(ext, std::size_t{0});
  const Poly one = Poly::constant(ext, RationalFunction(ext->prime(), 1));
  std::vector<Poly> gens;
  for (const auto& f : lift_into(a.generators(), ext)) gens.push_back(s * f);
  for (const auto& f : lift_into(b.generators(), ext)) gens.push_back((one - s) * f);
  return eliminate_into(Ideal(ext, std::move(gens)), {"_s"}, a.ring(), budget);
}

Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget) {
  const RingPtr ext = extend_ring(ideal.ring(), {"_w"}, TermOrder::block(1));
  const Poly w = Poly::variable(ext, std::size_t{0});
  const Poly one = Poly::constant(ext, RationalFunction(ext->prime(), 1));
  std::vector<Poly> gens = lift_into(ideal.generators(), ext);
  gens.push_back(one - w * lift_into({f.in_ring(ideal.ring())}, ext).front());
  return eliminate_into(Ideal(ext, std::move(gens)), {"_w"}, ideal.ring(), budget);
}

bool radical_member(const Poly& f, const Ideal& ideal, const Budget& budget) {
  if (ideal.contains(f, budget)) return true;
  const RingPtr ext = extend_ring(ideal.ring(), {"_w"}, TermOrder::grevlex());
  const Poly w = Poly::variable(ext, std::size_t{0});
  const Poly one = Poly::constant(ext, RationalFunction(ext->prime(), 1));
  std::vector<Poly> gens = lift_into(ideal.basis(budget), ext);
  gens.push_back(one - w * lift_into({f.in_ring(ideal.ring())}, ext).front());
  return Ideal(ext, std::move(gens)).is_unit(budget);
}

bool radical_contains(const Ideal& big, const Ideal& small, const Budget& budget) {
  for (const auto& g : small.basis(budget))
    if (!radical_member(g, big, budget)) return false;
  return true;
}

SubschemeRelation subscheme_relation(const Ideal& i, const Ideal& j, const Budget& budget) {
  const Ideal jj = j.ring() == i.ring() ? j : j.in_ring(i.ring());
  const bool i_ge_j = radical_contains(i, jj, budget);
  const bool j_ge_i = radical_contains(jj, i, budget);
  if (i_ge_j && j_ge_i) return SubschemeRelation::Equal;
  if (i_ge_j) return SubschemeRelation::IContainsJ;
  if (j_ge_i) return SubschemeRelation::JContainsI;
  return SubschemeRelation::Incomparable;
}

std::string to_string(SubschemeRelation r) {
  switch (r) {
    case SubschemeRelation::Equal:
      return "equal";
    case SubschemeRelation::IContainsJ:
      return "I_contains_J";
    case SubschemeRelation::JContainsI:
      return "J_contains_I";
    case SubschemeRelation::Incomparable:
      return "incomparable";
  }
  return "?";
}

}  // namespace jetexc
