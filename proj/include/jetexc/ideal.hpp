// Finitely generated ideals over K with a lazily computed reduced basis,
// and the scheme-theoretic operations built from it.
#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jetexc/groebner.hpp"

namespace jetexc {

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced monic Groebner basis for the ring's order, computed at most once
  /// per value (copies share the cache). The budget of the first call applies.
  const std::vector<Poly>& basis(const Budget& budget = Budget::defaults()) const;
  bool has_cached_basis() const;

  bool is_unit(const Budget& budget = Budget::defaults()) const;
  bool is_zero_ideal(const Budget& budget = Budget::defaults()) const { return basis(budget).empty(); }
  bool contains(const Poly& f, const Budget& budget = Budget::defaults()) const;

  /// Same ideal viewed in a ring with the same variables and another order.
  Ideal in_ring(RingPtr ring) const;
  /// One canonical generator per line-item: the reduced basis, descending.
  std::vector<std::string> canonical() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
    bool ready = false;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal groebner_basis(const Ideal& ideal, TermOrder order, const Budget& budget = Budget::defaults());
Poly normal_form(const Poly& f, const Ideal& ideal, const Budget& budget = Budget::defaults());

/// I intersected with K[remaining variables], expressed in a grevlex ring on
/// the remaining variables (declaration order kept).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const Budget& budget = Budget::defaults());
/// As above, but the result is renamed into `target`, whose variables must
/// include every remaining variable name.
Ideal eliminate_into(const Ideal& ideal, const std::vector<std::string>& drop, const RingPtr& target,
                     const Budget& budget = Budget::defaults());

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const Budget& budget = Budget::defaults());
/// (I : f^infinity)
Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget = Budget::defaults());

/// f in sqrt(I), via 1 in I + (1 - w f).
bool radical_member(const Poly& f, const Ideal& ideal, const Budget& budget = Budget::defaults());

/// Relation between sqrt(I) and sqrt(J). IContainsJ means sqrt(I) >= J,
/// i.e. V(I) is a subset of V(J).
enum class SubschemeRelation { Equal, IContainsJ, JContainsI, Incomparable };
SubschemeRelation subscheme_relation(const Ideal& i, const Ideal& j,
                                     const Budget& budget = Budget::defaults());
/// sqrt(big) contains every generator of small: V(big) is inside V(small).
bool radical_contains(const Ideal& big, const Ideal& small, const Budget& budget = Budget::defaults());
std::string to_string(SubschemeRelation r);

/// Ring with fresh auxiliary variables prepended (names must be new).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_front, TermOrder order);

}  // namespace jetexc
