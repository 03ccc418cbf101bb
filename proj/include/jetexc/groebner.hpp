// Buchberger's algorithm over K = F_p(t) with the sugar selection strategy
// and the Gebauer-Moeller form of both standard criteria.
#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jetexc/poly.hpp"

namespace jetexc {

/// Hard limits that turn runaway computations into ResourceLimitError.
struct Budget {
  std::size_t max_pairs = 200000;  // S-pairs reduced per basis computation
  int max_degree = 96;             // total degree of any pair lcm
  std::size_t max_basis = 4000;    // intermediate basis size
  std::size_t max_cosets = 4096;   // coset / ball enumeration size
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget defaults() { return {}; }
  /// Applies JETEXC_BUDGET="max_pairs=..,max_degree=..,max_basis=..,max_cosets=..,wall_time_s=.."
  Budget with_env_overrides() const;
  void check_deadline(const char* stage) const;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// Reduced, monic Groebner basis of the generators w.r.t. their ring's order.
/// The output is sorted by leading monomial, ascending.
std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& gens, const Budget& budget,
                                         GroebnerStats* stats = nullptr);

/// Full remainder of f modulo a Groebner basis (any basis in f's ring).
Poly reduce_full(const Poly& f, const std::vector<Poly>& basis);

struct Division {
  std::vector<Poly> quotients;  // one per divisor
  Poly remainder;
};
/// Multivariate division: f = sum quotients[k] * divisors[k] + remainder.
Division divide(const Poly& f, const std::vector<Poly>& divisors);

}  // namespace jetexc
