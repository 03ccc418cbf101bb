// Images of jet schemes under multiplication by p^k, critical and exceptional
// schemes of a subvariety, and the iterative construction of the linear locus Y.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetexc/group_variety.hpp"

namespace jetexc {

/// Ideal of [p^k]_* J^k(A) in the order-k jet ring of A's patch.
struct MultiplicationImage {
  std::size_t k = 0;
  RingPtr ring;
  Ideal ideal;
};

MultiplicationImage multiplication_image(const GroupVariety& a, std::size_t k,
                                         const Budget& budget = Budget::defaults());
/// One factor only, in that factor's jet ring (names x@j, y@j of the factor presentation).
MultiplicationImage factor_multiplication_image(const GroupVariety& a, std::size_t factor, std::size_t k,
                                                const Budget& budget = Budget::defaults());

/// Relations among the x-jets of [p^k]_* J^k(E_i), in the jet ring of the
/// factor's x variable; empty when x o [p] is not a function of x alone.
std::optional<Ideal> factor_x_image(const GroupVariety& a, std::size_t factor, std::size_t k,
                                    const Budget& budget = Budget::defaults());

struct CriticalScheme {
  std::size_t k = 0;
  RingPtr ring;  // jet ring of order k over A's patch
  Ideal ideal;
};

struct ExceptionalScheme {
  std::size_t k = 0;
  Ideal ideal;  // on A's patch
  std::optional<std::size_t> stabilized_at;
  /// Loci dropped because they leave the affine patch (shifted schemes only).
  std::vector<std::string> left_patch;
};

CriticalScheme critical_scheme(const GroupVariety& a, const Subvariety& x, std::size_t k,
                               const Budget& budget = Budget::defaults());
ExceptionalScheme exceptional_scheme(const GroupVariety& a, const Subvariety& x, std::size_t k,
                                     const Budget& budget = Budget::defaults());
/// Exc^k(A, X^{+Q})^{-Q}, computed on X itself by pulling the image back along
/// the jets of R -> R + Q. Points of X over -Q_i are reported in left_patch.
ExceptionalScheme shifted_exceptional(const GroupVariety& a, const Subvariety& x, const GroupPoint& q, std::size_t k,
                                      const Budget& budget = Budget::defaults());

struct ExceptionalChain {
  std::vector<ExceptionalScheme> chain;  // Exc^0 .. Exc^last
  std::optional<std::size_t> stabilized_at;
  /// V(Exc^{k+1}) inside V(Exc^k) for every consecutive pair.
  bool descending = true;
};

/// Exc^1, Exc^2, ... until two consecutive terms agree or k_max is reached.
ExceptionalChain stable_exceptional(const GroupVariety& a, const Subvariety& x, std::size_t k_max,
                                    const Budget& budget = Budget::defaults());

struct IterationCertificate {
  std::size_t iteration = 0;
  bool strict = false;  // V(Y_{k+1}) is a proper subset of V(Y_k)
  bool stable = false;  // V(Y_{k+1}) = V(Y_k)
  std::size_t pieces = 0;
  std::vector<std::string> notes;
};

struct LinearLocusResult {
  Subvariety y;
  /// Constituents of Y (their union is Y); kept to iterate piece by piece.
  std::vector<Ideal> pieces;
  std::vector<Ideal> iterations;  // Y_0 = X, Y_1, ...
  std::vector<IterationCertificate> certificate;
  std::size_t m_used = 0;
  bool stabilized = false;
  /// Some piece could not be split into irreducible components; Y is then a
  /// sound superset of the locus the construction aims at.
  bool decomposition_incomplete = false;
  /// Every piece of Y is zero-dimensional or Y equals X after one step.
  bool linearity_certified = false;
};

struct LocusOptions {
  std::size_t m = 1;
  /// When set, m runs from `m` to `m_max` until the first step is strict.
  std::optional<std::size_t> m_max;
  std::size_t max_iterations = 8;
};

LinearLocusResult build_linear_locus(const GroupVariety& a, const Subvariety& x, const Subgroup& gamma,
                                     const LocusOptions& options, const Budget& budget = Budget::defaults());

/// Zero-dimensional: every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const Ideal& ideal, const Budget& budget = Budget::defaults());

/// The i-th K-rational point check used by the corollary: P in V(ideal).
bool vanishes_at(const Ideal& ideal, const std::vector<RationalFunction>& point);

}  // namespace jetexc
