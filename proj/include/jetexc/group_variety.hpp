// Finite products of elliptic curves as the ambient group A, their K-points,
// subvarieties on the affine product patch, translation of subvarieties,
// and enumeration of subgroup elements.
#pragma once

#include <string>
#include <vector>

#include "jetexc/elliptic.hpp"
#include "jetexc/jets.hpp"

namespace jetexc {

class GroupVariety {
 public:
  /// Coordinates default to x1, y1, x2, y2, ...
  explicit GroupVariety(std::vector<EllipticCurve> factors, std::vector<std::string> names = {});

  std::uint32_t prime() const { return factors_.front().prime(); }
  std::size_t dimension() const { return factors_.size(); }
  const std::vector<EllipticCurve>& factors() const { return factors_; }
  const EllipticCurve& factor(std::size_t i) const { return factors_[i]; }
  const RingPtr& ring() const { return ring_; }
  std::size_t x_index(std::size_t i) const { return 2 * i; }
  std::size_t y_index(std::size_t i) const { return 2 * i + 1; }
  /// Weierstrass relations of all factors.
  const Ideal& ideal() const { return ideal_; }
  AffinePresentation presentation() const { return {ring_, ideal_}; }
  /// Presentation of factor i alone, in its own two coordinates.
  AffinePresentation factor_presentation(std::size_t i) const;

 private:
  std::vector<EllipticCurve> factors_;
  RingPtr ring_;
  Ideal ideal_;
};

struct GroupPoint {
  std::vector<KPoint> parts;  // one per factor

  bool is_affine() const;
  bool is_identity() const;
  /// Affine coordinates (x1, y1, x2, y2, ...); throws DomainError if some part is O.
  std::vector<RationalFunction> coordinates() const;
  /// "[(x1,y1),O]"
  std::string str() const;
  friend bool operator==(const GroupPoint& a, const GroupPoint& b);
};

GroupPoint identity(const GroupVariety& a);
/// Throws DomainError naming the factor when a part is off its curve.
void require_on(const GroupVariety& a, const GroupPoint& p, const std::string& what);
bool contains(const GroupVariety& a, const GroupPoint& p);

GroupPoint add(const GroupVariety& a, const GroupPoint& p, const GroupPoint& q);
GroupPoint negate(const GroupVariety& a, const GroupPoint& p);
GroupPoint scalar_mul(const GroupVariety& a, long long m, const GroupPoint& p);

struct Subgroup {
  std::vector<GroupPoint> generators;
};

struct Subvariety {
  AffinePresentation patch;
  bool reduced = false;
};

/// X given by extra generators on A's patch; the Weierstrass relations are added.
Subvariety subvariety(const GroupVariety& a, const std::vector<Poly>& gens, bool reduced = true);
Subvariety subvariety(const GroupVariety& a, const std::vector<std::string>& gens, bool reduced = true);
/// Ideal of a single affine point.
Ideal point_ideal(const GroupVariety& a, const GroupPoint& p);
bool contains(const Subvariety& x, const GroupPoint& p);

struct TranslationResult {
  Subvariety translate;
  /// Components of X whose translate leaves the affine patch (they are dropped).
  std::vector<std::string> left_patch;
};

/// X^{+Q} = {R : R - Q in X}: the saturated generic chord chart together
/// with the loci where some coordinate of R equals -Q_i.
TranslationResult translate(const GroupVariety& a, const Subvariety& x, const GroupPoint& q,
                            const Budget& budget = Budget::defaults());

struct Combination {
  std::vector<long long> coefficients;
  GroupPoint point;
};

/// All sum a_i g_i with 0 <= a_i < pm.
std::vector<Combination> coset_reps(const GroupVariety& a, const Subgroup& gamma, long long pm,
                                    const Budget& budget = Budget::defaults());
/// All sum a_i g_i with |a_i| <= radius, ordered lexicographically by coefficients.
std::vector<Combination> gamma_ball(const GroupVariety& a, const Subgroup& gamma, int radius,
                                    const Budget& budget = Budget::defaults());

/// Numerator of f(images) after clearing the denominators variable by variable.
Poly substitute_rational(const Poly& f, const std::vector<RationalExpr>& images, const RingPtr& target);

}  // namespace jetexc
