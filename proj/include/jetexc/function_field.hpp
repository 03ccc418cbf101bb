// Places of K = F_p(t), valuations, and v-adic contact orders of K-points
// against ideals.
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "jetexc/ideal.hpp"

namespace jetexc {

/// A nonnegative-or-negative integer or +infinity (valuation of 0).
struct Valuation {
  long long value = 0;
  bool infinite = false;

  static Valuation inf() { return {0, true}; }
  static Valuation of(long long v) { return {v, false}; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

class Place {
 public:
  /// Finite place for a monic irreducible pi.
  static Place finite(const UPoly& pi);
  static Place infinite(std::uint32_t p);
  /// "t", "t+1", "t^2+t+1", "inf".
  static Place parse(const std::string& text, std::uint32_t p);

  bool is_infinite() const { return infinite_; }
  const UPoly& uniformizer_poly() const { return pi_; }
  std::uint32_t prime() const { return p_; }
  int residue_degree() const { return infinite_ ? 1 : pi_.degree(); }
  /// The uniformizer as an element of K (pi, or 1/t at infinity).
  RationalFunction uniformizer() const;
  std::string str() const;
  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && a.pi_ == b.pi_;
  }

 private:
  Place(std::uint32_t p, UPoly pi, bool inf) : p_(p), pi_(std::move(pi)), infinite_(inf) {}
  std::uint32_t p_;
  UPoly pi_;
  bool infinite_;
};

long long valuation(const Place& v, const UPoly& f);  // f != 0
Valuation valuation(const Place& v, const RationalFunction& f);
/// Minimum coefficient valuation of a polynomial (infinite for 0).
Valuation valuation(const Place& v, const Poly& f);

struct PrimitiveGenerator {
  Poly poly;         // uniformizer^shift * original
  long long shift;   // exponent of the uniformizer applied
};

/// Scales each generator by a power of the uniformizer so its minimum
/// coefficient valuation is exactly 0. Throws DomainError on a zero input.
std::vector<PrimitiveGenerator> normalize_primitive(const Place& v, const std::vector<Poly>& gens);

struct ContactReport {
  Place place;
  Valuation order;                     // min of generator_orders
  Valuation distance_exponent;         // order * deg(pi): d_v = p^-(distance_exponent)
  std::vector<Valuation> generator_orders;

  /// -log d_v with the natural log, +inf when the point lies on the scheme.
  double local_height() const {
    if (order.infinite) return std::numeric_limits<double>::infinity();
    return static_cast<double>(distance_exponent.value) * std::log(static_cast<double>(place.prime()));
  }
};

/// Throws DomainError naming the first coordinate with negative valuation.
void require_integral(const Place& v, const std::vector<RationalFunction>& point,
                      const std::vector<std::string>& names);
bool is_integral(const Place& v, const std::vector<RationalFunction>& point);

/// Contact order of P with V(I) at v, over the v-primitive reduced basis of I.
ContactReport contact_order(const Place& v, const Ideal& ideal, const std::vector<RationalFunction>& point,
                            const Budget& budget = Budget::defaults());

/// Difference of local heights in exponent units; both-infinite counts as 0.
struct HeightGap {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  long long exponent = 0;
  std::string str() const;
};

struct DistanceComparison {
  ContactReport x, y;
  HeightGap gap;  // lambda_v(X,P) - lambda_v(Y,P)
};

DistanceComparison distance_compare(const Place& v, const Ideal& ix, const Ideal& iy,
                                    const std::vector<RationalFunction>& point,
                                    const Budget& budget = Budget::defaults());

/// For I contained in J: the constant c with ord_I(P) >= ord_J(P) - c at every
/// v-integral P, read off the quotients of dividing I's primitive basis by J's.
/// Throws DomainError if some generator of I is not in J.
long long containment_constant(const Place& v, const Ideal& i, const Ideal& j,
                               const Budget& budget = Budget::defaults());

}  // namespace jetexc
