// Elements of K = F_p(t) as reduced fractions with monic denominator.
#pragma once

#include <string>
#include <vector>

#include "jetexc/univariate.hpp"

namespace jetexc {

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::uint32_t p) : num_(p), den_(UPoly::constant(p, 1)) {}
  RationalFunction(std::uint32_t p, long long c) : num_(UPoly::constant(p, c)), den_(UPoly::constant(p, 1)) {}
  explicit RationalFunction(UPoly num);
  /// Reduces the fraction; throws DomainError on a zero denominator.
  RationalFunction(UPoly num, UPoly den);

  static RationalFunction t(std::uint32_t p) { return RationalFunction(UPoly::monomial(p, 1, 1)); }

  std::uint32_t prime() const { return num_.prime() ? num_.prime() : den_.prime(); }
  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True for elements of F_p.
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one() || den_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction inverse() const;
  RationalFunction pow(long long e) const;

  /// Coefficients of f(t + eps) mod eps^(n+1): the Hasse-Taylor expansion.
  std::vector<RationalFunction> taylor(std::size_t n) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && (a.num_.is_zero() || a.den_ == b.den_);
  }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b);

  /// "num" when the denominator is 1, otherwise "(num)/(den)" with parentheses
  /// only around multi-term parts.
  std::string str() const;
  /// True when str() needs parentheses to act as a multiplicative factor.
  bool needs_parens() const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  UPoly num_, den_;
};

}  // namespace jetexc
