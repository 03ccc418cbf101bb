// Dense univariate polynomials over F_p in the function-field parameter t.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetexc/prime_field.hpp"

namespace jetexc {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::uint32_t p) : p_(p) {}
  /// Coefficients low degree first; reduced mod p and trimmed.
  UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static UPoly constant(std::uint32_t p, long long c);
  /// c * t^deg
  static UPoly monomial(std::uint32_t p, long long c, std::size_t deg);

  std::uint32_t prime() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const std::uint32_t> coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(std::uint32_t c) const;
  UPoly shifted(std::size_t k) const;  // * t^k

  /// Euclidean division; throws DomainError on zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  /// Exact division; throws DomainError when d does not divide *this.
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  std::uint32_t eval(std::uint32_t x) const;
  UPoly pow(std::uint64_t e) const;
  /// Hasse derivative D^(k): coefficient of eps^k in f(t + eps).
  UPoly hasse(std::size_t k) const;
  /// f(t + a) for a in F_p.
  UPoly translate(std::uint32_t a) const;
  bool is_irreducible() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  /// Degree, then coefficients from the top. Deterministic total order.
  friend bool operator<(const UPoly& a, const UPoly& b);

  /// Canonical text: "t^2+2*t+1", "0".
  std::string str(const std::string& var = "t") const;
  std::size_t hash() const;

 private:
  void trim();
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

UPoly gcd(UPoly a, UPoly b);
/// Returns (g, s, u) with s*a + u*b = g monic.
struct ExtGcd {
  UPoly g, s, u;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

}  // namespace jetexc
