// Sparse multivariate polynomials over K = F_p(t).
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jetexc/rational_function.hpp"

namespace jetexc {

inline constexpr std::size_t kMaxVars = 48;
using VarMask = std::uint64_t;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  bool divides(const Monomial& o, std::size_t n) const {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  /// Throws ResourceLimitError if an exponent leaves the uint8 range.
  static Monomial product(const Monomial& a, const Monomial& b, std::size_t n);
  static Monomial quotient(const Monomial& a, const Monomial& b, std::size_t n);
  static Monomial lcm(const Monomial& a, const Monomial& b, std::size_t n);
  static bool coprime(const Monomial& a, const Monomial& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
  VarMask support(std::size_t n) const {
    VarMask m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) m |= VarMask{1} << i;
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

enum class OrderKind { GRevLex, Lex, Block };

/// Monomial order. Block orders compare the `first` variables by grevlex,
/// then the remaining ones by grevlex; they eliminate the first block.
struct TermOrder {
  OrderKind kind = OrderKind::GRevLex;
  VarMask first = 0;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {OrderKind::Lex, 0}; }
  static TermOrder block(VarMask eliminated) { return {OrderKind::Block, eliminated}; }

  /// <0, 0, >0 like strcmp.
  int compare(const Monomial& a, const Monomial& b, std::size_t n) const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
  std::string str() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Variables (in declaration order), characteristic and active term order.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> names, TermOrder order = TermOrder::grevlex());
  static RingPtr make(std::uint32_t p, std::vector<std::string> names,
                      TermOrder order = TermOrder::grevlex()) {
    return std::make_shared<const PolyRing>(p, std::move(names), order);
  }

  std::uint32_t prime() const { return p_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }
  /// -1 if absent.
  int index_of(std::string_view name) const;
  VarMask mask_of(const std::vector<std::string>& names) const;
  RingPtr with_order(TermOrder order) const { return make(p_, names_, order); }

  bool same_variables(const PolyRing& o) const { return p_ == o.p_ && names_ == o.names_; }
  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.same_variables(b) && a.order_ == b.order_;
  }

 private:
  std::uint32_t p_;
  std::vector<std::string> names_;
  TermOrder order_;
};

struct Term {
  Monomial m;
  RationalFunction c;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, const RationalFunction& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);
  /// Terms may be unsorted and contain duplicates or zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms already strictly descending with nonzero coefficients.
  static Poly from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Poly r(std::move(ring));
    r.terms_ = std::move(terms);
    return r;
  }
  /// Drops the leading term.
  Poly tail() const {
    return from_sorted_terms(ring_, std::vector<Term>(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end()));
  }

  const RingPtr& ring() const { return ring_; }
  std::uint32_t prime() const { return ring_->prime(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const RationalFunction& lead_coeff() const { return terms_.front().c; }
  int total_degree() const;
  int degree_in(std::size_t var) const;
  VarMask support() const;
  /// Constant coefficient (zero if absent).
  RationalFunction constant_term() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const RationalFunction& c) const;
  Poly mul_term(const RationalFunction& c, const Monomial& m) const;
  /// *this - c * m * g, merged in one pass.
  Poly sub_mul(const RationalFunction& c, const Monomial& m, const Poly& g) const;
  Poly pow(unsigned e) const;
  Poly monic() const;

  /// Re-sorts into `ring`, which must have the same variables.
  Poly in_ring(RingPtr ring) const;
  /// Moves into `target` with variable i of this ring sent to variable index_map[i].
  Poly rename(RingPtr target, const std::vector<int>& index_map) const;
  /// Substitutes images[i] (polynomials in `target`) for variable i.
  Poly substitute(RingPtr target, const std::vector<Poly>& images) const;
  RationalFunction evaluate(const std::vector<RationalFunction>& point) const;
  /// Applies a map to every coefficient.
  template <class F>
  Poly map_coefficients(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.m, f(t.c)});
    return from_terms(ring_, std::move(out));
  }

  /// Canonical text: terms in descending order joined by " + ".
  std::string str() const;
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_str(const Monomial& m, const PolyRing& ring);

/// Parses an expression over K in the ring's variables and the parameter t.
/// Accepts + - * / ^ and parentheses; division only by elements of K.
Poly parse_poly(const std::string& text, const RingPtr& ring);
RationalFunction parse_rational_function(const std::string& text, std::uint32_t p);

}  // namespace jetexc
