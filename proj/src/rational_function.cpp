#include "jetexc/rational_function.hpp"

namespace jetexc {

RationalFunction::RationalFunction(UPoly num) : num_(std::move(num)) {
  den_ = UPoly::constant(num_.prime(), 1);
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const std::uint32_t p = den.prime();
  if (num.is_zero()) {
    num_ = UPoly(p);
    den_ = UPoly::constant(p, 1);
    return;
  }
  if (!den.is_constant()) {
    UPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  const std::uint32_t li = fp::inv(den.lead(), p);
  num_ = li == 1 ? std::move(num) : num.scaled(li);
  den_ = li == 1 ? std::move(den) : den.scaled(li);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel before multiplying to keep the gcd small.
  UPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  UPoly n1 = g1.is_one() ? a.num_ : a.num_.exact_div(g1);
  UPoly d2 = g1.is_one() ? b.den_ : b.den_.exact_div(g1);
  UPoly n2 = g2.is_one() ? b.num_ : b.num_.exact_div(g2);
  UPoly d1 = g2.is_one() ? a.den_ : a.den_.exact_div(g2);
  RationalFunction r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  const std::uint32_t li = fp::inv(r.den_.lead(), r.den_.prime());
  if (li != 1) {
    r.num_ = r.num_.scaled(li);
    r.den_ = r.den_.scaled(li);
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(prime(), 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::vector<RationalFunction> RationalFunction::taylor(std::size_t n) const {
  const std::uint32_t p = prime();
  std::vector<RationalFunction> num(n + 1), den(n + 1), out(n + 1, RationalFunction(p));
  for (std::size_t j = 0; j <= n; ++j) {
    num[j] = RationalFunction(num_.hasse(j));
    den[j] = RationalFunction(den_.hasse(j));
  }
  // out = num / den as truncated series; den[0] != 0.
  const RationalFunction d0inv = den[0].inverse();
  for (std::size_t j = 0; j <= n; ++j) {
    RationalFunction acc = num[j];
    for (std::size_t i = 1; i <= j; ++i)
      if (!den[i].is_zero()) acc -= den[i] * out[j - i];
    out[j] = acc * d0inv;
  }
  return out;
}

bool operator<(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

bool RationalFunction::needs_parens() const {
  if (!den_.is_one()) return true;
  std::size_t nz = 0;
  for (auto c : num_.coeffs()) nz += c != 0;
  return nz > 1;
}

std::string RationalFunction::str() const {
  auto part = [](const UPoly& u) {
    std::size_t nz = 0;
    for (auto c : u.coeffs()) nz += c != 0;
    return nz > 1 ? "(" + u.str() + ")" : u.str();
  };
  if (den_.is_one() || num_.is_zero()) return num_.str();
  return part(num_) + "/" + part(den_);
}

}  // namespace jetexc
