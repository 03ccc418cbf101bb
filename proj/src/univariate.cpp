#include "jetexc/univariate.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jetexc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_supported_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kernels::kMaxPrime)
    throw DomainError("characteristic " + std::to_string(p) + " exceeds the supported bound");
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

std::uint32_t from_int(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t r = 1;
  while (n || k) {
    const std::uint32_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // small binomial C(ni, ki) mod p
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < ki; ++i) {
      num = mul(num, ni - i, p);
      den = mul(den, i + 1, p);
    }
    r = mul(r, mul(num, inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace fp

UPoly::UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  trim();
}

UPoly UPoly::constant(std::uint32_t p, long long c) { return monomial(p, c, 0); }

UPoly UPoly::monomial(std::uint32_t p, long long c, std::size_t deg) {
  UPoly r(p);
  const std::uint32_t v = fp::from_int(c, p);
  if (v == 0) return r;
  r.c_.assign(deg + 1, 0);
  r.c_[deg] = v;
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {
std::uint32_t join_prime(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b != 0 && a != b) throw DomainError("mixing characteristics " + std::to_string(a) + " and " + std::to_string(b));
  return a;
}
}  // namespace

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = fp::neg(v, p_);
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  p_ = join_prime(p_, o.p_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = fp::add(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  p_ = join_prime(p_, o.p_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = fp::sub(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  const std::uint32_t p = join_prime(a.p_, b.p_);
  UPoly r(p);
  if (a.is_zero() || b.is_zero()) return r;
  const UPoly& lo = a.c_.size() < b.c_.size() ? a : b;
  const UPoly& hi = a.c_.size() < b.c_.size() ? b : a;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  std::span<std::uint32_t> out(r.c_);
  for (std::size_t i = 0; i < lo.c_.size(); ++i)
    kernels::axpy(out.subspan(i, hi.c_.size()), hi.c_, lo.c_[i], p);
  r.trim();
  return r;
}

UPoly UPoly::scaled(std::uint32_t c) const {
  UPoly r = *this;
  kernels::scale(r.c_, c % p_, p_);
  r.trim();
  return r;
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  UPoly r(p_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  const std::uint32_t p = join_prime(p_, d.p_);
  UPoly q(p), r = *this;
  r.p_ = p;
  if (r.degree() < d.degree()) return {q, r};
  const std::uint32_t linv = fp::inv(d.lead(), p);
  const std::size_t dn = d.c_.size();
  q.c_.assign(r.c_.size() - dn + 1, 0);
  std::span<std::uint32_t> rs(r.c_);
  for (std::size_t top_plus_one = r.c_.size(); top_plus_one >= dn; --top_plus_one) {
    const std::size_t i = top_plus_one - 1;
    const std::uint32_t top = r.c_[i];
    if (top == 0) continue;
    const std::uint32_t f = fp::mul(top, linv, p);
    q.c_[i - dn + 1] = f;
    kernels::axpy(rs.subspan(i - dn + 1, dn), d.c_, fp::neg(f, p), p);
  }
  r.trim();
  q.trim();
  return {q, r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(fp::inv(lead(), p_));
}

std::uint32_t UPoly::eval(std::uint32_t x) const {
  std::uint32_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = fp::add(fp::mul(r, x, p_), c_[i], p_);
  return r;
}

UPoly UPoly::pow(std::uint64_t e) const {
  UPoly r = constant(p_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::hasse(std::size_t k) const {
  UPoly r(p_);
  if (c_.size() <= k) return r;
  r.c_.assign(c_.size() - k, 0);
  for (std::size_t m = k; m < c_.size(); ++m)
    r.c_[m - k] = fp::mul(c_[m], fp::binomial(m, k, p_), p_);
  r.trim();
  return r;
}

UPoly UPoly::translate(std::uint32_t a) const {
  // Horner in (t + a).
  UPoly r(p_);
  const UPoly lin(p_, {a % p_, 1});
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(p_, c_[i]);
  return r;
}

bool UPoly::is_irreducible() const {
  if (degree() < 1) return false;
  if (degree() == 1) return true;
  // Rabin-style: gcd(f, t^(p^i) - t) = 1 for i <= deg/2.
  const UPoly f = monic();
  const UPoly t = monomial(p_, 1, 1);
  UPoly x = t;
  for (int i = 1; i <= degree() / 2; ++i) {
    // x <- x^p mod f
    UPoly y = constant(p_, 1), b = x;
    std::uint64_t e = p_;
    while (e) {
      if (e & 1) y = (y * b) % f;
      e >>= 1;
      if (e) b = (b * b) % f;
    }
    x = y;
    if (!gcd(f, x - t).is_one()) return false;
  }
  return true;
}

bool operator<(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i] << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::size_t UPoly::hash() const {
  std::size_t h = std::hash<std::uint32_t>{}(p_);
  for (auto v : c_) h = h * 1000003u ^ v;
  return h;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  const std::uint32_t p = a.prime() ? a.prime() : b.prime();
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(p, 1), s1(p), u0(p), u1 = UPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const std::uint32_t li = fp::inv(r0.lead(), p);
  return {r0.scaled(li), s0.scaled(li), u0.scaled(li)};
}

}  // namespace jetexc
