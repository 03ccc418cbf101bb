#include "jetexc/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jetexc {

Monomial Monomial::product(const Monomial& a, const Monomial& b, std::size_t n) {
  Monomial r;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 255) throw ResourceLimitError("monomial", "exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return r;
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b, std::size_t n) {
  Monomial r;
  for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, std::size_t n) {
  Monomial r;
  for (std::size_t i = 0; i < n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

namespace {

int grevlex_masked(const Monomial& a, const Monomial& b, std::size_t n, VarMask mask) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) {
      da += a.e[i];
      db += b.e[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;)
    if ((mask >> i & 1) && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b, std::size_t n) const {
  switch (kind) {
    case OrderKind::GRevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::Block: {
      const VarMask all = n >= 64 ? ~VarMask{0} : (VarMask{1} << n) - 1;
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (first >> i & 1) {
          da += a.e[i];
          db += b.e[i];
        }
      if (da != db) return da < db ? -1 : 1;
      return grevlex_masked(a, b, n, all);
    }
  }
  return 0;
}

std::string TermOrder::str() const {
  switch (kind) {
    case OrderKind::GRevLex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block: {
      std::ostringstream os;
      os << "block(" << std::hex << first << ")";
      return os.str();
    }
  }
  return "?";
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, TermOrder order)
    : p_(p), names_(std::move(names)), order_(order) {
  require_supported_prime(p_);
  if (names_.size() > kMaxVars)
    throw ResourceLimitError("ring", "more than " + std::to_string(kMaxVars) + " variables");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw DomainError("duplicate variable name " + names_[i]);
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

VarMask PolyRing::mask_of(const std::vector<std::string>& names) const {
  VarMask m = 0;
  for (const auto& n : names) {
    const int i = index_of(n);
    if (i < 0) throw DomainError("unknown variable " + n);
    m |= VarMask{1} << i;
  }
  return m;
}

Poly Poly::constant(RingPtr ring, const RationalFunction& c) {
  Poly r(std::move(ring));
  if (!c.is_zero()) r.terms_.push_back({Monomial{}, c});
  return r;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  Poly r(ring);
  Monomial m;
  m.e[index] = 1;
  m.deg = 1;
  r.terms_.push_back({m, RationalFunction(ring->prime(), 1)});
  return r;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  const int i = ring->index_of(name);
  if (i < 0) throw DomainError("unknown variable " + std::string(name));
  return variable(std::move(ring), static_cast<std::size_t>(i));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly r(std::move(ring));
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void Poly::normalize() {
  const std::size_t n = nvars();
  const TermOrder& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m, n) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[var]);
  return d;
}

VarMask Poly::support() const {
  VarMask m = 0;
  for (const auto& t : terms_) m |= t.m.support(nvars());
  return m;
}

RationalFunction Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
  return RationalFunction(prime());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw DomainError("polynomial arithmetic across different rings");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const std::size_t n = a.nvars();
  const TermOrder& ord = a.ring_->order();
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const int c = ord.compare(a.terms_[i].m, b.terms_[j].m, n);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      RationalFunction s = a.terms_[i].c + b.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  Poly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.nvars();
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({Monomial::product(x.m, y.m, n), x.c * y.c});
  return Poly::from_terms(a.ring_, std::move(terms));
}

Poly Poly::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return Poly(ring_);
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::mul_term(const RationalFunction& c, const Monomial& m) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r = *this;
  const std::size_t n = nvars();
  for (auto& t : r.terms_) {
    t.m = Monomial::product(t.m, m, n);
    if (!c.is_one()) t.c *= c;
  }
  return r;
}

Poly Poly::sub_mul(const RationalFunction& c, const Monomial& m, const Poly& g) const {
  const std::size_t n = nvars();
  const TermOrder& ord = ring_->order();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const RationalFunction nc = -c;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = Monomial::product(g.terms_[j].m, m, n);
    const int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].m, gm, n);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, nc * g.terms_[j].c});
      ++j;
    } else {
      RationalFunction s = terms_[i].c - c * g.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(ring_, RationalFunction(prime(), 1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return scaled(lead_coeff().inverse());
}

Poly Poly::in_ring(RingPtr ring) const {
  if (!ring->same_variables(*ring_)) throw DomainError("in_ring: variable sets differ");
  if (ring->order() == ring_->order()) {
    Poly r = *this;
    r.ring_ = std::move(ring);
    return r;
  }
  return from_terms(std::move(ring), terms_);
}

Poly Poly::rename(RingPtr target, const std::vector<int>& index_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (index_map[i] < 0) throw DomainError("rename: variable " + ring_->names()[i] + " has no image");
      m.e[index_map[i]] = static_cast<std::uint8_t>(m.e[index_map[i]] + t.m.e[i]);
    }
    m.deg = t.m.deg;
    out.push_back({m, t.c});
  }
  return from_terms(std::move(target), std::move(out));
}

Poly Poly::substitute(RingPtr target, const std::vector<Poly>& images) const {
  if (images.size() != nvars()) throw DomainError("substitute: arity mismatch");
  std::vector<std::vector<Poly>> powers(nvars());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(constant(target, RationalFunction(prime(), 1)));
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Poly r(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.c);
    for (std::size_t v = 0; v < nvars(); ++v)
      if (t.m.e[v]) term = term * power(v, t.m.e[v]);
    r += term;
  }
  return r;
}

RationalFunction Poly::evaluate(const std::vector<RationalFunction>& point) const {
  if (point.size() != nvars()) throw DomainError("evaluate: arity mismatch");
  std::vector<std::vector<RationalFunction>> powers(nvars());
  RationalFunction r(prime());
  for (const auto& t : terms_) {
    RationalFunction v = t.c;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!t.m.e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(RationalFunction(prime(), 1));
      while (pw.size() <= t.m.e[i]) pw.push_back(pw.back() * point[i]);
      v *= pw[t.m.e[i]];
    }
    r += v;
  }
  return r;
}

std::string monomial_str(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.m.deg == 0) {
      s += t.c.str();
      continue;
    }
    if (!t.c.is_one()) s += (t.c.needs_parens() ? "(" + t.c.str() + ")" : t.c.str()) + "*";
    s += monomial_str(t.m, *ring_);
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_ || !b.ring_) return a.terms_.empty() && b.terms_.empty();
  if (!a.ring_->same_variables(*b.ring_)) return false;
  const Poly bb = b.ring_->order() == a.ring_->order() ? b : b.in_ring(a.ring_);
  if (a.terms_.size() != bb.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == bb.terms_[i].m) || !(a.terms_[i].c == bb.terms_[i].c)) return false;
  return true;
}

}  // namespace jetexc
