#include <cctype>

#include "jetexc/poly.hpp"

namespace jetexc {

namespace {

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Poly parse() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("offset " + std::to_string(pos_) + " in \"" + s_ + "\"", msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RationalFunction one() const { return RationalFunction(ring_->prime(), 1); }

  Poly expr() {
    Poly r = term();
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  Poly term() {
    Poly r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero elements of K");
        }
        r = r.scaled(d.constant_term().inverse());
      } else {
        return r;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      if (e > 4096) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string digits = s_.substr(start, pos_ - start);
      long long v = 0;
      for (char d : digits) v = (v * 10 + (d - '0')) % ring_->prime();
      return Poly::constant(ring_, RationalFunction(ring_->prime(), v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '@'))
        ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      const int idx = ring_->index_of(name);
      if (idx >= 0) return Poly::variable(ring_, static_cast<std::size_t>(idx));
      if (name == "t") return Poly::constant(ring_, RationalFunction::t(ring_->prime()));
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) { return Parser(text, ring).parse(); }

RationalFunction parse_rational_function(const std::string& text, std::uint32_t p) {
  const Poly f = parse_poly(text, PolyRing::make(p, {}));
  return f.constant_term();
}

}  // namespace jetexc
