// Truncated power series C[eps]/(eps^(n+1)) over a coefficient ring C.
#pragma once

#include <cstddef>
#include <vector>

#include "jetexc/errors.hpp"

namespace jetexc {

template <class C>
class Truncated {
 public:
  Truncated() = default;
  /// n+1 coefficients, all equal to `zero`.
  Truncated(std::size_t order, const C& zero) : c_(order + 1, zero) {}
  explicit Truncated(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C& operator[](std::size_t i) { return c_[i]; }
  const std::vector<C>& coeffs() const { return c_; }

  friend Truncated operator+(Truncated a, const Truncated& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend Truncated operator-(Truncated a, const Truncated& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  Truncated operator-() const {
    Truncated r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Truncated operator*(const Truncated& a, const Truncated& b) {
    const std::size_t n = a.c_.size();
    Truncated r = a;
    for (std::size_t k = 0; k < n; ++k) {
      C acc = a.c_[0] * b.c_[k];
      for (std::size_t i = 1; i <= k; ++i) acc = acc + a.c_[i] * b.c_[k - i];
      r.c_[k] = acc;
    }
    return r;
  }
  /// Requires an invertible constant term (C must provide inverse()).
  Truncated inverse() const {
    const std::size_t n = c_.size();
    Truncated r = *this;
    const C inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      C acc = c_[1] * r.c_[k - 1];
      for (std::size_t i = 2; i <= k; ++i) acc = acc + c_[i] * r.c_[k - i];
      r.c_[k] = -(acc * inv0);
    }
    return r;
  }
  friend Truncated operator/(const Truncated& a, const Truncated& b) { return a * b.inverse(); }
  friend bool operator==(const Truncated& a, const Truncated& b) { return a.c_ == b.c_; }

 private:
  std::vector<C> c_;
};

}  // namespace jetexc
