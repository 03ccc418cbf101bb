// Arithmetic in the prime field F_p.
#pragma once

#include <cstdint>
#include <ostream>

#include "jetexc/errors.hpp"
#include "jetexc/kernels.hpp"

namespace jetexc {

bool is_prime(std::uint64_t n);

/// Throws DomainError unless p is a prime below kernels::kMaxPrime.
void require_supported_prime(std::uint64_t p);

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a * b) % p; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Reduces a signed integer into [0, p).
std::uint32_t from_int(long long v, std::uint32_t p);
/// Binomial coefficient C(n, k) mod p via Lucas' theorem.
std::uint32_t binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace fp

/// An element of F_p carrying its modulus.
struct PrimeFieldElement {
  std::uint32_t residue = 0;
  std::uint32_t modulus = 0;

  PrimeFieldElement() = default;
  PrimeFieldElement(long long v, std::uint32_t p) : residue(fp::from_int(v, p)), modulus(p) {}

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    return {static_cast<long long>(fp::add(a.residue, b.residue, a.modulus)), a.modulus};
  }
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
    return {static_cast<long long>(fp::sub(a.residue, b.residue, a.modulus)), a.modulus};
  }
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    return {static_cast<long long>(fp::mul(a.residue, b.residue, a.modulus)), a.modulus};
  }
  PrimeFieldElement inverse() const {
    return {static_cast<long long>(fp::inv(residue, modulus)), modulus};
  }
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) {
    return os << a.residue;
  }
};

}  // namespace jetexc
