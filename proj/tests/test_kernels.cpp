#include <doctest.h>

#include <random>
#include <vector>

#include "jetexc/kernels.hpp"
#include "jetexc/prime_field.hpp"

using namespace jetexc;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2::available()) {
    MESSAGE("AVX2 not available; only the scalar path is exercised");
    return;
  }
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 4099u, 32749u}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 129u}) {
      auto dst = random_residues(rng, n, p);
      auto src = random_residues(rng, n, p);
      for (std::uint32_t c : {0u, 1u, p - 1, p / 2}) {
        auto a = dst, b = dst;
        kernels::scalar::axpy(a, src, c, p);
        kernels::avx2::axpy(b, src, c, p);
        CHECK(a == b);
        kernels::scalar::scale(a, c, p);
        kernels::avx2::scale(b, c, p);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("scalar axpy matches the definition") {
  std::vector<std::uint32_t> dst{1, 2, 3, 4}, src{4, 3, 2, 1};
  kernels::scalar::axpy(dst, src, 2, 5);
  CHECK(dst == std::vector<std::uint32_t>{4, 3, 2, 1});
}

TEST_CASE("active table is one of the known variants") {
  const auto isa = kernels::active().isa;
  CHECK((isa == "scalar" || isa == "avx2"));
}

TEST_CASE("prime field helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(4));
  CHECK_THROWS_AS(require_supported_prime(4), DomainError);
  CHECK(fp::inv(3, 7) == 5);
  CHECK(fp::binomial(3, 1, 3) == 0);
  CHECK(fp::binomial(3, 1, 5) == 3);
  CHECK(fp::binomial(4, 2, 2) == 0);
  PrimeFieldElement a(3, 5), b(4, 5);
  CHECK((a * b).residue == 2);
  CHECK((a * a.inverse()).residue == 1);
  CHECK((a - b).residue == 4);
}
