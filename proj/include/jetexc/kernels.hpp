// Vectorised inner loops over F_p coefficient arrays.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is picked once at first use from the CPU
// feature bits; JETEXC_KERNELS=scalar forces the reference path.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace jetexc::kernels {

/// Largest supported characteristic (exclusive). Keeps c*a + b below 2^30.
inline constexpr std::uint32_t kMaxPrime = 1u << 15;

/// dst[i] = (dst[i] + c * src[i]) mod p, for i < dst.size(). src.size() >= dst.size().
using AxpyFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                        std::uint32_t c, std::uint32_t p);
/// dst[i] = (c * dst[i]) mod p.
using ScaleFn = void (*)(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

struct KernelTable {
  std::string_view isa;
  AxpyFn axpy;
  ScaleFn scale;
};

namespace scalar {
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
/// True when this build contains the AVX2 kernels and the CPU runs them.
bool available();
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

const KernelTable& scalar_table();
const KernelTable& active();

inline void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
                 std::uint32_t p) {
  active().axpy(dst, src, c, p);
}
inline void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  active().scale(dst, c, p);
}

}  // namespace jetexc::kernels
