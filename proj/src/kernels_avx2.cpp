#include "jetexc/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define JETEXC_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace jetexc::kernels::avx2 {

#if JETEXC_HAVE_AVX2

namespace {

// x < 2^30 and p < 2^15: the float quotient is off by at most one, fixed by
// one conditional add and one conditional subtract.
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256i vp, __m256 inv_p) {
  const __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), vp));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), vp));
  const __m256i ge = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vp, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(ge, vp));
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) void axpy(std::span<std::uint32_t> dst,
                                          std::span<const std::uint32_t> src, std::uint32_t c,
                                          std::uint32_t p) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(vc, _mm256_loadu_si256(s)));
    _mm256_storeu_si256(d, reduce(x, vp, inv_p));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

__attribute__((target("avx2"))) void scale(std::span<std::uint32_t> dst, std::uint32_t c,
                                           std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    _mm256_storeu_si256(d, reduce(_mm256_mullo_epi32(vc, _mm256_loadu_si256(d)), vp, inv_p));
  }
  for (; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

#else

bool available() { return false; }
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p) {
  scalar::axpy(dst, src, c, p);
}
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  scalar::scale(dst, c, p);
}

#endif

}  // namespace jetexc::kernels::avx2
