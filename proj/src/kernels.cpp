#include "jetexc/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace jetexc::kernels {

namespace scalar {

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  for (auto& v : dst) v = (c * v) % p;
}

}  // namespace scalar

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &scalar::axpy, &scalar::scale};
  return table;
}

namespace {

KernelTable select_table() {
  const char* forced = std::getenv("JETEXC_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
  if (avx2::available()) return KernelTable{"avx2", &avx2::axpy, &avx2::scale};
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable table = select_table();
  return table;
}

}  // namespace jetexc::kernels
