#include <cstdlib>
#include <cstring>

#include "cvf/kernels.hpp"

namespace cvf::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(CVF_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* forced = std::getenv("CVF_KERNEL"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

bool isa_available(Isa isa) noexcept {
  return isa == Isa::Scalar || cpu_has_avx2();
}

void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) return avx2::add_mod(a, b, out, p);
  scalar::add_mod(a, b, out, p);
}

void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) return avx2::sub_mod(a, b, out, p);
  scalar::sub_mod(a, b, out, p);
}

void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p) {
  if (active_isa() == Isa::Avx2) return avx2::convolve_mod(a, b, out, p);
  scalar::convolve_mod(a, b, out, p);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p) {
  scalar::axpy_mod(y, x, c, p);
}

}  // namespace cvf::kernels
