#pragma once
// Coefficient-vector kernels over Z/p for p < 2^31.
//
// Every kernel has a scalar reference in cvf::kernels::scalar and, on x86-64
// builds, an AVX2 variant in cvf::kernels::avx2. The unqualified entry points
// dispatch once per process on the detected ISA; CVF_KERNEL=scalar in the
// environment pins the scalar path.

#include <cstdint>
#include <span>
#include <string_view>

namespace cvf::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

// ISA chosen for the unqualified entry points.
Isa active_isa() noexcept;
// True if the running CPU and the build both support `isa`.
bool isa_available(Isa isa) noexcept;

// out[i] = (a[i] + b[i]) mod p. Inputs reduced; spans of equal length.
void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
// out[i] = (a[i] - b[i]) mod p.
void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
// Truncated product: out[k] = sum_{i+j=k} a[i]*b[j] mod p for k < out.size().
// out must not alias a or b.
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p);
// y[i] = (y[i] + c*x[i]) mod p. Scalar only; the 62-bit reduction has no
// cheap AVX2 form.
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p);

namespace scalar {
void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p);
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_available(Isa::Avx2).
void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p);
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p);
}  // namespace avx2

}  // namespace cvf::kernels
