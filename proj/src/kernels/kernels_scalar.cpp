#include "cvf/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace cvf::kernels::scalar {

void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= p ? s - p : s;
  }
}

void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (p - b[i]);
  }
}

void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p) {
  const std::size_t len = out.size();
  // Each reduced product is < 2^31, so 2^33 of them fit in 64 bits.
  std::vector<std::uint64_t> acc(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    const std::size_t jmax = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      acc[i + j] += (ai * b[j]) % p;
    }
  }
  for (std::size_t k = 0; k < len; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p) {
  assert(y.size() == x.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
  }
}

}  // namespace cvf::kernels::scalar
