#include "cvf/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

#if defined(CVF_HAVE_AVX2)
#include <immintrin.h>
#define CVF_AVX2_TARGET __attribute__((target("avx2")))
#endif

namespace cvf::kernels::avx2 {

#if defined(CVF_HAVE_AVX2)

// Both routines rely on lane sums staying below 2^32, which p < 2^31 ensures.
// min(s, s - p) picks s - p exactly when s >= p; the wrapped value is larger
// otherwise.
CVF_AVX2_TARGET void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::span<std::uint32_t> out, std::uint32_t p) {
  assert(a.size() == b.size() && a.size() == out.size());
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i s = _mm256_add_epi32(x, y);
    __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
  }
  scalar::add_mod(a.subspan(i), b.subspan(i), out.subspan(i), p);
}

CVF_AVX2_TARGET void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::span<std::uint32_t> out, std::uint32_t p) {
  assert(a.size() == b.size() && a.size() == out.size());
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i d = _mm256_sub_epi32(x, y);
    __m256i r = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), r);
  }
  scalar::sub_mod(a.subspan(i), b.subspan(i), out.subspan(i), p);
}

// Lazy 64-bit accumulation: unreduced 32x32 products are summed per output
// lane and folded mod p every rows_per_flush rows of a.
CVF_AVX2_TARGET void convolve_mod(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b,
                                  std::span<std::uint32_t> out, std::uint32_t p) {
  const std::size_t len = out.size();
  std::vector<std::uint64_t> acc(len, 0);
  const std::uint64_t pm1 = p - 1;
  const std::uint64_t headroom = std::numeric_limits<std::uint64_t>::max() - pm1;
  const std::uint64_t rows_per_flush = pm1 == 0 ? headroom : headroom / (pm1 * pm1);

  std::uint64_t rows = 0;
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    if (rows == rows_per_flush) {
      for (auto& v : acc) v %= p;
      rows = 0;
    }
    ++rows;
    const std::uint64_t ai = a[i];
    const __m256i va = _mm256_set1_epi64x(static_cast<long long>(ai));
    const std::size_t jmax = std::min(b.size(), len - i);
    std::uint64_t* dst = acc.data() + i;
    std::size_t j = 0;
    for (; j + 4 <= jmax; j += 4) {
      __m128i b4 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.data() + j));
      __m256i bw = _mm256_cvtepu32_epi64(b4);
      __m256i prod = _mm256_mul_epu32(va, bw);
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_add_epi64(cur, prod));
    }
    for (; j < jmax; ++j) dst[j] += ai * b[j];
  }
  for (std::size_t k = 0; k < len; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
}

#else

void add_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  scalar::add_mod(a, b, out, p);
}
void sub_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out, std::uint32_t p) {
  scalar::sub_mod(a, b, out, p);
}
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p) {
  scalar::convolve_mod(a, b, out, p);
}

#endif

}  // namespace cvf::kernels::avx2
