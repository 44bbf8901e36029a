#include <vector>

#include "cvf/kernels.hpp"
#include "cvf/random.hpp"
#include "doctest.h"

using namespace cvf;

namespace {

std::vector<std::uint32_t> random_vec(Rng& rng, std::size_t len, std::uint32_t p) {
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(p));
  return v;
}

// Textbook definition, one reduction per term.
std::vector<std::uint32_t> naive_convolution(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b, std::size_t len,
                                             std::uint32_t p) {
  std::vector<std::uint32_t> out(len, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i + j >= len) continue;
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return out;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 251, 65521, 2147483647u};

}  // namespace

TEST_CASE("scalar convolution matches the textbook definition") {
  Rng rng(11);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t la : {0u, 1u, 3u, 17u, 64u}) {
      for (std::size_t lb : {1u, 4u, 9u, 64u}) {
        auto a = random_vec(rng, la, p);
        auto b = random_vec(rng, lb, p);
        const std::size_t full = la + lb == 0 ? 0 : la + lb - 1;
        for (std::size_t len : {full, full / 2, std::size_t{1}}) {
          std::vector<std::uint32_t> out(len);
          kernels::scalar::convolve_mod(a, b, out, p);
          CHECK(out == naive_convolution(a, b, len, p));
        }
      }
    }
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!kernels::isa_available(kernels::Isa::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence skipped");
    return;
  }
  Rng rng(12);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 100u, 1000u}) {
      auto a = random_vec(rng, len, p);
      auto b = random_vec(rng, len, p);
      std::vector<std::uint32_t> s(len), v(len);
      kernels::scalar::add_mod(a, b, s, p);
      kernels::avx2::add_mod(a, b, v, p);
      CHECK(s == v);
      kernels::scalar::sub_mod(a, b, s, p);
      kernels::avx2::sub_mod(a, b, v, p);
      CHECK(s == v);
    }
    for (std::size_t la : {1u, 5u, 33u, 257u}) {
      for (std::size_t lb : {1u, 3u, 4u, 65u, 300u}) {
        auto a = random_vec(rng, la, p);
        auto b = random_vec(rng, lb, p);
        for (std::size_t len : {la + lb - 1, (la + lb) / 3 + 1}) {
          std::vector<std::uint32_t> s(len), v(len);
          kernels::scalar::convolve_mod(a, b, s, p);
          kernels::avx2::convolve_mod(a, b, v, p);
          CHECK(s == v);
        }
      }
    }
  }
}

TEST_CASE("lazy accumulation survives the worst case for large p") {
  // All coefficients p-1 maximize every partial sum.
  const std::uint32_t p = 2147483647u;
  std::vector<std::uint32_t> a(200, p - 1), b(200, p - 1);
  std::vector<std::uint32_t> out(399);
  kernels::convolve_mod(a, b, out, p);
  CHECK(out == naive_convolution(a, b, 399, p));
}

TEST_CASE("in-place add through the dispatcher") {
  std::vector<std::uint32_t> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<std::uint32_t> b{10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  kernels::add_mod(a, b, a, 11);
  CHECK(a == std::vector<std::uint32_t>(10, 0));
  MESSAGE("active kernel ISA: " << kernels::isa_name(kernels::active_isa()));
}
