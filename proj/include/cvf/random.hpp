#pragma once
// Reproducible sampling of field, series and rational-function elements.
//
// The engine is mt19937_64 (fully specified by the standard) and bounded
// draws use our own rejection step, so a seed yields the same stream on every
// platform.

#include <cstdint>
#include <random>

#include "cvf/finite_field.hpp"
#include "cvf/laurent_series.hpp"
#include "cvf/rational_function.hpp"

namespace cvf {

// splitmix64 mix of (master, index); used for per-item streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

FqElem random_elem(const FieldRef& field, Rng& rng);
FqElem random_nonzero_elem(const FieldRef& field, Rng& rng);

// Series with valuation exactly `val`, random coefficients after the leading
// one, known to O(t^prec). Requires val < prec.
LaurentSeries random_series(const FieldRef& field, Rng& rng, std::int64_t val, std::int64_t prec);

// Polynomial of degree <= max_deg (may be zero).
FqPoly random_poly(const FieldRef& field, Rng& rng, std::size_t max_deg);

// num of degree <= max_num, monic den of degree <= max_den.
RatFunc random_ratfunc(const FieldRef& field, Rng& rng, std::size_t max_num, std::size_t max_den);

// Random rational function with t-adic valuation exactly `val`: t^val times a
// unit with numerator and denominator degrees bounded as above.
RatFunc random_ratfunc_with_val(const FieldRef& field, Rng& rng, std::int64_t val, std::size_t max_num,
                                std::size_t max_den);

}  // namespace cvf
