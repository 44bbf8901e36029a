#include "cvf/random.hpp"

#include <vector>

namespace cvf {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

FqElem random_elem(const FieldRef& field, Rng& rng) {
  Coords c{};
  for (unsigned i = 0; i < field->n(); ++i) c[i] = static_cast<std::uint32_t>(rng.below(field->p()));
  return FqElem::from_coords(field, std::span<const std::uint32_t>(c.data(), field->n()));
}

FqElem random_nonzero_elem(const FieldRef& field, Rng& rng) {
  for (;;) {
    FqElem x = random_elem(field, rng);
    if (!x.is_zero()) return x;
  }
}

LaurentSeries random_series(const FieldRef& field, Rng& rng, std::int64_t val, std::int64_t prec) {
  const auto len = static_cast<std::size_t>(prec - val);
  std::vector<FqElem> coeffs;
  coeffs.reserve(len);
  coeffs.push_back(random_nonzero_elem(field, rng));
  for (std::size_t i = 1; i < len; ++i) coeffs.push_back(random_elem(field, rng));
  return LaurentSeries::from_block(val, FqPoly::from_coeffs(field, coeffs), prec);
}

FqPoly random_poly(const FieldRef& field, Rng& rng, std::size_t max_deg) {
  std::vector<FqElem> coeffs;
  for (std::size_t i = 0; i <= max_deg; ++i) coeffs.push_back(random_elem(field, rng));
  return FqPoly::from_coeffs(field, coeffs);
}

RatFunc random_ratfunc(const FieldRef& field, Rng& rng, std::size_t max_num, std::size_t max_den) {
  FqPoly num = random_poly(field, rng, max_num);
  const auto den_deg = static_cast<std::size_t>(rng.below(max_den + 1));
  std::vector<FqElem> dc;
  for (std::size_t i = 0; i < den_deg; ++i) dc.push_back(random_elem(field, rng));
  dc.push_back(FqElem::from_int(field, 1));
  return RatFunc(std::move(num), FqPoly::from_coeffs(field, dc));
}

RatFunc random_ratfunc_with_val(const FieldRef& field, Rng& rng, std::int64_t val, std::size_t max_num,
                                std::size_t max_den) {
  // Unit part: nonzero constant terms top and bottom.
  FqPoly num = random_poly(field, rng, max_num);
  num = num - FqPoly::constant(num.coeff(0)) + FqPoly::constant(random_nonzero_elem(field, rng));
  const auto den_deg = static_cast<std::size_t>(rng.below(max_den + 1));
  std::vector<FqElem> dc;
  dc.push_back(random_nonzero_elem(field, rng));
  for (std::size_t i = 1; i < den_deg; ++i) dc.push_back(random_elem(field, rng));
  if (den_deg > 0) dc.push_back(FqElem::from_int(field, 1));
  RatFunc unit(std::move(num), FqPoly::from_coeffs(field, dc));
  return unit * RatFunc::monomial(FqElem::from_int(field, 1), val);
}

}  // namespace cvf
