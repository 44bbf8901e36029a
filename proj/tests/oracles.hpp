#pragma once
// Independent reference computations used by the unit and acceptance tests.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cvf/finite_field.hpp"
#include "cvf/fq_poly.hpp"
#include "cvf/laurent_series.hpp"
#include "cvf/rational_function.hpp"

namespace cvf::oracle {

// All polynomials over the prime field F_p of degree <= max_deg (zero
// included), or only the monic ones.
inline std::vector<FqPoly> enumerate_polys(const FieldRef& f, unsigned max_deg, bool monic) {
  const std::uint32_t p = f->p();
  std::vector<FqPoly> out;
  if (!monic) out.emplace_back(f);
  for (unsigned d = 0; d <= max_deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < (monic ? d : d + 1); ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FqElem> c;
      std::uint64_t k = idx;
      for (unsigned i = 0; i <= d; ++i) {
        if (monic && i == d) {
          c.push_back(FqElem::from_int(f, 1));
        } else {
          c.push_back(FqElem::from_int(f, static_cast<std::int64_t>(k % p)));
          k /= p;
        }
      }
      if (!monic && c.back().is_zero()) continue;
      out.push_back(FqPoly::from_coeffs(f, c));
    }
  }
  return out;
}

// Image of x -> x^p - x over all x = A/B with deg A, deg B <= max_deg,
// computed by naive exponentiation. Maps the printed b to one preimage.
class ArtinSchreierImage {
 public:
  ArtinSchreierImage(const FieldRef& f, unsigned max_deg) {
    const auto nums = enumerate_polys(f, max_deg, false);
    const auto dens = enumerate_polys(f, max_deg, true);
    for (const auto& a : nums)
      for (const auto& b : dens) {
        const RatFunc x(a, b);
        RatFunc xp = x;
        for (std::uint32_t i = 1; i < f->p(); ++i) xp = xp * x;
        image_.emplace((xp - x).str(), x);
      }
  }

  const RatFunc* preimage(const RatFunc& b) const {
    auto it = image_.find(b.str());
    return it == image_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, RatFunc> image_;
};

// -sum_{i>=0} b^(p^i) to precision prec, with powers by repeated multiplication.
inline LaurentSeries closed_form_root(const LaurentSeries& b) {
  const std::uint32_t p = b.field()->p();
  LaurentSeries sum = LaurentSeries::zero(b.field(), b.prec());
  LaurentSeries term = b;
  while (!term.is_zero_to_precision()) {
    sum = sum - term;
    LaurentSeries next = term;
    for (std::uint32_t i = 1; i < p; ++i) next = next * term;
    term = next.truncated(b.prec());
  }
  return sum;
}

}  // namespace cvf::oracle
