#include "cvf/linalg_fp.hpp"

#include <cassert>
#include <utility>

#include "cvf/modp.hpp"

namespace cvf {

std::optional<LinearSolution> solve_mod_p(MatrixFp a, std::span<const std::uint32_t> rhs,
                                          std::uint32_t p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  assert(rhs.size() == rows);
  std::vector<std::uint32_t> b(rhs.begin(), rhs.end());
  std::vector<std::size_t> pivot_col;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(pivot, k), a.at(r, k));
      std::swap(b[pivot], b[r]);
    }
    const std::uint32_t scale = modp::inv(a.at(r, c), p);
    for (std::size_t k = c; k < cols; ++k) a.at(r, k) = modp::mul(a.at(r, k), scale, p);
    b[r] = modp::mul(b[r], scale, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const std::uint32_t f = a.at(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        a.at(i, k) = modp::sub(a.at(i, k), modp::mul(f, a.at(r, k), p), p);
      }
      b[i] = modp::sub(b[i], modp::mul(f, b[r], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }

  LinearSolution sol;
  sol.particular.assign(cols, 0);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    sol.particular[pivot_col[i]] = b[i];
    is_pivot[pivot_col[i]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = modp::neg(a.at(i, free), p);
    }
    sol.kernel_basis.push_back(std::move(v));
  }
  return sol;
}

}  // namespace cvf
