#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cvf {

// Dense row-major matrix over Z/p.
class MatrixFp {
 public:
  MatrixFp(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct LinearSolution {
  std::vector<std::uint32_t> particular;
  std::vector<std::vector<std::uint32_t>> kernel_basis;
};

// Solves A x = rhs over Z/p by Gauss-Jordan elimination. Returns nullopt when
// the system is inconsistent; otherwise a particular solution (free variables
// set to zero) and a basis of the kernel of A.
std::optional<LinearSolution> solve_mod_p(MatrixFp a, std::span<const std::uint32_t> rhs,
                                          std::uint32_t p);

}  // namespace cvf
