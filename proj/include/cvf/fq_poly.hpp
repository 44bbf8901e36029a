#pragma once
// Dense univariate polynomials over F_q in the variable t.
//
// Coefficients are stored flat: coefficient i occupies coordinates
// [i*n, i*n + n). Over a prime field this is exactly the Z/p vector the
// kernels consume; over extensions the product runs n^2 coordinate
// convolutions and folds u^k for k >= n through the modulus.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvf/finite_field.hpp"

namespace cvf {

inline constexpr std::size_t kMaxPolyDegree = 65536;

class FqPoly {
 public:
  explicit FqPoly(FieldRef field);  // zero

  static FqPoly from_coeffs(FieldRef field, std::span<const FqElem> coeffs);
  static FqPoly constant(const FqElem& c);
  static FqPoly monomial(const FqElem& c, std::size_t k);
  // Flat coordinates, already reduced mod p.
  static FqPoly from_raw(FieldRef field, std::vector<std::uint32_t> flat);

  const FieldRef& field() const { return field_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(size()) - 1; }
  std::size_t size() const { return data_.size() / field_->n(); }
  bool is_zero() const { return data_.empty(); }
  bool is_one() const;
  bool is_constant() const { return size() <= 1; }
  FqElem coeff(std::size_t i) const;
  FqElem leading() const;
  // Index of the lowest nonzero coefficient; the polynomial must be nonzero.
  std::size_t low_order() const;
  std::span<const std::uint32_t> raw() const { return data_; }

  FqPoly operator-() const;
  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b);

  // First len coefficients of the product.
  FqPoly mul_trunc(const FqPoly& o, std::size_t len) const;
  FqPoly scaled(const FqElem& c) const;
  FqPoly shifted_up(std::size_t k) const;
  FqPoly shifted_down(std::size_t k) const;
  FqPoly truncated(std::size_t len) const;
  // Coefficientwise p-th power: sum c_i t^i -> sum c_i^p t^(ip).
  FqPoly frobenius() const;
  FqPoly derivative() const;
  // True when only exponents divisible by p occur.
  bool is_pth_power() const;
  FqPoly pth_root() const;

  std::pair<FqPoly, FqPoly> divrem(const FqPoly& d) const;
  FqPoly monic() const;
  static FqPoly gcd(FqPoly a, FqPoly b);
  FqElem eval(const FqElem& x) const;

  // Highest degree first, e.g. "t^2+2*t+1"; "0" for zero.
  std::string str() const;

 private:
  void trim();
  void check_same(const FqPoly& o) const;
  static void check_degree(std::size_t size);

  FieldRef field_;
  std::vector<std::uint32_t> data_;
};

// Coefficient literal as it appears in front of "*t^k": compound
// extension-field coefficients are parenthesized.
std::string coeff_literal(const FqElem& c);

}  // namespace cvf
