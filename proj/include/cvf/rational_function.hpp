#pragma once
// Exact elements of F_q(t) with the t-adic valuation.

#include <cstdint>
#include <string>

#include "cvf/fq_poly.hpp"
#include "cvf/laurent_series.hpp"
#include "cvf/value.hpp"

namespace cvf {

// Invariant: den monic and nonzero, gcd(num, den) = 1, zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(FieldRef field);  // zero
  RatFunc(FqPoly num, FqPoly den);

  static RatFunc from_poly(FqPoly num);
  static RatFunc constant(const FqElem& c);
  static RatFunc from_int(FieldRef field, std::int64_t v);
  static RatFunc t(FieldRef field);
  // c * t^k for any integer k.
  static RatFunc monomial(const FqElem& c, std::int64_t k);
  // The Laurent polynomial made of the known coefficients of s.
  static RatFunc from_truncation(const LaurentSeries& s);

  const FieldRef& field() const { return num_.field(); }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc scaled(const FqElem& c) const;
  RatFunc pow(std::int64_t k) const;
  RatFunc frobenius() const;

  // ord_t(num) - ord_t(den). Throws ZeroHasNoValuation for zero.
  std::int64_t tadic_order() const;
  Value tadic_val() const { return Value::integer(tadic_order()); }
  // Coefficient of t^v in the expansion at t = 0, v = tadic_order().
  FqElem tadic_leading() const;
  // Laurent expansion at t = 0 to O(t^prec).
  LaurentSeries expand(std::int64_t prec) const;

  // "t^2+1" or "(t^2+1)/(t^3)".
  std::string str() const;

 private:
  struct Normalized {};
  RatFunc(FqPoly num, FqPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  FqPoly num_;
  FqPoly den_;
};

}  // namespace cvf
