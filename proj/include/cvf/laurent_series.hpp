#pragma once
// Truncated elements of F_q((t)) with per-element precision tracking.
//
// A series is known modulo O(t^prec). A nonzero series stores the block of
// coefficients from its valuation up to prec; a series whose known
// coefficients all vanish is ZeroToPrecision(prec) and reports its valuation
// as BelowPrecision(prec) rather than as a number.

#include <cstdint>
#include <string>

#include "cvf/finite_field.hpp"
#include "cvf/fq_poly.hpp"
#include "cvf/value.hpp"

namespace cvf {

inline constexpr std::int64_t kDefaultPrecision = 64;

class LaurentSeries {
 public:
  static LaurentSeries zero(FieldRef field, std::int64_t prec);
  static LaurentSeries constant(const FqElem& c, std::int64_t prec);
  static LaurentSeries monomial(const FqElem& c, std::int64_t exponent, std::int64_t prec);
  // block holds the coefficients of t^start, t^(start+1), ...
  static LaurentSeries from_block(std::int64_t start, const FqPoly& block, std::int64_t prec);

  const FieldRef& field() const { return block_.field(); }
  std::int64_t prec() const { return prec_; }
  bool is_zero_to_precision() const { return block_.is_zero(); }
  SeriesValuation val() const;
  // The valuation when nonzero, otherwise prec.
  std::int64_t order() const { return val_; }
  // Coefficient of t^e; e must be below prec.
  FqElem coeff(std::int64_t e) const;
  // Coefficient at the valuation; the series must be nonzero.
  FqElem leading() const;
  const FqPoly& block() const { return block_; }

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);
  // Structural: same precision, valuation and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  // For valuation m the result is known to prec - 2m.
  LaurentSeries inverse() const;
  // s^p, coefficientwise; known to p * prec.
  LaurentSeries frobenius() const;
  LaurentSeries scaled(const FqElem& c) const;
  LaurentSeries truncated(std::int64_t prec) const;
  LaurentSeries pow(std::uint64_t e) const;
  // Coefficient of t^0; requires valuation >= 0.
  FqElem residue() const;

  // "t^-2 + 2*t^0 + t^3 + O(t^8)"; zero prints as "0 + O(t^N)".
  std::string str() const;

 private:
  LaurentSeries(std::int64_t val, std::int64_t prec, FqPoly block)
      : val_(val), prec_(prec), block_(std::move(block)) {}

  std::int64_t val_;
  std::int64_t prec_;
  FqPoly block_;
};

}  // namespace cvf
