#include "cvf/value.hpp"

#include <numeric>

#include "cvf/error.hpp"

namespace cvf {

Value Value::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "value with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Value(num, den);
}

Value Value::infinity() {
  Value v;
  v.infinite_ = true;
  return v;
}

Value operator+(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return Value::infinity();
  if (a.den_ == b.den_) return Value::fraction(a.num_ + b.num_, a.den_);
  return Value::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Value operator*(std::int64_t k, const Value& a) {
  if (a.infinite_) {
    if (k <= 0) throw Error(Errc::InternalConsistency, "non-positive multiple of infinity");
    return a;
  }
  return Value::fraction(k * a.num_, a.den_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Value::str() const {
  if (infinite_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool at_least(const SeriesValuation& v, std::int64_t k) {
  if (const auto* b = std::get_if<BelowPrecision>(&v)) return b->bound >= k;
  return std::get<Value>(v) >= Value::integer(k);
}

std::string to_string(const SeriesValuation& v) {
  if (const auto* b = std::get_if<BelowPrecision>(&v)) {
    return "BelowPrecision(" + std::to_string(b->bound) + ")";
  }
  return std::get<Value>(v).str();
}

}  // namespace cvf
