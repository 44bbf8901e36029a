#pragma once
// Elements of the value group (1/p)Z extended by infinity.

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace cvf {

class Value {
 public:
  Value() = default;  // 0
  static Value integer(std::int64_t v) { return Value(v, 1); }
  // num/den reduced to lowest terms; den > 0.
  static Value fraction(std::int64_t num, std::int64_t den);
  static Value infinity();

  bool is_infinite() const { return infinite_; }
  bool is_integer() const { return !infinite_ && den_ == 1; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator*(std::int64_t k, const Value& a);
  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  // "3", "-1/2", "inf".
  std::string str() const;

 private:
  Value(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

// A truncated series that is zero to its known precision N has valuation
// >= N, but no definite value.
struct BelowPrecision {
  std::int64_t bound;
  friend bool operator==(const BelowPrecision&, const BelowPrecision&) = default;
};

using SeriesValuation = std::variant<Value, BelowPrecision>;

// True when the valuation is known to be >= k.
bool at_least(const SeriesValuation& v, std::int64_t k);
std::string to_string(const SeriesValuation& v);

}  // namespace cvf
