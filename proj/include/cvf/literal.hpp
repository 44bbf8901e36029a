#pragma once
// Text literals for field, series and rational-function elements.
//
// One expression grammar covers all of them: sums, differences, products,
// quotients and integer powers of integers, u (the field generator), t and
// parenthesized subexpressions, with an optional trailing "+ O(t^N)".

#include <cstdint>
#include <optional>
#include <string_view>

#include "cvf/laurent_series.hpp"
#include "cvf/rational_function.hpp"

namespace cvf {

struct ParsedLiteral {
  RatFunc value;
  std::optional<std::int64_t> big_o;
};

ParsedLiteral parse_literal(FieldRef field, std::string_view text);

// Rejects a big-O term.
RatFunc parse_rational(FieldRef field, std::string_view text);

// Expands the literal to its own O(t^N) when present, else to default_prec.
LaurentSeries parse_series(FieldRef field, std::string_view text, std::int64_t default_prec);

}  // namespace cvf
