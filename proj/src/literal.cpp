#include "cvf/literal.hpp"

#include <cctype>
#include <string>

#include "cvf/error.hpp"

namespace cvf {

namespace {

class Parser {
 public:
  Parser(FieldRef field, std::string_view text) : field_(std::move(field)), text_(text) {}

  ParsedLiteral run() {
    RatFunc v = expression(true);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return ParsedLiteral{std::move(v), big_o_};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::int64_t integer_literal(bool allow_sign) {
    skip_ws();
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return negative ? -v : v;
  }

  // "O(t^N)" once 'O' has been seen.
  void big_o_term(bool top_level) {
    if (!top_level) fail("O(t^N) is only allowed as a top-level summand");
    if (big_o_) fail("more than one O(t^N) term");
    expect('O');
    expect('(');
    expect('t');
    expect('^');
    big_o_ = integer_literal(true);
    expect(')');
  }

  RatFunc expression(bool top_level) {
    RatFunc acc(field_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    bool have_term = false;
    for (;;) {
      if (peek('O')) {
        if (negate) fail("O(t^N) cannot be subtracted");
        big_o_term(top_level);
      } else {
        RatFunc v = term();
        acc = negate ? acc - v : acc + v;
        have_term = true;
      }
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else break;
    }
    if (!have_term) fail("expected a term before O(t^N)");
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) acc = acc / factor();
      else break;
    }
    return acc;
  }

  RatFunc factor() {
    RatFunc base = atom();
    if (eat('^')) return base.pow(integer_literal(true));
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expression(false);
      expect(')');
      return v;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc::t(field_);
    }
    if (c == 'u') {
      ++pos_;
      if (field_->n() == 1) fail("'u' is not defined over a prime field");
      return RatFunc::constant(FqElem::generator(field_));
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = field_->p();
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return RatFunc::from_int(field_, static_cast<std::int64_t>(v));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  FieldRef field_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::int64_t> big_o_;
};

}  // namespace

ParsedLiteral parse_literal(FieldRef field, std::string_view text) {
  try {
    return Parser(std::move(field), text).run();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ParseError, "'" + std::string(text) + "': " + e.what());
  }
}

RatFunc parse_rational(FieldRef field, std::string_view text) {
  ParsedLiteral lit = parse_literal(std::move(field), text);
  if (lit.big_o) throw Error(Errc::ParseError, "'" + std::string(text) + "': O(t^N) in a rational literal");
  return std::move(lit.value);
}

LaurentSeries parse_series(FieldRef field, std::string_view text, std::int64_t default_prec) {
  ParsedLiteral lit = parse_literal(std::move(field), text);
  return lit.value.expand(lit.big_o.value_or(default_prec));
}

}  // namespace cvf
