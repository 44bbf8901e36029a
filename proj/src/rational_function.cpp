#include "cvf/rational_function.hpp"

#include <algorithm>

#include "cvf/error.hpp"

namespace cvf {

namespace {

FqPoly one_poly(const FieldRef& f) { return FqPoly::constant(FqElem::from_int(f, 1)); }

bool is_monomial(const FqPoly& a) { return !a.is_zero() && a.low_order() + 1 == a.size(); }

}  // namespace

RatFunc::RatFunc(FieldRef field) : num_(field), den_(one_poly(field)) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const FieldRef& f = num_.field();
  if (num_.is_zero()) {
    den_ = one_poly(f);
    return;
  }
  if (!den_.is_constant()) {
    FqPoly g(f);
    if (is_monomial(den_)) {
      const std::size_t k = std::min(den_.low_order(), num_.low_order());
      if (k > 0) g = FqPoly::monomial(FqElem::from_int(f, 1), k);
    } else {
      g = FqPoly::gcd(num_, den_);
    }
    if (!g.is_zero() && !g.is_constant()) {
      num_ = num_.divrem(g).first;
      den_ = den_.divrem(g).first;
    }
  }
  const FqElem lead = den_.leading();
  if (!lead.is_one()) {
    const FqElem inv = lead.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::from_poly(FqPoly num) {
  FqPoly den = one_poly(num.field());
  return RatFunc(std::move(num), std::move(den), Normalized{});
}

RatFunc RatFunc::constant(const FqElem& c) { return from_poly(FqPoly::constant(c)); }

RatFunc RatFunc::from_int(FieldRef field, std::int64_t v) {
  return constant(FqElem::from_int(std::move(field), v));
}

RatFunc RatFunc::t(FieldRef field) {
  return from_poly(FqPoly::monomial(FqElem::from_int(std::move(field), 1), 1));
}

RatFunc RatFunc::monomial(const FqElem& c, std::int64_t k) {
  if (k >= 0) return from_poly(FqPoly::monomial(c, static_cast<std::size_t>(k)));
  const FieldRef& f = c.field();
  if (c.is_zero()) return RatFunc(f);
  return RatFunc(FqPoly::constant(c), FqPoly::monomial(FqElem::from_int(f, 1), static_cast<std::size_t>(-k)));
}

RatFunc RatFunc::from_truncation(const LaurentSeries& s) {
  if (s.is_zero_to_precision()) return RatFunc(s.field());
  const std::int64_t v = s.order();
  if (v >= 0) return from_poly(s.block().shifted_up(static_cast<std::size_t>(v)));
  return RatFunc(s.block(), FqPoly::monomial(FqElem::from_int(s.field(), 1), static_cast<std::size_t>(-v)));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc::from_poly(a.num_ + b.num_);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc::from_poly(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::scaled(const FqElem& c) const {
  if (c.is_zero()) return RatFunc(field());
  return RatFunc(num_.scaled(c), den_, Normalized{});
}

RatFunc RatFunc::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == static_cast<std::int64_t>(field()->p())) return frobenius();
  RatFunc r = from_int(field(), 1);
  RatFunc base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

RatFunc RatFunc::frobenius() const {
  return RatFunc(num_.frobenius(), den_.frobenius(), Normalized{});
}

std::int64_t RatFunc::tadic_order() const {
  if (is_zero()) throw Error(Errc::ZeroHasNoValuation, "t-adic valuation of 0");
  return static_cast<std::int64_t>(num_.low_order()) - static_cast<std::int64_t>(den_.low_order());
}

FqElem RatFunc::tadic_leading() const {
  if (is_zero()) throw Error(Errc::ZeroHasNoValuation, "leading coefficient of 0");
  return num_.coeff(num_.low_order()) / den_.coeff(den_.low_order());
}

LaurentSeries RatFunc::expand(std::int64_t prec) const {
  const FieldRef& f = field();
  if (is_zero()) return LaurentSeries::zero(f, prec);
  const std::int64_t v = tadic_order();
  if (v >= prec) return LaurentSeries::zero(f, prec);
  const auto rel = static_cast<std::size_t>(prec - v);
  const FqPoly n0 = num_.shifted_down(num_.low_order()).truncated(rel);
  const FqPoly d0 = den_.shifted_down(den_.low_order()).truncated(rel);
  const auto relp = static_cast<std::int64_t>(rel);
  const LaurentSeries unit = LaurentSeries::from_block(0, n0, relp) / LaurentSeries::from_block(0, d0, relp);
  return LaurentSeries::from_block(v + unit.order(), unit.block(), prec);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace cvf
