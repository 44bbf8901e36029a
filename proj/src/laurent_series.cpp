#include "cvf/laurent_series.hpp"

#include <algorithm>

#include "cvf/error.hpp"

namespace cvf {

namespace {

void check_same(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field())) {
    throw Error(Errc::FieldMismatch, a.field()->describe() + " vs " + b.field()->describe());
  }
}

// Block of a, re-based to start at exponent `base` and cut to `len` terms.
FqPoly rebased(const LaurentSeries& a, std::int64_t base, std::int64_t len) {
  if (a.is_zero_to_precision() || a.order() - base >= len) return FqPoly(a.field());
  const auto offset = static_cast<std::size_t>(a.order() - base);
  return a.block().truncated(static_cast<std::size_t>(len) - offset).shifted_up(offset);
}

}  // namespace

LaurentSeries LaurentSeries::zero(FieldRef field, std::int64_t prec) {
  return LaurentSeries(prec, prec, FqPoly(std::move(field)));
}

LaurentSeries LaurentSeries::constant(const FqElem& c, std::int64_t prec) {
  return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const FqElem& c, std::int64_t exponent, std::int64_t prec) {
  return from_block(exponent, FqPoly::constant(c), prec);
}

LaurentSeries LaurentSeries::from_block(std::int64_t start, const FqPoly& block, std::int64_t prec) {
  if (block.is_zero() || start >= prec) return zero(block.field(), prec);
  const std::size_t lo = block.low_order();
  const std::int64_t val = start + static_cast<std::int64_t>(lo);
  if (val >= prec) return zero(block.field(), prec);
  return LaurentSeries(val, prec,
                       block.shifted_down(lo).truncated(static_cast<std::size_t>(prec - val)));
}

SeriesValuation LaurentSeries::val() const {
  if (is_zero_to_precision()) return BelowPrecision{prec_};
  return Value::integer(val_);
}

FqElem LaurentSeries::coeff(std::int64_t e) const {
  if (e >= prec_) {
    throw Error(Errc::PrecisionExhausted, "coefficient of t^" + std::to_string(e) +
                                              " beyond O(t^" + std::to_string(prec_) + ")");
  }
  if (is_zero_to_precision() || e < val_) return FqElem(field());
  return block_.coeff(static_cast<std::size_t>(e - val_));
}

FqElem LaurentSeries::leading() const {
  if (is_zero_to_precision()) {
    throw Error(Errc::PrecisionExhausted, "leading coefficient of " + str());
  }
  return block_.coeff(0);
}

LaurentSeries LaurentSeries::operator-() const { return LaurentSeries(val_, prec_, -block_); }

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  check_same(a, b);
  const std::int64_t prec = std::min(a.prec_, b.prec_);
  const std::int64_t base = std::min(a.val_, b.val_);
  if (base >= prec) return LaurentSeries::zero(a.field(), prec);
  const std::int64_t len = prec - base;
  return LaurentSeries::from_block(base, rebased(a, base, len) + rebased(b, base, len), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  check_same(a, b);
  if (a.is_zero_to_precision() || b.is_zero_to_precision()) {
    return LaurentSeries::zero(a.field(), a.val_ + b.val_);
  }
  const std::int64_t val = a.val_ + b.val_;
  const std::int64_t prec = std::min(a.val_ + b.prec_, b.val_ + a.prec_);
  const auto len = static_cast<std::size_t>(prec - val);
  return LaurentSeries::from_block(val, a.block_.mul_trunc(b.block_, len), prec);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  return a * b.inverse();
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.prec_ == b.prec_ && a.val_ == b.val_ && a.block_ == b.block_;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero_to_precision()) {
    throw Error(Errc::DivisionByZeroToPrecision, "inverting " + str());
  }
  const FieldRef& f = field();
  const unsigned n = f->n();
  const auto rel = static_cast<std::size_t>(prec_ - val_);
  // Geometric-series recurrence: w_0 = 1/u_0, w_k = -(1/u_0) sum_{j=1..k} u_j w_{k-j}.
  std::vector<std::uint32_t> u(rel * n, 0);
  const auto raw = block_.raw();
  std::copy(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(std::min(raw.size(), u.size())), u.begin());
  const FqElem u0_inv = block_.coeff(0).inv();
  const FqElem minus_u0_inv = -u0_inv;
  std::vector<std::uint32_t> w(rel * n, 0);
  std::copy_n(u0_inv.data(), n, w.begin());
  Coords acc{}, prod{};
  for (std::size_t k = 1; k < rel; ++k) {
    acc.fill(0);
    for (std::size_t j = 1; j <= k; ++j) {
      f->mul(u.data() + j * n, w.data() + (k - j) * n, prod.data());
      f->add(acc.data(), prod.data(), acc.data());
    }
    f->mul(acc.data(), minus_u0_inv.data(), w.data() + k * n);
  }
  return from_block(-val_, FqPoly::from_raw(f, std::move(w)), prec_ - 2 * val_);
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = field()->p();
  if (is_zero_to_precision()) return zero(field(), p * prec_);
  return LaurentSeries(p * val_, p * prec_, block_.frobenius());
}

LaurentSeries LaurentSeries::scaled(const FqElem& c) const {
  if (c.is_zero()) return zero(field(), prec_);
  return LaurentSeries(val_, prec_, block_.scaled(c));
}

LaurentSeries LaurentSeries::truncated(std::int64_t prec) const {
  if (prec >= prec_) return *this;
  return from_block(val_, block_, prec);
}

LaurentSeries LaurentSeries::pow(std::uint64_t e) const {
  LaurentSeries r = constant(FqElem::from_int(field(), 1), prec_ - std::min<std::int64_t>(val_, 0));
  LaurentSeries base = *this;
  bool first = true;
  while (e) {
    if (e & 1) {
      r = first ? base : r * base;
      first = false;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

FqElem LaurentSeries::residue() const {
  if (is_zero_to_precision()) {
    if (prec_ > 0) return FqElem(field());
    throw Error(Errc::PrecisionExhausted, "residue of " + str());
  }
  if (val_ < 0) throw Error(Errc::NegativeValuation, "residue of " + str());
  return coeff(0);
}

std::string LaurentSeries::str() const {
  std::string out;
  if (is_zero_to_precision()) {
    out = "0";
  } else {
    for (std::size_t i = 0; i < block_.size(); ++i) {
      const FqElem c = block_.coeff(i);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (!c.is_one()) out += coeff_literal(c) + "*";
      out += "t^" + std::to_string(val_ + static_cast<std::int64_t>(i));
    }
  }
  return out + " + O(t^" + std::to_string(prec_) + ")";
}

}  // namespace cvf
