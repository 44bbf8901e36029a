#include "cvf/fq_poly.hpp"

#include <algorithm>

#include "cvf/error.hpp"
#include "cvf/kernels.hpp"
#include "cvf/modp.hpp"

namespace cvf {

namespace {

bool is_compound(const FqElem& c) {
  int nonzero = 0;
  for (auto v : c.coords()) nonzero += v != 0;
  return nonzero > 1;
}

}  // namespace

std::string coeff_literal(const FqElem& c) {
  return is_compound(c) ? "(" + c.str() + ")" : c.str();
}

FqPoly::FqPoly(FieldRef field) : field_(std::move(field)) {}

FqPoly FqPoly::from_coeffs(FieldRef field, std::span<const FqElem> coeffs) {
  const unsigned n = field->n();
  std::vector<std::uint32_t> flat(coeffs.size() * n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].field() != field && !coeffs[i].field()->same_as(*field)) {
      throw Error(Errc::FieldMismatch, "polynomial coefficient from another field");
    }
    std::copy_n(coeffs[i].data(), n, flat.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return from_raw(std::move(field), std::move(flat));
}

FqPoly FqPoly::constant(const FqElem& c) { return monomial(c, 0); }

FqPoly FqPoly::monomial(const FqElem& c, std::size_t k) {
  check_degree(k + 1);
  FqPoly r(c.field());
  if (c.is_zero()) return r;
  const unsigned n = c.field()->n();
  r.data_.assign((k + 1) * n, 0);
  std::copy_n(c.data(), n, r.data_.begin() + static_cast<std::ptrdiff_t>(k * n));
  return r;
}

FqPoly FqPoly::from_raw(FieldRef field, std::vector<std::uint32_t> flat) {
  FqPoly r(std::move(field));
  r.data_ = std::move(flat);
  r.trim();
  check_degree(r.size());
  return r;
}

void FqPoly::trim() {
  const unsigned n = field_->n();
  while (!data_.empty()) {
    bool zero = true;
    for (unsigned i = 0; i < n; ++i) zero = zero && data_[data_.size() - n + i] == 0;
    if (!zero) break;
    data_.resize(data_.size() - n);
  }
}

void FqPoly::check_same(const FqPoly& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) {
    throw Error(Errc::FieldMismatch, field_->describe() + " vs " + o.field_->describe());
  }
}

void FqPoly::check_degree(std::size_t size) {
  if (size > kMaxPolyDegree + 1) {
    throw Error(Errc::DegreeCapExceeded, "polynomial degree " + std::to_string(size - 1) +
                                             " exceeds cap " + std::to_string(kMaxPolyDegree));
  }
}

bool FqPoly::is_one() const { return size() == 1 && coeff(0).is_one(); }

FqElem FqPoly::coeff(std::size_t i) const {
  if (i >= size()) return FqElem(field_);
  const unsigned n = field_->n();
  return FqElem::from_coords(field_, std::span<const std::uint32_t>(data_.data() + i * n, n));
}

FqElem FqPoly::leading() const {
  if (is_zero()) return FqElem(field_);
  return coeff(size() - 1);
}

std::size_t FqPoly::low_order() const {
  const unsigned n = field_->n();
  for (std::size_t i = 0; i < size(); ++i) {
    for (unsigned k = 0; k < n; ++k) {
      if (data_[i * n + k] != 0) return i;
    }
  }
  throw Error(Errc::ZeroHasNoValuation, "low order of the zero polynomial");
}

FqPoly FqPoly::operator-() const {
  FqPoly r(field_);
  r.data_.resize(data_.size());
  const std::uint32_t p = field_->p();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = modp::neg(data_[i], p);
  return r;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  const std::size_t len = std::max(a.data_.size(), b.data_.size());
  std::vector<std::uint32_t> x(a.data_), y(b.data_);
  x.resize(len, 0);
  y.resize(len, 0);
  std::vector<std::uint32_t> out(len);
  kernels::add_mod(x, y, out, a.field_->p());
  return FqPoly::from_raw(a.field_, std::move(out));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  a.check_same(b);
  const std::size_t len = std::max(a.data_.size(), b.data_.size());
  std::vector<std::uint32_t> x(a.data_), y(b.data_);
  x.resize(len, 0);
  y.resize(len, 0);
  std::vector<std::uint32_t> out(len);
  kernels::sub_mod(x, y, out, a.field_->p());
  return FqPoly::from_raw(a.field_, std::move(out));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    a.check_same(b);
    return FqPoly(a.field_);
  }
  return a.mul_trunc(b, a.size() + b.size() - 1);
}

FqPoly FqPoly::mul_trunc(const FqPoly& o, std::size_t len) const {
  check_same(o);
  if (is_zero() || o.is_zero() || len == 0) return FqPoly(field_);
  len = std::min(len, size() + o.size() - 1);
  check_degree(len);
  const unsigned n = field_->n();
  const std::uint32_t p = field_->p();
  if (n == 1) {
    std::vector<std::uint32_t> out(len);
    kernels::convolve_mod(data_, o.data_, out, p);
    return from_raw(field_, std::move(out));
  }

  // Split into coordinate series A_i(t), B_j(t); W_k = sum_{i+j=k} A_i B_j.
  auto split = [n](const std::vector<std::uint32_t>& flat) {
    const std::size_t m = flat.size() / n;
    std::vector<std::vector<std::uint32_t>> comps(n, std::vector<std::uint32_t>(m));
    for (std::size_t t = 0; t < m; ++t) {
      for (unsigned i = 0; i < n; ++i) comps[i][t] = flat[t * n + i];
    }
    return comps;
  };
  const auto as = split(data_);
  const auto bs = split(o.data_);
  std::vector<std::vector<std::uint32_t>> w(2 * n - 1, std::vector<std::uint32_t>(len, 0));
  std::vector<std::uint32_t> tmp(len);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      kernels::convolve_mod(as[i], bs[j], tmp, p);
      kernels::add_mod(w[i + j], tmp, w[i + j], p);
    }
  }
  for (unsigned k = n; k + 1 < 2 * n; ++k) {
    const Coords& row = field_->reduction_row(k - n);
    for (unsigned j = 0; j < n; ++j) kernels::axpy_mod(w[j], w[k], row[j], p);
  }
  std::vector<std::uint32_t> flat(len * n);
  for (std::size_t t = 0; t < len; ++t) {
    for (unsigned i = 0; i < n; ++i) flat[t * n + i] = w[i][t];
  }
  return from_raw(field_, std::move(flat));
}

FqPoly FqPoly::scaled(const FqElem& c) const {
  if (c.field() != field_ && !c.field()->same_as(*field_)) {
    throw Error(Errc::FieldMismatch, "scaling by an element of another field");
  }
  if (c.is_zero()) return FqPoly(field_);
  const unsigned n = field_->n();
  std::vector<std::uint32_t> out(data_.size());
  for (std::size_t i = 0; i < size(); ++i) field_->mul(data_.data() + i * n, c.data(), out.data() + i * n);
  return from_raw(field_, std::move(out));
}

FqPoly FqPoly::shifted_up(std::size_t k) const {
  if (is_zero()) return *this;
  check_degree(size() + k);
  std::vector<std::uint32_t> out(k * field_->n(), 0);
  out.insert(out.end(), data_.begin(), data_.end());
  return from_raw(field_, std::move(out));
}

FqPoly FqPoly::shifted_down(std::size_t k) const {
  if (k >= size()) return FqPoly(field_);
  return from_raw(field_, std::vector<std::uint32_t>(
                              data_.begin() + static_cast<std::ptrdiff_t>(k * field_->n()), data_.end()));
}

FqPoly FqPoly::truncated(std::size_t len) const {
  if (len >= size()) return *this;
  return from_raw(field_, std::vector<std::uint32_t>(
                              data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(len * field_->n())));
}

FqPoly FqPoly::frobenius() const {
  if (is_zero()) return *this;
  const unsigned n = field_->n();
  const std::size_t p = field_->p();
  check_degree(static_cast<std::size_t>(degree()) * p + 1);
  std::vector<std::uint32_t> out((static_cast<std::size_t>(degree()) * p + 1) * n, 0);
  for (std::size_t i = 0; i < size(); ++i) field_->frobenius(data_.data() + i * n, out.data() + i * p * n);
  return from_raw(field_, std::move(out));
}

FqPoly FqPoly::derivative() const {
  if (size() <= 1) return FqPoly(field_);
  const unsigned n = field_->n();
  const std::uint32_t p = field_->p();
  std::vector<std::uint32_t> out((size() - 1) * n);
  for (std::size_t i = 1; i < size(); ++i) {
    const std::uint32_t k = static_cast<std::uint32_t>(i % p);
    for (unsigned c = 0; c < n; ++c) out[(i - 1) * n + c] = modp::mul(data_[i * n + c], k, p);
  }
  return from_raw(field_, std::move(out));
}

bool FqPoly::is_pth_power() const {
  const std::size_t p = field_->p();
  const unsigned n = field_->n();
  for (std::size_t i = 0; i < size(); ++i) {
    if (i % p == 0) continue;
    for (unsigned c = 0; c < n; ++c) {
      if (data_[i * n + c] != 0) return false;
    }
  }
  return true;
}

FqPoly FqPoly::pth_root() const {
  if (!is_pth_power()) throw Error(Errc::InternalConsistency, "polynomial is not a p-th power");
  if (is_zero()) return *this;
  const std::size_t p = field_->p();
  std::vector<FqElem> coeffs;
  for (std::size_t i = 0; i < size(); i += p) coeffs.push_back(coeff(i).pth_root());
  return from_coeffs(field_, coeffs);
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (size() < d.size()) return {FqPoly(field_), *this};
  const unsigned n = field_->n();
  const std::uint32_t p = field_->p();
  const std::size_t dd = d.size() - 1;
  const FqElem lead_inv = d.leading().inv();
  std::vector<std::uint32_t> rem(data_);
  std::vector<std::uint32_t> quo((size() - dd) * n, 0);
  Coords q{}, prod{};
  for (std::size_t i = size(); i-- > dd;) {
    const std::uint32_t* top = rem.data() + i * n;
    field_->mul(top, lead_inv.data(), q.data());
    std::copy_n(q.begin(), n, quo.begin() + static_cast<std::ptrdiff_t>((i - dd) * n));
    if (n == 1) {
      if (q[0] == 0) continue;
      std::span<std::uint32_t> window(rem.data() + (i - dd), dd + 1);
      kernels::axpy_mod(window, std::span<const std::uint32_t>(d.data_.data(), dd + 1), p - q[0], p);
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      std::uint32_t* slot = rem.data() + (i - dd + j) * n;
      field_->mul(q.data(), d.data_.data() + j * n, prod.data());
      field_->sub(slot, prod.data(), slot);
    }
  }
  rem.resize(dd * n);
  return {from_raw(field_, std::move(quo)), from_raw(field_, std::move(rem))};
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  const FqElem lead = leading();
  if (lead.is_one()) return *this;
  return scaled(lead.inv());
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    if (b.size() == 1) return FqPoly::constant(FqElem::from_int(a.field_, 1));
    FqPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqElem FqPoly::eval(const FqElem& x) const {
  FqElem acc(field_);
  for (std::size_t i = size(); i-- > 0;) acc = acc * x + coeff(i);
  return acc;
}

bool operator==(const FqPoly& a, const FqPoly& b) {
  if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.data_ == b.data_;
}

std::string FqPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = size(); k-- > 0;) {
    const FqElem c = coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += c.str();
      continue;
    }
    if (!c.is_one()) out += coeff_literal(c) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace cvf
