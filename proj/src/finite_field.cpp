#include "cvf/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cvf/error.hpp"
#include "cvf/linalg_fp.hpp"
#include "cvf/modp.hpp"

namespace cvf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = modp::inv(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint32_t c = modp::mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = modp::sub(a[shift + j], modp::mul(c, f[j], p), p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = modp::add(r[i + j], modp::mul(a[i], b[j], p), p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(Errc::ParseError, "field element '" + std::string(text) + "': " + why);
}

// Recursive-descent parser for field element literals: sums and products of
// integers, u, u^k and parenthesized subexpressions.
class ElemParser {
 public:
  ElemParser(FieldRef field, std::string_view text) : field_(std::move(field)), text_(text) {}

  FqElem run() {
    FqElem v = expression();
    skip_ws();
    if (pos_ != text_.size()) parse_error(text_, "unexpected trailing input");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FqElem expression() {
    FqElem acc(field_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    FqElem first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  FqElem term() {
    FqElem acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  std::uint64_t number_u64() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ull << 40)) parse_error(text_, "exponent too large");
      ++pos_;
    }
    if (start == pos_) parse_error(text_, "expected a number");
    return v;
  }

  FqElem factor() {
    skip_ws();
    if (pos_ >= text_.size()) parse_error(text_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FqElem v = expression();
      if (!eat(')')) parse_error(text_, "missing ')'");
      return v;
    }
    if (c == 'u') {
      ++pos_;
      if (field_->n() == 1) parse_error(text_, "'u' is not defined over a prime field");
      FqElem g = FqElem::generator(field_);
      if (eat('^')) return g.pow(number_u64());
      return g;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = field_->p();
      std::uint32_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * 10 +
                                        static_cast<std::uint64_t>(text_[pos_] - '0')) %
                                       p);
        ++pos_;
      }
      return FqElem::from_int(field_, v);
    }
    parse_error(text_, std::string("unexpected character '") + c + "'");
  }

  FieldRef field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const Poly x{0, 1};

  std::vector<Poly> frob_powers(n + 1);  // x^(p^k) mod f
  frob_powers[0] = poly_mod(x, f, p);
  for (std::size_t k = 1; k <= n; ++k) frob_powers[k] = poly_powmod(frob_powers[k - 1], p, f, p);

  Poly check = frob_powers[n];
  if (check != poly_mod(x, f, p)) return false;

  for (std::uint64_t r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    Poly h = frob_powers[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = modp::sub(h[1], 1, p);
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned n) {
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  for (;;) {
    if (is_irreducible_mod_p(f, p)) return f;
    // Odometer increment over the non-leading coefficients, low digit first.
    unsigned i = 0;
    while (i < n) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == n) throw Error(Errc::InvalidField, "no irreducible polynomial found");
  }
}

FieldRef FieldDesc::make(std::uint32_t p, unsigned n,
                         std::optional<std::vector<std::uint32_t>> modulus) {
  if (p > kMaxCharacteristic || !is_prime(p)) {
    throw Error(Errc::InvalidField, "characteristic " + std::to_string(p) + " is not a prime < 2^31");
  }
  if (n < 1 || n > kMaxExtensionDegree) {
    throw Error(Errc::InvalidField, "extension degree must lie in [1, 8], got " + std::to_string(n));
  }
  std::vector<std::uint32_t> m;
  if (n == 1) {
    if (modulus && modulus->size() != 2) {
      throw Error(Errc::InvalidField, "a prime field takes no modulus of degree != 1");
    }
  } else if (modulus) {
    m = *modulus;
    if (m.size() != n + 1 || m.back() != 1) {
      throw Error(Errc::InvalidField, "modulus must be monic of degree " + std::to_string(n));
    }
    for (auto c : m) {
      if (c >= p) throw Error(Errc::InvalidField, "modulus coefficient not reduced mod p");
    }
    if (!is_irreducible_mod_p(m, p)) throw Error(Errc::InvalidField, "modulus is reducible");
  } else {
    m = least_irreducible(p, n);
  }
  return FieldRef(new FieldDesc(p, n, std::move(m)));
}

FieldDesc::FieldDesc(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (n_ == 1) {
    frobenius_.push_back(Coords{1});
    return;
  }
  Coords top{};  // u^n mod m
  for (unsigned j = 0; j < n_; ++j) top[j] = modp::neg(modulus_[j], p_);
  reduction_.push_back(top);
  for (unsigned k = 1; k + 1 < n_; ++k) {
    const Coords& prev = reduction_.back();
    Coords next{};
    const std::uint32_t carry = prev[n_ - 1];
    for (unsigned j = n_ - 1; j > 0; --j) next[j] = prev[j - 1];
    next[0] = 0;
    for (unsigned j = 0; j < n_; ++j) next[j] = modp::add(next[j], modp::mul(carry, top[j], p_), p_);
    reduction_.push_back(next);
  }

  // u^p by square-and-multiply, then its powers.
  Coords u{};
  u[1] = 1;
  Coords result{};
  result[0] = 1;
  Coords base = u;
  for (std::uint64_t e = p_; e; e >>= 1) {
    if (e & 1) mul(result.data(), base.data(), result.data());
    mul(base.data(), base.data(), base.data());
  }
  Coords power{};
  power[0] = 1;
  for (unsigned j = 0; j < n_; ++j) {
    frobenius_.push_back(power);
    mul(power.data(), result.data(), power.data());
  }
}

std::optional<std::uint64_t> FieldDesc::order() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < n_; ++i) {
    q *= p_;
    if (q > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

bool FieldDesc::same_as(const FieldDesc& other) const {
  return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

std::string FieldDesc::describe() const {
  std::ostringstream os;
  if (n_ == 1) {
    os << "F_" << p_;
    return os.str();
  }
  os << "F_" << p_ << "^" << n_ << " = F_" << p_ << "[u]/(";
  bool first = true;
  for (int k = static_cast<int>(n_); k >= 0; --k) {
    const std::uint32_t c = modulus_[static_cast<unsigned>(k)];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "u";
    if (k > 1) os << "^" << k;
  }
  os << ")";
  return os.str();
}

void FieldDesc::add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (unsigned i = 0; i < n_; ++i) out[i] = modp::add(a[i], b[i], p_);
}

void FieldDesc::sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  for (unsigned i = 0; i < n_; ++i) out[i] = modp::sub(a[i], b[i], p_);
}

void FieldDesc::neg(const std::uint32_t* a, std::uint32_t* out) const {
  for (unsigned i = 0; i < n_; ++i) out[i] = modp::neg(a[i], p_);
}

void FieldDesc::reduce(std::uint32_t* wide) const {
  for (unsigned k = n_; k + 1 < 2 * n_; ++k) {
    const std::uint32_t c = wide[k];
    if (c == 0) continue;
    wide[k] = 0;
    const Coords& r = reduction_[k - n_];
    for (unsigned j = 0; j < n_; ++j) wide[j] = modp::add(wide[j], modp::mul(c, r[j], p_), p_);
  }
}

void FieldDesc::mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (n_ == 1) {
    out[0] = modp::mul(a[0], b[0], p_);
    return;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> acc{};
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j] % p_;
  }
  std::array<std::uint32_t, 2 * kMaxExtensionDegree - 1> wide{};
  for (unsigned k = 0; k + 1 < 2 * n_; ++k) wide[k] = static_cast<std::uint32_t>(acc[k] % p_);
  reduce(wide.data());
  std::copy_n(wide.begin(), n_, out);
}

void FieldDesc::frobenius(const std::uint32_t* a, std::uint32_t* out) const {
  if (n_ == 1) {
    out[0] = a[0];
    return;
  }
  Coords r{};
  for (unsigned j = 0; j < n_; ++j) {
    if (a[j] == 0) continue;
    for (unsigned i = 0; i < n_; ++i) r[i] = modp::add(r[i], modp::mul(a[j], frobenius_[j][i], p_), p_);
  }
  std::copy_n(r.begin(), n_, out);
}

// ---------------------------------------------------------------------------

FqElem::FqElem(FieldRef field) : field_(std::move(field)) {}

FqElem FqElem::from_int(FieldRef field, std::int64_t v) {
  Coords c{};
  c[0] = modp::from_signed(v, field->p());
  return FqElem(std::move(field), c);
}

FqElem FqElem::from_coords(FieldRef field, std::span<const std::uint32_t> coords) {
  Coords c{};
  const std::uint32_t p = field->p();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i >= field->n()) {
      if (coords[i] % p != 0) throw Error(Errc::InvalidField, "too many coordinates for field");
      continue;
    }
    c[i] = coords[i] % p;
  }
  return FqElem(std::move(field), c);
}

FqElem FqElem::generator(FieldRef field) {
  Coords c{};
  if (field->n() > 1) c[1] = 1;
  return FqElem(std::move(field), c);
}

FqElem FqElem::parse(FieldRef field, std::string_view text) {
  return ElemParser(std::move(field), text).run();
}

std::span<const std::uint32_t> FqElem::coords() const {
  return std::span<const std::uint32_t>(c_.data(), field_->n());
}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FqElem::is_one() const {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FqElem::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

void FqElem::check_same(const FqElem& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_)) {
    throw Error(Errc::FieldMismatch, field_->describe() + " vs " + o.field_->describe());
  }
}

FqElem FqElem::operator-() const {
  FqElem r(field_);
  field_->neg(c_.data(), r.c_.data());
  return r;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  check_same(o);
  field_->add(c_.data(), o.c_.data(), c_.data());
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  check_same(o);
  field_->sub(c_.data(), o.c_.data(), c_.data());
  return *this;
}

FqElem& FqElem::operator*=(const FqElem& o) {
  check_same(o);
  field_->mul(c_.data(), o.c_.data(), c_.data());
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& o) {
  check_same(o);
  return *this *= o.inv();
}

bool operator==(const FqElem& a, const FqElem& b) {
  if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r = from_int(field_, 1);
  FqElem base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FqElem FqElem::frobenius() const {
  FqElem r(field_);
  field_->frobenius(c_.data(), r.c_.data());
  return r;
}

FqElem FqElem::pth_root() const {
  FqElem r = *this;
  for (unsigned i = 1; i < field_->n(); ++i) r = r.frobenius();
  return r;
}

FqElem FqElem::trace_to_prime() const {
  FqElem sum = *this;
  FqElem conj = *this;
  for (unsigned i = 1; i < field_->n(); ++i) {
    conj = conj.frobenius();
    sum += conj;
  }
  if (!sum.in_prime_field()) throw Error(Errc::InternalConsistency, "trace left the prime field");
  return sum;
}

FqElem FqElem::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in " + field_->describe());
  const std::uint32_t p = field_->p();
  if (field_->n() == 1) return from_int(field_, modp::inv(c_[0], p));
  // x^-1 = (x^p * ... * x^(p^(n-1))) / N(x), with the norm N(x) in F_p.
  FqElem conj = *this;
  FqElem prod = from_int(field_, 1);
  for (unsigned i = 1; i < field_->n(); ++i) {
    conj = conj.frobenius();
    prod *= conj;
  }
  const FqElem norm = *this * prod;
  if (!norm.in_prime_field() || norm.is_zero()) {
    throw Error(Errc::InternalConsistency, "norm not a nonzero element of F_p");
  }
  FqElem r = prod;
  const std::uint32_t ninv = modp::inv(norm.c_[0], p);
  for (unsigned i = 0; i < field_->n(); ++i) r.c_[i] = modp::mul(r.c_[i], ninv, p);
  return r;
}

std::string FqElem::str() const {
  if (field_->n() == 1) return std::to_string(c_[0]);
  std::string out;
  for (int k = static_cast<int>(field_->n()) - 1; k >= 0; --k) {
    const std::uint32_t c = c_[static_cast<unsigned>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

FqElem ResidueSolutions::at(std::uint64_t i) const {
  return particular + FqElem::from_int(particular.field(), static_cast<std::int64_t>(i));
}

std::vector<FqElem> ResidueSolutions::all() const {
  if (count() > (1u << 20)) {
    throw Error(Errc::InvalidField, "refusing to enumerate more than 2^20 residue solutions");
  }
  std::vector<FqElem> out;
  out.reserve(count());
  for (std::uint64_t i = 0; i < count(); ++i) out.push_back(at(i));
  return out;
}

std::optional<ResidueSolutions> as_solve_residue(const FqElem& c) {
  const FieldRef& f = c.field();
  const unsigned n = f->n();
  const std::uint32_t p = f->p();
  // Column j is the image of u^j under y -> y^p - y.
  MatrixFp m(n, n);
  for (unsigned j = 0; j < n; ++j) {
    Coords e{};
    e[j] = 1;
    const FqElem basis = FqElem::from_coords(f, std::span<const std::uint32_t>(e.data(), n));
    const FqElem image = basis.frobenius() - basis;
    for (unsigned i = 0; i < n; ++i) m.at(i, j) = image.coord(i);
  }
  auto sol = solve_mod_p(std::move(m), c.coords(), p);
  if (!sol) return std::nullopt;
  if (sol->kernel_basis.size() != 1) {
    throw Error(Errc::InternalConsistency, "kernel of y^p - y is not one-dimensional");
  }
  return ResidueSolutions{FqElem::from_coords(f, sol->particular)};
}

}  // namespace cvf
