#pragma once
// Exact arithmetic in F_q = F_p[u]/(m(u)), q = p^n, n <= 8, p < 2^31.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvf {

inline constexpr unsigned kMaxExtensionDegree = 8;
inline constexpr std::uint32_t kMaxCharacteristic = 2147483647u;  // 2^31 - 1

using Coords = std::array<std::uint32_t, kMaxExtensionDegree>;

class FieldDesc;
using FieldRef = std::shared_ptr<const FieldDesc>;

// Trial division.
bool is_prime(std::uint64_t n);

// Rabin's test for a monic polynomial over F_p (coefficients low to high).
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

// Least monic irreducible of degree n, ordering candidates by the integer
// sum c_i p^i over the non-leading coefficients.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned n);

// Immutable description of F_q. Shared by every element of the field.
class FieldDesc {
 public:
  // modulus: n+1 coefficients low to high, monic. Ignored (must be absent or
  // linear) when n == 1. Throws Error(InvalidField) on a composite p, an
  // unsupported degree or a reducible modulus.
  static FieldRef make(std::uint32_t p, unsigned n = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  // Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // q when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;
  bool same_as(const FieldDesc& other) const;
  std::string describe() const;

  // Raw coordinate arithmetic; all pointers address n coordinates.
  void add(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void sub(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void neg(const std::uint32_t* a, std::uint32_t* out) const;
  void mul(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void frobenius(const std::uint32_t* a, std::uint32_t* out) const;
  // Reduces a product polynomial of degree <= 2n-2 (2n-1 coordinates) in place;
  // the first n entries hold the result.
  void reduce(std::uint32_t* wide) const;
  // u^(n+k) mod m, for k < n-1.
  const Coords& reduction_row(unsigned k) const { return reduction_[k]; }

 private:
  FieldDesc(std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned n_;
  std::vector<std::uint32_t> modulus_;
  // reduction_[k] = u^(n+k) mod m, k < n-1.
  std::vector<Coords> reduction_;
  // frobenius_[j] = (u^j)^p mod m.
  std::vector<Coords> frobenius_;
};

class FqElem {
 public:
  explicit FqElem(FieldRef field);  // zero

  static FqElem from_int(FieldRef field, std::int64_t v);
  static FqElem from_coords(FieldRef field, std::span<const std::uint32_t> coords);
  // The class of u; for prime fields this is simply 0.
  static FqElem generator(FieldRef field);
  // Literal: decimal integer for n == 1, polynomial in u for n > 1 ("u+1").
  static FqElem parse(FieldRef field, std::string_view text);

  const FieldRef& field() const { return field_; }
  std::uint32_t coord(unsigned i) const { return c_[i]; }
  std::span<const std::uint32_t> coords() const;
  const std::uint32_t* data() const { return c_.data(); }

  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem& operator/=(const FqElem& o);
  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }
  friend bool operator==(const FqElem& a, const FqElem& b);

  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  FqElem frobenius() const;
  FqElem pth_root() const;
  // x + x^p + ... + x^(p^(n-1)); always lands in F_p.
  FqElem trace_to_prime() const;

  std::string str() const;

 private:
  FqElem(FieldRef field, const Coords& c) : field_(std::move(field)), c_(c) {}
  void check_same(const FqElem& o) const;

  FieldRef field_;
  Coords c_{};
};

// Solutions of y^p - y = c in F_q: the coset particular + F_p.
struct ResidueSolutions {
  FqElem particular;

  std::uint64_t count() const { return particular.field()->p(); }
  FqElem at(std::uint64_t i) const;
  // Every solution, in the order particular + 0, + 1, ... Throws for p > 2^20.
  std::vector<FqElem> all() const;
};

// Preimage of c under y -> y^p - y, computed as an F_p-linear solve.
// nullopt exactly when trace_to_prime(c) != 0.
std::optional<ResidueSolutions> as_solve_residue(const FqElem& c);

}  // namespace cvf
