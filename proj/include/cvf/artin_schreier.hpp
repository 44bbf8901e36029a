#pragma once
// Artin-Schreier polynomials X^p - X - b over F_q((t)) (the complete base)
// and F_q(t) with the t-adic valuation (the rational base).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cvf/finite_field.hpp"
#include "cvf/fq_poly.hpp"
#include "cvf/laurent_series.hpp"
#include "cvf/rational_function.hpp"
#include "cvf/value.hpp"

namespace cvf {

enum class Base { Complete, Rational };
enum class ExtensionKind { Split, Ramified, Residual, Immediate };

std::string_view base_name(Base b) noexcept;
std::string_view kind_name(ExtensionKind k) noexcept;

using BaseElem = std::variant<LaurentSeries, RatFunc>;
std::string literal(const BaseElem& x);

// ---------------------------------------------------------------------------
// Roots in the complete field.

// All p roots of X^p - X - b for v(b) >= 1, by the iteration x <- x^p - b
// from x = 0 (Newton's step, since the derivative is -1). Entry c is the root
// with residue c. Throws ValuationNotPositive when v(b) < 1.
std::vector<LaurentSeries> as_solve_complete(const LaurentSeries& b);

// Newton lift of a simple residual root. poly holds coefficients low to high;
// all must lie in F_q[[t]].
LaurentSeries hensel_lift(std::span<const LaurentSeries> poly, const FqElem& alpha);

// ---------------------------------------------------------------------------
// Reduction to normal form.

// reduced = b - (shift^p - shift), and reduced has exactly one of:
// v > 0 (or zero to a positive precision); v < 0 with p not dividing v;
// v = 0 with a residue of nonzero trace.
template <class T>
struct Reduction {
  T reduced;
  T shift;
  int steps = 0;
};

Reduction<LaurentSeries> as_reduce(const LaurentSeries& b);
Reduction<RatFunc> as_reduce(const RatFunc& b);

// ---------------------------------------------------------------------------
// Exact membership b in {x^p - x : x in F_q(t)}.

// The denominator of b is not a p-th power: some finite place has a pole
// order prime to p. `place` is irreducible unless the factor search budget
// ran out, in which case it is the product of all such places.
struct PoleCertificate {
  FqPoly place;
  std::int64_t order;
  bool place_is_irreducible;
};
// The principal parts are not of the form y^p - y, y = A/B, deg A < deg B.
struct PrincipalPartCertificate {
  FqPoly denominator_root;  // B, with den(b) = B^p
};
// Top-down reduction of the polynomial part stopped at a degree prime to p.
struct DegreeCertificate {
  std::int64_t degree;
  FqPoly remainder;
};
// Reduction of the polynomial part ended in a constant of nonzero trace.
struct ResidueTraceCertificate {
  FqElem constant;
  FqElem trace;
};
using NonMembershipCertificate =
    std::variant<PoleCertificate, PrincipalPartCertificate, DegreeCertificate, ResidueTraceCertificate>;

struct Membership {
  // One solution x; the others are x + c, c in F_p.
  std::optional<RatFunc> solution;
  std::optional<NonMembershipCertificate> certificate;

  bool solvable() const { return solution.has_value(); }
  std::vector<RatFunc> solutions() const;
};

Membership membership_rational(const RatFunc& b);

// ---------------------------------------------------------------------------
// Classification of K[X]/(X^p - X - b).

struct SplitEvidence {
  std::vector<BaseElem> roots;
};
struct RamifiedEvidence {
  std::int64_t reduced_val;  // v(reduced_b) < 0, prime to p
  Value w_a;                 // value of a - shift in the extension
  // (a - shift)^i t^j has value 1/p.
  std::int64_t uniformizer_a_exp;
  std::int64_t uniformizer_t_exp;
};
struct ResidualEvidence {
  FqElem residue;  // residue generator satisfies x^p - x = residue
  FqElem trace;
};
struct Distinguisher {
  std::size_t i;
  std::size_t j;
  std::string element;
  SeriesValuation w_i;
  SeriesValuation w_j;
};
struct ImmediateEvidence {
  // Completion roots; embedding c sends a to roots[c].
  std::vector<LaurentSeries> roots = {};
  std::vector<SeriesValuation> w_a = {};
  std::vector<Distinguisher> distinguishers = {};
  std::size_t distinct_valuations = 0;
  NonMembershipCertificate certificate;
};

struct ExtensionReport {
  ExtensionKind kind;
  int e = 1, f = 1, g = 1, d = 1;
  Base base;
  std::uint32_t p;
  std::int64_t prec;
  BaseElem reduced_b;
  BaseElem shift;
  int reduction_steps = 0;
  // Set for Split: the algebra is K^p, counted as p places of degree one.
  bool split_flag = false;
  std::variant<SplitEvidence, RamifiedEvidence, ResidualEvidence, ImmediateEvidence> evidence;
};

ExtensionReport classify_extension(const LaurentSeries& b);
// prec bounds the completion roots computed for the Immediate case.
ExtensionReport classify_extension(const RatFunc& b, std::int64_t prec = kDefaultPrecision);

// Value of Q(a) in L = K(a), Q given low to high over the base. Degrees >= p
// are first reduced by a^p = a + b. One value for Ramified and Residual, one
// per embedding for Immediate.
std::vector<Value> extension_valuation(std::span<const RatFunc> q, const ExtensionReport& report);
std::vector<Value> extension_valuation(std::span<const LaurentSeries> q, const ExtensionReport& report);

}  // namespace cvf
