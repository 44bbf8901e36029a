#pragma once
// Finite prefixes of pseudo-convergent sequences in F_q(t) under the t-adic
// valuation, and the valuation they induce on polynomials.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/random.hpp"
#include "cvf/rational_function.hpp"
#include "cvf/value.hpp"

namespace cvf {

// Polynomial over F_q(t), coefficients low to high.
using RatPoly = std::vector<RatFunc>;

std::string poly_literal(std::span<const RatFunc> q);

class PCPrefix {
 public:
  // gamma[i] = v(a_{i+1} - a_i) for i < n.
  static PCPrefix from_elements(std::vector<RatFunc> elems);

  const FieldRef& field() const { return elems_.front().field(); }
  std::size_t size() const { return elems_.size(); }
  const std::vector<RatFunc>& elems() const { return elems_; }
  const std::vector<Value>& gamma() const { return gamma_; }
  // v(P(a_i)) for P = X^p - X - b, when generated from b.
  const std::vector<Value>& vP() const { return vp_; }
  const std::optional<RatFunc>& b() const { return b_; }

  // a_i^k, cached. Not safe for concurrent use.
  const RatFunc& power(std::size_t i, std::size_t k) const;
  RatFunc eval(std::span<const RatFunc> q, std::size_t i) const;

 private:
  friend PCPrefix partial_sum_sequence(const RatFunc& b, std::size_t n);
  PCPrefix() = default;

  std::vector<RatFunc> elems_;
  std::vector<Value> gamma_;
  std::vector<Value> vp_;
  std::optional<RatFunc> b_;
  mutable std::vector<std::vector<RatFunc>> powers_;
};

// Checks v(a_j - a_i) < v(a_k - a_j) for all i < j < k, and separately the
// strict growth of consecutive differences; throws InternalConsistency if the
// two disagree. Throws TooShort below three elements.
bool is_pseudo_convergent(const PCPrefix& prefix);

// a_i = -(b + b^p + ... + b^(p^i)) for i = 0..n, with gamma_i and v(P(a_i))
// for every i (gamma_n uses the next partial sum).
PCPrefix partial_sum_sequence(const RatFunc& b, std::size_t n);

// v(x^p - x - b), infinite when x solves the equation.
Value c_set_value(const RatFunc& b, const RatFunc& x);

struct CSetProbe {
  std::vector<Value> partial_sum_values;  // at a_0..a_depth when v(b) >= 1
  std::vector<Value> maxima;              // maxima[k]: largest value among a_0..a_k
  std::vector<RatFunc> samples;
  std::vector<Value> sample_values;
  std::optional<RatFunc> solution;        // present when b = x^p - x
};

CSetProbe c_set_probe(const RatFunc& b, std::size_t depth, Rng& rng, std::size_t samples = 16);

struct StabilizationReport {
  bool stabilized = false;
  Value value;                 // meaningful when stabilized
  std::size_t stable_from = 0;
  std::vector<Value> trace;    // v(Q(a_i)) along the prefix
};

// Stabilized when the last two values agree; stable_from is the start of
// the constant tail.
StabilizationReport ultimate_val(std::span<const RatFunc> q, const PCPrefix& prefix);

// The last `tail` values are strictly increasing.
bool ultimately_increasing(const std::vector<Value>& trace, std::size_t tail = 3);

struct DegreeSummary {
  std::size_t degree = 0;
  std::size_t samples = 0;
  std::size_t stabilized = 0;
  std::size_t increasing = 0;
  std::size_t delta_prime_stable = 0;  // derivative valuation also settled
};

struct Counterexample {
  RatPoly q;
  StabilizationReport report;
};

struct CheckReport {
  std::vector<DegreeSummary> degrees;
  std::vector<Counterexample> counterexamples;
  bool p_increasing = false;
  std::vector<Value> p_trace;

  bool passed() const { return counterexamples.empty() && p_increasing; }
};

// Coefficients {0..p-1} and t, t+1, 1/t.
std::vector<RatFunc> default_coeff_pool(const FieldRef& field);

// Samples `trials` polynomials of each degree 1..p-1 with coefficients from
// pool; trial k of degree d draws from its own seed derived from `seed`.
CheckReport min_degree_check(const PCPrefix& prefix, std::span<const RatFunc> pool, std::size_t trials,
                             std::uint64_t seed);

struct TableRow {
  RatPoly q;
  StabilizationReport report;
};

// Monomials 1, X, ..., X^(p-1) followed by `random_count` random polynomials of
// degree < p. Throws NotStabilized when some row does not settle.
std::vector<TableRow> pc_valuation_table(const PCPrefix& prefix, std::size_t random_count, Rng& rng);

// Index of the completion root of an Immediate report closest to the last
// prefix element, i.e. the embedding in which the prefix converges to a.
std::size_t limit_embedding(const ExtensionReport& report, const PCPrefix& prefix);

RatPoly random_ratpoly(const FieldRef& field, Rng& rng, std::size_t degree, std::span<const RatFunc> pool);

}  // namespace cvf
