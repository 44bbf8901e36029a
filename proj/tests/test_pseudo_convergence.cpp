#include <vector>

#include "cvf/error.hpp"
#include "cvf/literal.hpp"
#include "cvf/pseudo_convergence.hpp"
#include "doctest.h"

using namespace cvf;

namespace {

RatFunc rf(const FieldRef& f, const char* text) { return parse_rational(f, text); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalConsistency;
}

std::vector<Value> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Value> out;
  for (auto x : xs) out.push_back(Value::integer(x));
  return out;
}

}  // namespace

TEST_CASE("pseudo-convergence examples") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  std::vector<RatFunc> dyadic;
  RatFunc s(f2);
  for (int k = 0; k < 6; ++k) {
    s = s + RatFunc::monomial(FqElem::from_int(f2, 1), std::int64_t{1} << k);
    dyadic.push_back(s);
  }
  CHECK(is_pseudo_convergent(PCPrefix::from_elements(dyadic)));

  std::vector<RatFunc> alt, alt_sums;
  RatFunc sum(f3);
  for (int i = 0; i < 6; ++i) {
    const auto term = RatFunc::monomial(FqElem::from_int(f3, i % 2 ? -1 : 1), i);
    alt.push_back(term);
    sum = sum + term;
    alt_sums.push_back(sum);
  }
  CHECK(is_pseudo_convergent(PCPrefix::from_elements(alt)));
  CHECK(is_pseudo_convergent(PCPrefix::from_elements(alt_sums)));

  const std::vector<RatFunc> constant(4, rf(f3, "t+1"));
  CHECK_FALSE(is_pseudo_convergent(PCPrefix::from_elements(constant)));
  const std::vector<RatFunc> two{rf(f3, "t"), rf(f3, "t^2")};
  CHECK(code_of([&] { is_pseudo_convergent(PCPrefix::from_elements(two)); }) == Errc::TooShort);

  // Valuations of differences decrease: not pseudo-convergent.
  const std::vector<RatFunc> bad{rf(f3, "0"), rf(f3, "t^3"), rf(f3, "t^3+t")};
  CHECK_FALSE(is_pseudo_convergent(PCPrefix::from_elements(bad)));
}

TEST_CASE("partial-sum sequence examples") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  const auto p2 = partial_sum_sequence(rf(f2, "t"), 3);
  REQUIRE(p2.size() == 4);
  CHECK(p2.elems()[3] == rf(f2, "t + t^2 + t^4 + t^8"));
  CHECK(p2.vP() == ints({2, 4, 8, 16}));
  CHECK(p2.gamma() == ints({2, 4, 8, 16}));
  CHECK(is_pseudo_convergent(p2));

  const auto p3 = partial_sum_sequence(rf(f3, "t"), 2);
  CHECK(p3.elems()[2] == rf(f3, "2*t + 2*t^3 + 2*t^9"));
  CHECK(p3.vP() == ints({3, 9, 27}));

  CHECK(partial_sum_sequence(rf(f2, "t^2"), 2).gamma() == ints({4, 8, 16}));

  CHECK(code_of([&] { partial_sum_sequence(rf(f2, "t^2+t"), 3); }) == Errc::SolvableB);
  CHECK(code_of([&] { partial_sum_sequence(rf(f2, "1/t"), 3); }) == Errc::ValuationNotPositive);
  CHECK(code_of([&] { partial_sum_sequence(rf(f3, "0"), 3); }) == Errc::SolvableB);
}

TEST_CASE("partial-sum closed form on sampled b") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FieldDesc::make(p);
    Rng rng(derive_seed(51, p));
    int done = 0;
    while (done < 10) {
      const auto b = random_ratfunc_with_val(f, rng, rng.range(1, 2), 2, 1);
      if (membership_rational(b).solvable()) continue;
      ++done;
      const auto pre = partial_sum_sequence(b, p == 5 ? 2 : 4);
      const auto vb = b.tadic_order();
      std::int64_t pk = static_cast<std::int64_t>(p);
      for (std::size_t i = 0; i < pre.size(); ++i, pk *= p) {
        CHECK(pre.gamma()[i] == Value::integer(pk * vb));
        CHECK(pre.vP()[i] == Value::integer(pk * vb));
        const auto& a = pre.elems()[i];
        CHECK(a.frobenius() - a - b == -b.pow(pk));
      }
      CHECK(is_pseudo_convergent(pre));
    }
  }
}

TEST_CASE("C-set probe") {
  auto f2 = FieldDesc::make(2);
  Rng rng(7);
  const auto probe = c_set_probe(rf(f2, "t"), 4, rng);
  CHECK(probe.maxima == ints({2, 4, 8, 16, 32}));
  CHECK_FALSE(probe.solution);

  // Class invariance: the probe values for b' = y^2 - y + t at x + y agree
  // with those for t at x.
  for (int i = 0; i < 20; ++i) {
    const auto y = random_ratfunc(f2, rng, 3, 2);
    const auto b2 = y.frobenius() - y + rf(f2, "t");
    for (const auto& x : probe.samples) CHECK(c_set_value(b2, x + y) == c_set_value(rf(f2, "t"), x));
  }

  const auto y = rf(f2, "1/(t+1)");
  const auto solvable = c_set_probe(y.frobenius() - y, 2, rng);
  REQUIRE(solvable.solution);
  CHECK(solvable.sample_values.back().is_infinite());
}

TEST_CASE("ultimate valuation") {
  auto f2 = FieldDesc::make(2);
  const auto pre = partial_sum_sequence(rf(f2, "t"), 6);
  const RatPoly x{RatFunc(f2), rf(f2, "1")};
  auto r = ultimate_val(x, pre);
  CHECK(r.stabilized);
  CHECK(r.value == Value::integer(1));
  CHECK(r.stable_from == 0);

  const RatPoly x1{rf(f2, "1"), rf(f2, "1")};
  r = ultimate_val(x1, pre);
  CHECK(r.value == Value::integer(0));
  CHECK(r.stable_from == 0);

  const RatPoly c{rf(f2, "t^3/(t+1)")};
  r = ultimate_val(c, pre);
  CHECK(r.value == Value::integer(3));
  CHECK(r.stable_from == 0);

  const RatPoly xa3{-pre.elems()[3], rf(f2, "1")};
  r = ultimate_val(xa3, pre);
  CHECK(r.stabilized);
  CHECK(r.value == Value::integer(16));
  CHECK(r.stable_from == 4);
  CHECK(r.trace[3].is_infinite());

  // Extending the prefix keeps the value; the onset cannot move later.
  auto f3 = FieldDesc::make(3);
  const auto shorter = partial_sum_sequence(rf(f3, "t/(t+1)"), 4);
  const auto longer = partial_sum_sequence(rf(f3, "t/(t+1)"), 6);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto q = random_ratpoly(f3, rng, rng.below(3), {});
    const auto a = ultimate_val(q, shorter);
    const auto b = ultimate_val(q, longer);
    REQUIRE(a.stabilized);
    REQUIRE(b.stabilized);
    CHECK(a.value == b.value);
    CHECK(b.stable_from <= a.stable_from);
  }
}

TEST_CASE("difference identity along prefixes") {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = FieldDesc::make(p);
    const auto b = rf(f, "t/(1+t)");
    const auto rep = classify_extension(b, 200);
    REQUIRE(rep.kind == ExtensionKind::Immediate);
    const auto pre = partial_sum_sequence(b, p == 2 ? 5 : 3);
    const auto& root = std::get<ImmediateEvidence>(rep.evidence).roots[limit_embedding(rep, pre)];
    for (std::size_t i = 0; i < pre.size(); ++i) {
      const auto diff = root - pre.elems()[i].expand(200);
      CHECK(diff.val() == SeriesValuation(pre.vP()[i]));
    }
  }
}

TEST_CASE("minimal degree check") {
  auto f3 = FieldDesc::make(3);
  const auto pre = partial_sum_sequence(rf(f3, "t"), 7);
  const std::vector<RatFunc> pool{rf(f3, "0"), rf(f3, "1"), rf(f3, "2"), rf(f3, "t"), rf(f3, "t+1")};
  const auto rep = min_degree_check(pre, pool, 60, 3);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.p_increasing);
  CHECK(rep.degrees.size() == 2);
  for (const auto& d : rep.degrees) CHECK(d.stabilized == d.samples);

  auto f2 = FieldDesc::make(2);
  const auto pre2 = partial_sum_sequence(rf(f2, "t"), 7);
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const RatPoly q{random_ratfunc(f2, rng, 3, 3), rf(f2, "1")};
    CHECK(ultimate_val(q, pre2).stabilized);
  }
  const auto rep2 = min_degree_check(pre2, default_coeff_pool(f2), 50, 4);
  CHECK(rep2.passed());
}

TEST_CASE("valuation table matches the limit embedding") {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = FieldDesc::make(p);
    const auto b = rf(f, "t");
    const auto pre = partial_sum_sequence(b, 6);
    const auto rep = classify_extension(b, 64);
    const std::size_t c = limit_embedding(rep, pre);
    CHECK(c == 0);
    Rng rng(derive_seed(61, p));
    for (const auto& row : pc_valuation_table(pre, 20, rng))
      CHECK(extension_valuation(row.q, rep)[c] == row.report.value);
  }
  auto f2 = FieldDesc::make(2);
  Rng rng(1);
  const auto table = pc_valuation_table(partial_sum_sequence(rf(f2, "t"), 6), 0, rng);
  CHECK(table[0].report.value == Value::integer(0));
  CHECK(table[1].report.value == Value::integer(1));
  CHECK(poly_literal(table[1].q) == "X");
}
