#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/error.hpp"
#include "cvf/literal.hpp"
#include "cvf/random.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cvf;

namespace {

LaurentSeries ls(const FieldRef& f, const char* text, std::int64_t prec = 64) {
  return parse_series(f, text, prec);
}
RatFunc rf(const FieldRef& f, const char* text) { return parse_rational(f, text); }

LaurentSeries as_value(const LaurentSeries& x, const LaurentSeries& b) { return x.frobenius() - x - b; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalConsistency;
}

}  // namespace

TEST_CASE("solve in the complete field: examples") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  const auto r2 = as_solve_complete(ls(f2, "t", 16));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == ls(f2, "t + t^2 + t^4 + t^8 + O(t^16)"));
  CHECK(r2[1] == ls(f2, "1 + t + t^2 + t^4 + t^8 + O(t^16)"));

  const auto r0 = as_solve_complete(LaurentSeries::zero(f3, 16));
  REQUIRE(r0.size() == 3);
  for (std::int64_t c = 0; c < 3; ++c)
    CHECK(r0[c] == LaurentSeries::constant(FqElem::from_int(f3, c), 16));

  const auto r3 = as_solve_complete(ls(f3, "t", 10));
  CHECK(r3[0] == ls(f3, "2*t + 2*t^3 + 2*t^9 + O(t^10)"));
  CHECK(r3[1] == ls(f3, "1 + 2*t + 2*t^3 + 2*t^9 + O(t^10)"));

  CHECK(code_of([&] { as_solve_complete(ls(f2, "1")); }) == Errc::ValuationNotPositive);
  CHECK(code_of([&] { as_solve_complete(ls(f3, "t^-1")); }) == Errc::ValuationNotPositive);
}

TEST_CASE("solve in the complete field: sampled") {
  for (auto f : {FieldDesc::make(2), FieldDesc::make(3), FieldDesc::make(5), FieldDesc::make(2, 2),
                 FieldDesc::make(3, 2)}) {
    Rng rng(derive_seed(11, f->p() * 10 + f->n()));
    for (int i = 0; i < 40; ++i) {
      const auto b = random_series(f, rng, rng.range(1, 5), 48);
      const auto roots = as_solve_complete(b);
      REQUIRE(roots.size() == f->p());
      for (std::size_t c = 0; c < roots.size(); ++c) {
        CHECK(at_least(as_value(roots[c], b).val(), 48));
        const auto diff = roots[c] - roots[0];
        CHECK(diff == LaurentSeries::constant(FqElem::from_int(f, static_cast<std::int64_t>(c)), 48));
      }
      CHECK(roots[0] == oracle::closed_form_root(b));
    }
  }
}

TEST_CASE("hensel lift") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  const auto one2 = LaurentSeries::constant(FqElem::from_int(f2, 1), 32);
  std::vector<LaurentSeries> p1{ls(f2, "t", 32), one2, one2};
  CHECK(hensel_lift(p1, FqElem::from_int(f2, 0)) == as_solve_complete(ls(f2, "t", 32))[0]);

  const auto c = ls(f3, "2 + t + t^5", 20);
  std::vector<LaurentSeries> lin{-c, LaurentSeries::constant(FqElem::from_int(f3, 1), 20)};
  CHECK(hensel_lift(lin, c.residue()) == c);

  std::vector<LaurentSeries> cubic{ls(f3, "-t", 30), ls(f3, "-1", 30), LaurentSeries::zero(f3, 30),
                                   ls(f3, "1", 30)};
  const auto root = hensel_lift(cubic, FqElem::from_int(f3, 1));
  CHECK(root.residue() == FqElem::from_int(f3, 1));
  CHECK(at_least(as_value(root, ls(f3, "t", 30)).val(), 30));

  std::vector<LaurentSeries> no_root{ls(f3, "1 + t", 30), ls(f3, "-1", 30), LaurentSeries::zero(f3, 30),
                                    ls(f3, "1", 30)};
  CHECK(code_of([&] { hensel_lift(no_root, FqElem::from_int(f3, 0)); }) == Errc::NotASimpleResidualRoot);
  std::vector<LaurentSeries> sq{LaurentSeries::zero(f3, 10), LaurentSeries::zero(f3, 10), ls(f3, "1", 10)};
  CHECK(code_of([&] { hensel_lift(sq, FqElem::from_int(f3, 0)); }) == Errc::NotASimpleResidualRoot);
  std::vector<LaurentSeries> bad{ls(f3, "t^-1", 10), ls(f3, "1", 10)};
  CHECK(code_of([&] { hensel_lift(bad, FqElem::from_int(f3, 0)); }) == Errc::NonIntegralCoefficients);

  // Agreement with the Frobenius iteration on random b.
  for (auto f : {f2, f3, FieldDesc::make(5)}) {
    Rng rng(derive_seed(12, f->p()));
    for (int i = 0; i < 20; ++i) {
      const auto b = random_series(f, rng, rng.range(1, 4), 40);
      const auto one = LaurentSeries::constant(FqElem::from_int(f, 1), 40);
      std::vector<LaurentSeries> poly(f->p() + 1, LaurentSeries::zero(f, 40));
      poly[0] = -b;
      poly[1] = -one;
      poly[f->p()] = one;
      CHECK(hensel_lift(poly, FqElem::from_int(f, 0)) == as_solve_complete(b)[0]);
    }
  }
}

TEST_CASE("reduction examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FieldDesc::make(p);
    const auto b = LaurentSeries::monomial(FqElem::from_int(f, 1), -static_cast<std::int64_t>(p), 32);
    const auto red = as_reduce(b);
    CHECK(red.reduced == ls(f, "t^-1", 32));
    CHECK(red.shift.truncated(32) == ls(f, "t^-1", 32));
    CHECK(red.steps == 1);
    const auto rr = as_reduce(RatFunc::monomial(FqElem::from_int(f, 1), -static_cast<std::int64_t>(p)));
    CHECK(rr.reduced == rf(f, "1/t"));
    CHECK(rr.shift == rf(f, "1/t"));
  }
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  auto t = as_reduce(ls(f2, "t"));
  CHECK(t.reduced == ls(f2, "t"));
  CHECK(t.shift.is_zero_to_precision());
  CHECK(t.steps == 0);
  auto m2 = as_reduce(ls(f3, "t^-2"));
  CHECK(m2.reduced == ls(f3, "t^-2"));
  CHECK(m2.steps == 0);
  // A residue of trace zero is absorbed; nonzero trace stays.
  CHECK(as_reduce(ls(f2, "1")).reduced == ls(f2, "1"));
  auto f4 = FieldDesc::make(2, 2);
  const auto trace0 = as_reduce(rf(f4, "1"));
  CHECK(trace0.reduced.is_zero());
  CHECK(code_of([&] { as_reduce(ls(f2, "t^-4 + O(t^-3)")); }) == Errc::PrecisionExhausted);
}

TEST_CASE("reduction normal form: sampled") {
  for (auto f : {FieldDesc::make(2), FieldDesc::make(3), FieldDesc::make(2, 2), FieldDesc::make(3, 2)}) {
    const auto p = static_cast<std::int64_t>(f->p());
    Rng rng(derive_seed(13, f->p() * 10 + f->n()));
    for (int i = 0; i < 60; ++i) {
      const auto b = random_series(f, rng, rng.range(-9, 3), 40);
      const auto red = as_reduce(b);
      CHECK(red.reduced == b - (red.shift.frobenius() - red.shift));
      const auto& r = red.reduced;
      if (!r.is_zero_to_precision() && r.order() <= 0) {
        if (r.order() < 0) CHECK(r.order() % p != 0);
        if (r.order() == 0) CHECK(!r.leading().trace_to_prime().is_zero());
      }
      const auto x = random_ratfunc(f, rng, 3, 3);
      if (x.is_zero()) continue;
      const auto rr = as_reduce(x);
      CHECK(rr.reduced == x - (rr.shift.frobenius() - rr.shift));
    }
  }
}

TEST_CASE("classification examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FieldDesc::make(p);
    const int pi = static_cast<int>(p);
    const auto split = classify_extension(ls(f, "t"));
    CHECK(split.kind == ExtensionKind::Split);
    CHECK(split.split_flag);
    CHECK(std::get<SplitEvidence>(split.evidence).roots.size() == p);

    const auto ram = classify_extension(ls(f, "t^-1"));
    CHECK(ram.kind == ExtensionKind::Ramified);
    CHECK((ram.e == pi && ram.f == 1 && ram.g == 1 && ram.d == 1));

    const auto tp = classify_extension(LaurentSeries::monomial(FqElem::from_int(f, 1), -pi, 64));
    CHECK(tp.kind == ExtensionKind::Ramified);
    CHECK(tp.reduction_steps == 1);
    CHECK(std::get<RamifiedEvidence>(tp.evidence).reduced_val == -1);

    const auto imm = classify_extension(rf(f, "t"), 64);
    CHECK(imm.kind == ExtensionKind::Immediate);
    CHECK((imm.e == 1 && imm.f == 1 && imm.g == pi && imm.d == 1));
    const auto& ev = std::get<ImmediateEvidence>(imm.evidence);
    CHECK(ev.w_a[0] == SeriesValuation(Value::integer(1)));
    for (std::size_t c = 1; c < p; ++c) CHECK(ev.w_a[c] == SeriesValuation(Value::integer(0)));
    CHECK(ev.distinguishers.size() == p * (p - 1) / 2);

    for (const auto* rep : {&split, &ram, &tp, &imm}) CHECK(rep->e * rep->f * rep->g * rep->d == pi);
  }
  auto f2 = FieldDesc::make(2);
  const auto res = classify_extension(ls(f2, "1"));
  CHECK(res.kind == ExtensionKind::Residual);
  CHECK((res.e == 1 && res.f == 2 && res.g == 1 && res.d == 1));
  const auto imm2 = std::get<ImmediateEvidence>(classify_extension(rf(f2, "t")).evidence);
  CHECK(imm2.distinguishers.at(0).element == "a");

  // Rational base: solvable b splits with exact roots.
  const auto y = rf(f2, "1/(t+1)");
  const auto sp = classify_extension(y.frobenius() - y + rf(f2, "t^3/(t+1)^2") - rf(f2, "t^3/(t+1)^2"));
  CHECK(sp.kind == ExtensionKind::Split);
  for (const auto& r : std::get<SplitEvidence>(sp.evidence).roots) {
    const auto& x = std::get<RatFunc>(r);
    CHECK(x.frobenius() - x == y.frobenius() - y);
  }
}

TEST_CASE("extension valuation examples") {
  auto f2 = FieldDesc::make(2);
  auto f3 = FieldDesc::make(3);
  const std::vector<LaurentSeries> x2{LaurentSeries::zero(f2, 64), ls(f2, "1")};
  CHECK(extension_valuation(x2, classify_extension(ls(f2, "t^-1"))) ==
        std::vector<Value>{Value::fraction(-1, 2)});
  const std::vector<LaurentSeries> x3{LaurentSeries::zero(f3, 64), ls(f3, "1")};
  CHECK(extension_valuation(x3, classify_extension(ls(f3, "t^-1"))) ==
        std::vector<Value>{Value::fraction(-1, 3)});
  CHECK(extension_valuation(x2, classify_extension(ls(f2, "1"))) == std::vector<Value>{Value::integer(0)});
  const std::vector<RatFunc> xr{RatFunc(f2), RatFunc::from_int(f2, 1)};
  CHECK(extension_valuation(xr, classify_extension(rf(f2, "t"))) ==
        (std::vector<Value>{Value::integer(1), Value::integer(0)}));
  CHECK(code_of([&] { extension_valuation(x2, classify_extension(ls(f2, "t"))); }) ==
        Errc::SplitExtensionHasNoCanonicalValuation);

  // With a nontrivial shift: b = t^-4 + t^-3 over F_2 reduces to pole order 3
  // and a = t^-2 + a', so v(a) = -2.
  const auto shifted = classify_extension(ls(f2, "t^-4 + t^-3"));
  CHECK(shifted.kind == ExtensionKind::Ramified);
  CHECK(extension_valuation(x2, shifted) == std::vector<Value>{Value::integer(-2)});
  // Degree >= p is reduced by a^p = a + b: a^2 + a = b.
  const std::vector<LaurentSeries> qq{LaurentSeries::zero(f2, 64), ls(f2, "1"), ls(f2, "1")};
  CHECK(extension_valuation(qq, shifted) == std::vector<Value>{Value::integer(-4)});

  // Rational ramified and residual reports agree with the complete ones.
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto b = random_ratfunc_with_val(f3, rng, rng.range(-4, 0), 3, 2);
    const auto rep_r = classify_extension(b, 64);
    const auto rep_c = classify_extension(b.expand(64));
    CHECK(rep_r.kind == rep_c.kind);
    if (rep_r.kind == ExtensionKind::Split || rep_r.kind == ExtensionKind::Immediate) continue;
    std::vector<RatFunc> q;
    for (int k = 0; k < 3; ++k) q.push_back(random_ratfunc(f3, rng, 2, 2));
    if (q.back().is_zero()) q.back() = RatFunc::from_int(f3, 1);
    std::vector<LaurentSeries> qs;
    for (const auto& c : q) qs.push_back(c.expand(64));
    CHECK(extension_valuation(q, rep_r) == extension_valuation(qs, rep_c));
  }
}

TEST_CASE("difference identity on immediate instances") {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = FieldDesc::make(p);
    Rng rng(derive_seed(31, p));
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
      const auto b = random_ratfunc_with_val(f, rng, rng.range(1, 3), 3, 2);
      const auto rep = classify_extension(b, 64);
      if (rep.kind != ExtensionKind::Immediate) continue;
      const auto& roots = std::get<ImmediateEvidence>(rep.evidence).roots;
      for (int k = 0; k < 5; ++k) {
        const auto d = random_ratfunc(f, rng, 3, 2);
        const auto pd = (d.frobenius() - d - b).expand(64);
        for (const auto& a : roots) {
          const auto diff = a - d.expand(64);
          const auto w = diff.val();
          if (!std::holds_alternative<Value>(w)) continue;
          const Value wv = std::get<Value>(w);
          const auto lhs = pd.val();
          if (wv < Value::integer(0)) {
            CHECK(lhs == SeriesValuation(static_cast<std::int64_t>(p) * wv));
            ++checked;
          } else if (Value::integer(0) < wv) {
            CHECK(lhs == SeriesValuation(wv));
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 20);
  }
}
