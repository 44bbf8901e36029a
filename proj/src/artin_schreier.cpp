#include "cvf/artin_schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "cvf/error.hpp"

namespace cvf {
namespace {

// Embedding searches and root lists are enumerated one constant at a time.
constexpr std::uint32_t kMaxEnumeratedRoots = 1u << 20;
constexpr std::uint32_t kMaxImmediateP = 256;

void check_enumerable(std::uint32_t p, std::uint32_t cap, const char* what) {
  if (p > cap) throw Error(Errc::InvalidField, std::string(what) + ": p too large to enumerate");
}

bool provably_distinct(const SeriesValuation& a, const SeriesValuation& b) {
  const auto* va = std::get_if<Value>(&a);
  const auto* vb = std::get_if<Value>(&b);
  if (va && vb) return *va != *vb;
  if (va) return *va < Value::integer(std::get<BelowPrecision>(b).bound);
  if (vb) return *vb < Value::integer(std::get<BelowPrecision>(a).bound);
  return false;
}

Value known_value(const SeriesValuation& v, const char* what) {
  if (const auto* x = std::get_if<Value>(&v)) return *x;
  throw Error(Errc::PrecisionExhausted, std::string(what) + " is zero to precision " +
                                            std::to_string(std::get<BelowPrecision>(v).bound));
}

// Q(X + y) for Q given low to high, by Horner's rule.
template <class T>
std::vector<T> taylor_shift(std::span<const T> q, const T& y, const T& zero) {
  std::vector<T> out;
  for (std::size_t k = q.size(); k-- > 0;) {
    // out <- out * (X + y) + q[k]
    std::vector<T> next(out.size() + 1, zero);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] = next[i + 1] + out[i];
      next[i] = next[i] + out[i] * y;
    }
    next[0] = next[0] + q[k];
    out = std::move(next);
  }
  return out;
}

// Reduces modulo X^p - X - r, using X^p = X + r.
template <class T>
void reduce_mod_as(std::vector<T>& q, std::uint32_t p, const T& r, const T& zero) {
  for (std::size_t k = q.size(); k-- > p;) {
    const T c = q[k];
    q[k] = zero;
    q[k - p + 1] = q[k - p + 1] + c;
    q[k - p] = q[k - p] + c * r;
  }
  if (q.size() > p) q.resize(p, zero);
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

RamifiedEvidence ramified_evidence(std::int64_t m, std::uint32_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  // i * m + j * p = 1 with 0 < i < p.
  std::int64_t i = 1;
  while (positive_mod(i * m, pp) != 1) ++i;
  const std::int64_t j = (1 - i * m) / pp;
  return {m, Value::fraction(m, pp), i, j};
}

LaurentSeries eval_series_poly(std::span<const LaurentSeries> poly, const LaurentSeries& x) {
  LaurentSeries acc = poly.back();
  for (std::size_t k = poly.size() - 1; k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

std::string power_literal(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "a";
  return "a^" + std::to_string(k);
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::optional<Distinguisher> find_distinguisher(const std::vector<LaurentSeries>& roots, std::size_t i,
                                                std::size_t j, std::int64_t prec) {
  const std::size_t p = roots.size();
  for (std::size_t k = 0; k < p; ++k) {
    const auto wi = roots[i].pow(k).val();
    const auto wj = roots[j].pow(k).val();
    if (provably_distinct(wi, wj)) return Distinguisher{i, j, power_literal(k), wi, wj};
  }
  for (std::size_t c = 0; c < p; ++c)
    for (std::int64_t depth = 1; depth <= prec; ++depth) {
      // The truncation is an exact element of the base.
      const RatFunc cut = RatFunc::from_truncation(roots[c].truncated(std::min(depth, roots[c].prec())));
      const LaurentSeries r = cut.expand(prec);
      const auto wi = (roots[i] - r).val();
      const auto wj = (roots[j] - r).val();
      if (provably_distinct(wi, wj)) return Distinguisher{i, j, "a - (" + cut.str() + ")", wi, wj};
    }
  return std::nullopt;
}

// Value of sum q_i a'^i where a' has value w and the minimum is attained once.
std::vector<Value> min_over_terms(const std::vector<SeriesValuation>& vals, const Value& w) {
  std::optional<Value> best;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (const auto* v = std::get_if<Value>(&vals[i])) {
      if (v->is_infinite()) continue;
      const Value term = *v + static_cast<std::int64_t>(i) * w;
      if (!best || term < *best) best = term;
    }
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (const auto* bp = std::get_if<BelowPrecision>(&vals[i])) {
      const Value lower = Value::integer(bp->bound) + static_cast<std::int64_t>(i) * w;
      if (!best || lower <= *best)
        throw Error(Errc::PrecisionExhausted, "coefficient known only to precision " +
                                                  std::to_string(bp->bound));
    }
  return {best ? *best : Value::infinity()};
}

}  // namespace

std::string_view base_name(Base b) noexcept { return b == Base::Complete ? "complete" : "rational"; }

std::string_view kind_name(ExtensionKind k) noexcept {
  switch (k) {
    case ExtensionKind::Split: return "Split";
    case ExtensionKind::Ramified: return "Ramified";
    case ExtensionKind::Residual: return "Residual";
    case ExtensionKind::Immediate: return "Immediate";
  }
  return "?";
}

std::string literal(const BaseElem& x) {
  return std::visit([](const auto& v) { return v.str(); }, x);
}

std::vector<LaurentSeries> as_solve_complete(const LaurentSeries& b) {
  if (!at_least(b.val(), 1))
    throw Error(Errc::ValuationNotPositive, "b = " + b.str() + " is not in the maximal ideal");
  const FieldRef& f = b.field();
  check_enumerable(f->p(), kMaxEnumeratedRoots, "as_solve_complete");
  const std::int64_t prec = b.prec();
  LaurentSeries x = LaurentSeries::zero(f, prec);
  // Successive differences are p-th powers of the previous ones, so the
  // valuation of the step grows geometrically.
  for (std::int64_t iter = 0;; ++iter) {
    if (iter > prec + 64) throw Error(Errc::PrecisionExhausted, "Frobenius iteration did not settle");
    LaurentSeries next = x.frobenius() - b;
    const bool settled = at_least((next - x).val(), prec);
    x = std::move(next);
    if (settled) break;
  }
  std::vector<LaurentSeries> roots;
  roots.reserve(f->p());
  for (std::uint32_t c = 0; c < f->p(); ++c)
    roots.push_back(x + LaurentSeries::constant(FqElem::from_int(f, c), prec));
  return roots;
}

LaurentSeries hensel_lift(std::span<const LaurentSeries> poly, const FqElem& alpha) {
  if (poly.empty()) throw Error(Errc::NotASimpleResidualRoot, "zero polynomial");
  const FieldRef& f = alpha.field();
  std::int64_t prec = poly.front().prec();
  std::vector<FqElem> residual;
  for (const auto& c : poly) {
    if (!at_least(c.val(), 0))
      throw Error(Errc::NonIntegralCoefficients, "coefficient " + c.str() + " has negative valuation");
    prec = std::min(prec, c.prec());
    residual.push_back(c.coeff(0));
  }
  const FqPoly rp = FqPoly::from_coeffs(f, residual);
  if (!rp.eval(alpha).is_zero() || rp.derivative().eval(alpha).is_zero())
    throw Error(Errc::NotASimpleResidualRoot, alpha.str() + " is not a simple root of " + rp.str());

  std::vector<LaurentSeries> deriv;
  for (std::size_t i = 1; i < poly.size(); ++i)
    deriv.push_back(poly[i].scaled(FqElem::from_int(f, static_cast<std::int64_t>(i))));

  LaurentSeries x = LaurentSeries::constant(alpha, prec);
  for (int iter = 0; iter < 64; ++iter) {
    const LaurentSeries px = eval_series_poly(poly, x);
    if (at_least(px.val(), prec)) return x;
    x = x - px / eval_series_poly(deriv, x);
  }
  throw Error(Errc::PrecisionExhausted, "Newton iteration did not converge");
}

Reduction<LaurentSeries> as_reduce(const LaurentSeries& b) {
  const FieldRef& f = b.field();
  const auto p = static_cast<std::int64_t>(f->p());
  const std::int64_t prec = b.prec();
  const std::int64_t v0 = b.is_zero_to_precision() ? 0 : b.order();
  const std::int64_t limit = std::abs(v0) + std::max<std::int64_t>(prec, 0);
  Reduction<LaurentSeries> out{b, LaurentSeries::zero(f, std::max<std::int64_t>(prec, 1)), 0};
  for (;;) {
    LaurentSeries& cur = out.reduced;
    if (cur.is_zero_to_precision()) {
      if (cur.prec() >= 1) break;
      throw Error(Errc::PrecisionExhausted, "reduction ran out of known coefficients");
    }
    const std::int64_t m = cur.order();
    if (m > 0) break;
    FqElem coef(f);
    std::int64_t expo = 0;
    if (m < 0) {
      if (m % p != 0) break;
      coef = cur.leading().pth_root();
      expo = m / p;
    } else {
      const auto sol = as_solve_residue(cur.leading());
      if (!sol) break;
      coef = sol->particular;
    }
    if (++out.steps > limit) throw Error(Errc::PrecisionExhausted, "reduction step bound exceeded");
    // u is exact; give it enough precision that u^p - u loses nothing.
    const LaurentSeries u =
        LaurentSeries::monomial(coef, expo, std::max<std::int64_t>(prec, 0) + std::abs(m) + 1);
    cur = cur - (u.frobenius() - u);
    out.shift = out.shift + u;
  }
  return out;
}

Reduction<RatFunc> as_reduce(const RatFunc& b) {
  const FieldRef& f = b.field();
  const auto p = static_cast<std::int64_t>(f->p());
  Reduction<RatFunc> out{b, RatFunc(f), 0};
  for (;;) {
    RatFunc& cur = out.reduced;
    if (cur.is_zero()) break;
    const std::int64_t m = cur.tadic_order();
    if (m > 0) break;
    RatFunc u(f);
    if (m < 0) {
      if (m % p != 0) break;
      u = RatFunc::monomial(cur.tadic_leading().pth_root(), m / p);
    } else {
      const auto sol = as_solve_residue(cur.tadic_leading());
      if (!sol) break;
      u = RatFunc::constant(sol->particular);
    }
    ++out.steps;
    cur = cur - (u.frobenius() - u);
    out.shift = out.shift + u;
  }
  return out;
}

ExtensionReport classify_extension(const LaurentSeries& b) {
  const FieldRef& f = b.field();
  auto red = as_reduce(b);
  ExtensionReport rep{.kind = ExtensionKind::Split,
                      .base = Base::Complete,
                      .p = f->p(),
                      .prec = b.prec(),
                      .reduced_b = red.reduced,
                      .shift = red.shift,
                      .reduction_steps = red.steps,
                      .evidence = SplitEvidence{}};
  const LaurentSeries& r = red.reduced;
  if (r.is_zero_to_precision() || r.order() > 0) {
    rep.g = static_cast<int>(f->p());
    rep.split_flag = true;
    SplitEvidence ev;
    for (auto& x : as_solve_complete(r)) ev.roots.emplace_back(x + red.shift);
    rep.evidence = std::move(ev);
  } else if (r.order() < 0) {
    rep.kind = ExtensionKind::Ramified;
    rep.e = static_cast<int>(f->p());
    rep.evidence = ramified_evidence(r.order(), f->p());
  } else {
    rep.kind = ExtensionKind::Residual;
    rep.f = static_cast<int>(f->p());
    rep.evidence = ResidualEvidence{r.leading(), r.leading().trace_to_prime()};
  }
  return rep;
}

ExtensionReport classify_extension(const RatFunc& b, std::int64_t prec) {
  const FieldRef& f = b.field();
  const std::uint32_t p = f->p();
  auto red = as_reduce(b);
  ExtensionReport rep{.kind = ExtensionKind::Split,
                      .base = Base::Rational,
                      .p = p,
                      .prec = prec,
                      .reduced_b = red.reduced,
                      .shift = red.shift,
                      .reduction_steps = red.steps,
                      .evidence = SplitEvidence{}};
  const RatFunc& r = red.reduced;
  const auto make_split = [&](std::vector<RatFunc> roots) {
    rep.g = static_cast<int>(p);
    rep.split_flag = true;
    SplitEvidence ev;
    for (auto& x : roots) ev.roots.emplace_back(std::move(x));
    rep.evidence = std::move(ev);
  };
  if (r.is_zero()) {
    check_enumerable(p, kMaxEnumeratedRoots, "classify_extension");
    std::vector<RatFunc> roots;
    for (std::uint32_t c = 0; c < p; ++c) roots.push_back(red.shift + RatFunc::from_int(f, c));
    make_split(std::move(roots));
    return rep;
  }
  const std::int64_t m = r.tadic_order();
  if (m < 0) {
    rep.kind = ExtensionKind::Ramified;
    rep.e = static_cast<int>(p);
    rep.evidence = ramified_evidence(m, p);
    return rep;
  }
  if (m == 0) {
    rep.kind = ExtensionKind::Residual;
    rep.f = static_cast<int>(p);
    rep.evidence = ResidualEvidence{r.tadic_leading(), r.tadic_leading().trace_to_prime()};
    return rep;
  }
  Membership mem = membership_rational(b);
  if (mem.solvable()) {
    make_split(mem.solutions());
    return rep;
  }

  check_enumerable(p, kMaxImmediateP, "immediate classification");
  rep.kind = ExtensionKind::Immediate;
  ImmediateEvidence ev{.certificate = *mem.certificate};
  const LaurentSeries shift = red.shift.expand(prec);
  for (auto& x : as_solve_complete(r.expand(prec))) ev.roots.push_back(x + shift);
  for (const auto& x : ev.roots) ev.w_a.push_back(x.val());

  DisjointSets classes(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      if (auto d = find_distinguisher(ev.roots, i, j, prec))
        ev.distinguishers.push_back(std::move(*d));
      else
        classes.unite(i, j);
    }
  std::size_t g = 0;
  for (std::size_t i = 0; i < p; ++i) g += classes.find(i) == i;
  ev.distinct_valuations = g;
  rep.g = static_cast<int>(g);
  if (p % g != 0 || p / g != 1)
    throw Error(Errc::InternalConsistency,
                "immediate extension with " + std::to_string(g) + " valuations would carry defect");
  rep.d = static_cast<int>(p / g);
  rep.evidence = std::move(ev);
  return rep;
}

std::vector<Value> extension_valuation(std::span<const LaurentSeries> q, const ExtensionReport& report) {
  if (report.kind == ExtensionKind::Split)
    throw Error(Errc::SplitExtensionHasNoCanonicalValuation, "the extension splits");
  if (q.empty()) {
    const std::size_t count = report.kind == ExtensionKind::Immediate ? report.p : 1;
    return std::vector<Value>(count, Value::infinity());
  }
  const FieldRef& f = q.front().field();

  if (report.kind == ExtensionKind::Immediate) {
    const auto& roots = std::get<ImmediateEvidence>(report.evidence).roots;
    std::vector<Value> out;
    for (const auto& root : roots) {
      const std::vector<LaurentSeries> coeffs(q.begin(), q.end());
      out.push_back(known_value(eval_series_poly(coeffs, root).val(), "Q(a)"));
    }
    return out;
  }

  std::int64_t prec = report.prec;
  for (const auto& c : q) prec = std::min(prec, c.prec());
  const auto as_series = [&](const BaseElem& x) {
    if (const auto* s = std::get_if<LaurentSeries>(&x)) return *s;
    return std::get<RatFunc>(x).expand(std::max<std::int64_t>(prec, 1));
  };
  const LaurentSeries r = as_series(report.reduced_b);
  const LaurentSeries y = as_series(report.shift);
  const LaurentSeries zero = LaurentSeries::zero(f, std::max<std::int64_t>(prec, 1) + 64);
  std::vector<LaurentSeries> qt = taylor_shift<LaurentSeries>(q, y, zero);
  reduce_mod_as(qt, report.p, r, zero);
  std::vector<SeriesValuation> vals;
  for (const auto& c : qt) vals.push_back(c.val());
  const Value w = report.kind == ExtensionKind::Ramified
                      ? std::get<RamifiedEvidence>(report.evidence).w_a
                      : Value::integer(0);
  return min_over_terms(vals, w);
}

std::vector<Value> extension_valuation(std::span<const RatFunc> q, const ExtensionReport& report) {
  if (report.kind == ExtensionKind::Split)
    throw Error(Errc::SplitExtensionHasNoCanonicalValuation, "the extension splits");
  if (report.base == Base::Complete || report.kind == ExtensionKind::Immediate) {
    std::vector<LaurentSeries> qs;
    for (const auto& c : q) qs.push_back(c.expand(report.prec));
    return extension_valuation(std::span<const LaurentSeries>(qs), report);
  }
  if (q.empty()) return {Value::infinity()};
  const FieldRef& f = q.front().field();
  const RatFunc zero(f);
  std::vector<RatFunc> qt = taylor_shift<RatFunc>(q, std::get<RatFunc>(report.shift), zero);
  reduce_mod_as(qt, report.p, std::get<RatFunc>(report.reduced_b), zero);
  std::vector<SeriesValuation> vals;
  for (const auto& c : qt) vals.push_back(c.is_zero() ? Value::infinity() : c.tadic_val());
  const Value w = report.kind == ExtensionKind::Ramified
                      ? std::get<RamifiedEvidence>(report.evidence).w_a
                      : Value::integer(0);
  return min_over_terms(vals, w);
}

}  // namespace cvf
