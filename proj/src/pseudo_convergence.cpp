#include "cvf/pseudo_convergence.hpp"

#include <algorithm>

#include "cvf/error.hpp"

namespace cvf {
namespace {

Value val_or_inf(const RatFunc& x) { return x.is_zero() ? Value::infinity() : x.tadic_val(); }

std::vector<Value> consecutive_gamma(const std::vector<RatFunc>& elems) {
  std::vector<Value> g;
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) g.push_back(val_or_inf(elems[i + 1] - elems[i]));
  return g;
}

}  // namespace

std::string poly_literal(std::span<const RatFunc> q) {
  std::string out;
  for (std::size_t k = q.size(); k-- > 0;) {
    if (q[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = q[k].str();
    const bool unit = c == "1";
    if (k == 0) {
      out += c;
      continue;
    }
    if (!unit) out += "(" + c + ")*";
    out += k == 1 ? "X" : "X^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

PCPrefix PCPrefix::from_elements(std::vector<RatFunc> elems) {
  if (elems.empty()) throw Error(Errc::TooShort, "empty prefix");
  PCPrefix out;
  out.gamma_ = consecutive_gamma(elems);
  out.elems_ = std::move(elems);
  return out;
}

const RatFunc& PCPrefix::power(std::size_t i, std::size_t k) const {
  if (powers_.size() < elems_.size()) powers_.resize(elems_.size());
  auto& row = powers_[i];
  if (row.empty()) row.push_back(RatFunc::from_int(field(), 1));
  const std::size_t p = field()->p();
  while (row.size() <= k) {
    const std::size_t next = row.size();
    if (next % p == 0)
      row.push_back(row[next / p].frobenius());
    else
      row.push_back(row.back() * elems_[i]);
  }
  return row[k];
}

RatFunc PCPrefix::eval(std::span<const RatFunc> q, std::size_t i) const {
  RatFunc acc(field());
  for (std::size_t k = 0; k < q.size(); ++k)
    if (!q[k].is_zero()) acc = acc + q[k] * power(i, k);
  return acc;
}

bool is_pseudo_convergent(const PCPrefix& prefix) {
  const auto& a = prefix.elems();
  const std::size_t n = a.size();
  if (n < 3) throw Error(Errc::TooShort, "pseudo-convergence needs at least three elements");
  std::vector<std::vector<Value>> w(n, std::vector<Value>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w[i][j] = val_or_inf(a[j] - a[i]);

  bool triples = true;
  for (std::size_t i = 0; i < n && triples; ++i)
    for (std::size_t j = i + 1; j < n && triples; ++j)
      for (std::size_t k = j + 1; k < n && triples; ++k) triples = w[i][j] < w[j][k];

  bool chain = true;
  for (std::size_t i = 0; i + 2 < n; ++i) chain = chain && w[i][i + 1] < w[i + 1][i + 2];

  if (triples != chain)
    throw Error(Errc::InternalConsistency, "triple and consecutive pseudo-convergence checks disagree");
  return chain;
}

PCPrefix partial_sum_sequence(const RatFunc& b, std::size_t n) {
  if (b.is_zero()) throw Error(Errc::SolvableB, "b = 0 is x^p - x for x = 0");
  if (b.tadic_order() < 1)
    throw Error(Errc::ValuationNotPositive, "b = " + b.str() + " is not in the maximal ideal");
  if (membership_rational(b).solvable())
    throw Error(Errc::SolvableB, "b = " + b.str() + " is of the form x^p - x");

  PCPrefix out;
  out.b_ = b;
  RatFunc sum(b.field());
  RatFunc term = b;
  for (std::size_t i = 0; i <= n; ++i) {
    sum = sum - term;
    out.elems_.push_back(sum);
    term = term.frobenius();
    // a_{i+1} - a_i = -b^(p^(i+1))
    out.gamma_.push_back(term.tadic_val());
    out.vp_.push_back(val_or_inf(sum.frobenius() - sum - b));
  }
  return out;
}

Value c_set_value(const RatFunc& b, const RatFunc& x) { return val_or_inf(x.frobenius() - x - b); }

CSetProbe c_set_probe(const RatFunc& b, std::size_t depth, Rng& rng, std::size_t samples) {
  const FieldRef& f = b.field();
  CSetProbe out;
  if (!b.is_zero() && b.tadic_order() >= 1) {
    RatFunc sum(f);
    RatFunc term = b;
    for (std::size_t i = 0; i <= depth; ++i) {
      sum = sum - term;
      term = term.frobenius();
      out.partial_sum_values.push_back(c_set_value(b, sum));
      const Value v = out.partial_sum_values.back();
      out.maxima.push_back(out.maxima.empty() ? v : std::max(out.maxima.back(), v));
    }
  }
  for (std::size_t i = 0; i < samples; ++i) {
    out.samples.push_back(random_ratfunc(f, rng, 3, 2));
    out.sample_values.push_back(c_set_value(b, out.samples.back()));
  }
  if (auto mem = membership_rational(b); mem.solvable()) {
    out.solution = *mem.solution;
    out.samples.push_back(*mem.solution);
    out.sample_values.push_back(c_set_value(b, *mem.solution));
  }
  return out;
}

StabilizationReport ultimate_val(std::span<const RatFunc> q, const PCPrefix& prefix) {
  StabilizationReport rep;
  for (std::size_t i = 0; i < prefix.size(); ++i) rep.trace.push_back(val_or_inf(prefix.eval(q, i)));
  const auto& tr = rep.trace;
  if (tr.size() >= 2 && tr[tr.size() - 1] == tr[tr.size() - 2]) {
    rep.stabilized = true;
    rep.value = tr.back();
    std::size_t from = tr.size() - 1;
    while (from > 0 && tr[from - 1] == rep.value) --from;
    rep.stable_from = from;
  }
  return rep;
}

bool ultimately_increasing(const std::vector<Value>& trace, std::size_t tail) {
  if (trace.size() < tail || tail < 2) return false;
  for (std::size_t i = trace.size() - tail; i + 1 < trace.size(); ++i)
    if (!(trace[i] < trace[i + 1])) return false;
  return true;
}

std::vector<RatFunc> default_coeff_pool(const FieldRef& field) {
  std::vector<RatFunc> pool;
  for (std::uint32_t c = 0; c < std::min<std::uint32_t>(field->p(), 256); ++c)
    pool.push_back(RatFunc::from_int(field, c));
  pool.push_back(RatFunc::t(field));
  pool.push_back(RatFunc::t(field) + RatFunc::from_int(field, 1));
  pool.push_back(RatFunc::t(field).inverse());
  return pool;
}

RatPoly random_ratpoly(const FieldRef& field, Rng& rng, std::size_t degree, std::span<const RatFunc> pool) {
  const auto draw = [&] {
    if (pool.empty()) return random_ratfunc(field, rng, 2, 2);
    return pool[rng.below(pool.size())];
  };
  RatPoly q;
  for (std::size_t k = 0; k <= degree; ++k) q.push_back(draw());
  for (int tries = 0; q.back().is_zero(); ++tries) {
    if (tries > 1000) throw Error(Errc::InvalidField, "coefficient pool has no nonzero element");
    q.back() = draw();
  }
  return q;
}

CheckReport min_degree_check(const PCPrefix& prefix, std::span<const RatFunc> pool, std::size_t trials,
                             std::uint64_t seed) {
  if (!prefix.b()) throw Error(Errc::InvalidField, "min_degree_check needs a prefix generated from b");
  const FieldRef& f = prefix.field();
  const std::size_t p = f->p();
  CheckReport rep;
  for (std::size_t d = 1; d < p; ++d) {
    DegreeSummary sum{.degree = d};
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng(derive_seed(seed, d * trials + k));
      RatPoly q = random_ratpoly(f, rng, d, pool);
      auto st = ultimate_val(q, prefix);
      ++sum.samples;
      if (st.stabilized) ++sum.stabilized;
      if (ultimately_increasing(st.trace)) ++sum.increasing;
      RatPoly dq;
      for (std::size_t i = 1; i < q.size(); ++i) dq.push_back(q[i] * RatFunc::from_int(f, static_cast<std::int64_t>(i)));
      if (ultimate_val(dq, prefix).stabilized) ++sum.delta_prime_stable;
      if (!st.stabilized) rep.counterexamples.push_back({std::move(q), std::move(st)});
    }
    rep.degrees.push_back(sum);
  }
  RatPoly as_poly(p + 1, RatFunc(f));
  as_poly[0] = -*prefix.b();
  as_poly[1] = RatFunc::from_int(f, -1);
  as_poly[p] = RatFunc::from_int(f, 1);
  rep.p_trace = ultimate_val(as_poly, prefix).trace;
  rep.p_increasing = ultimately_increasing(rep.p_trace, rep.p_trace.size());
  return rep;
}

std::vector<TableRow> pc_valuation_table(const PCPrefix& prefix, std::size_t random_count, Rng& rng) {
  const FieldRef& f = prefix.field();
  const std::size_t p = f->p();
  std::vector<TableRow> rows;
  for (std::size_t k = 0; k < p; ++k) {
    RatPoly q(k + 1, RatFunc(f));
    q[k] = RatFunc::from_int(f, 1);
    rows.push_back({q, {}});
  }
  for (std::size_t i = 0; i < random_count; ++i)
    rows.push_back({random_ratpoly(f, rng, rng.below(p), {}), {}});
  for (auto& row : rows) {
    row.report = ultimate_val(row.q, prefix);
    if (!row.report.stabilized)
      throw Error(Errc::NotStabilized, "v(Q(a_i)) has not settled for Q = " + poly_literal(row.q));
  }
  return rows;
}

std::size_t limit_embedding(const ExtensionReport& report, const PCPrefix& prefix) {
  const auto& roots = std::get<ImmediateEvidence>(report.evidence).roots;
  const LaurentSeries last = prefix.elems().back().expand(report.prec);
  std::size_t best = 0;
  std::int64_t best_order = INT64_MIN;
  for (std::size_t c = 0; c < roots.size(); ++c) {
    const LaurentSeries d = roots[c] - last;
    const std::int64_t o = d.is_zero_to_precision() ? d.prec() : d.order();
    if (o > best_order) {
      best_order = o;
      best = c;
    }
  }
  return best;
}

}  // namespace cvf
