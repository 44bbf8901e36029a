#include "cvf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "cvf/error.hpp"
#include "cvf/literal.hpp"
#include "cvf/pseudo_convergence.hpp"
#include "cvf/random.hpp"

namespace cvf {
namespace {

using json::Json;

constexpr std::uint64_t kIndexCap = std::uint64_t{1} << 62;

std::uint64_t field_order_capped(const FieldRef& f) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f->n(); ++i) {
    if (q > kIndexCap / f->p()) return kIndexCap;
    q *= f->p();
  }
  return q;
}

FqElem elem_from_index(const FieldRef& f, std::uint64_t k) {
  std::vector<std::uint32_t> c(f->n(), 0);
  for (unsigned i = 0; i < f->n(); ++i) {
    c[i] = static_cast<std::uint32_t>(k % f->p());
    k /= f->p();
  }
  return FqElem::from_coords(f, c);
}

// Visits digit tuples in lexicographic order, most significant first; the
// first digit ranges over [first_lo, q) and the rest over [0, q), except the
// last which ranges over [last_lo, q). Stops when visit returns false.
bool odometer(std::size_t len, std::uint64_t q, std::uint64_t first_lo, std::uint64_t last_lo,
              const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  if (len == 0) return visit({});
  std::vector<std::uint64_t> lo(len, 0);
  lo.front() = first_lo;
  lo.back() = std::max(lo.back(), last_lo);
  std::vector<std::uint64_t> d = lo;
  if (std::any_of(lo.begin(), lo.end(), [&](std::uint64_t x) { return x >= q; })) return true;
  for (;;) {
    if (!visit(d)) return false;
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++d[i] < q) break;
      d[i] = lo[i];
      if (i == 0) return true;
    }
  }
}

std::string stratum_name(std::size_t s) {
  static const char* names[] = {"negative_prime_to_p", "negative_divisible_by_p", "zero", "positive"};
  return names[s];
}

bool same_shape(const ExtensionReport& a, const ExtensionReport& b) {
  return a.kind == b.kind && a.e == b.e && a.f == b.f && a.g == b.g && a.d == b.d;
}

BaseElem add_as_image(const BaseElem& b, Rng& rng, std::int64_t prec) {
  if (const auto* s = std::get_if<LaurentSeries>(&b)) {
    const auto y = random_series(s->field(), rng, rng.range(-4, 3), prec);
    return *s + (y.frobenius() - y);
  }
  const auto& r = std::get<RatFunc>(b);
  const auto y = random_ratfunc(r.field(), rng, 3, 2);
  return r + (y.frobenius() - y);
}

BaseElem scale(const BaseElem& b, const FqElem& c) {
  return std::visit([&](const auto& x) { return BaseElem(x.scaled(c)); }, b);
}

std::string value_list(const Json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

}  // namespace

FieldRef FieldSpec::make_field() const {
  if (prec < 8) throw Error(Errc::InvalidField, "precision must be at least 8");
  return FieldDesc::make(p, n, modulus);
}

Json field_json(const FieldSpec& spec) {
  Json out;
  out["p"] = spec.p;
  out["n"] = spec.n;
  out["field"] = spec.make_field()->describe();
  out["base"] = std::string(base_name(spec.base));
  out["prec"] = spec.prec;
  out["seed"] = spec.seed;
  return out;
}

BaseElem parse_base_elem(const FieldSpec& spec, const FieldRef& field, const std::string& text) {
  if (spec.base == Base::Complete) return parse_series(field, text, spec.prec);
  return parse_rational(field, text);
}

ExtensionReport classify(const BaseElem& b, std::int64_t prec) {
  if (const auto* s = std::get_if<LaurentSeries>(&b)) return classify_extension(*s);
  return classify_extension(std::get<RatFunc>(b), prec);
}

std::vector<RatFunc> enumerate_maximal_ideal(const FieldRef& f, std::size_t count) {
  std::vector<RatFunc> out;
  if (count == 0) return out;
  const std::uint64_t q = field_order_capped(f);
  const FqElem one = FqElem::from_int(f, 1);
  for (std::size_t total = 1;; ++total) {
    for (std::size_t e = 0; e < total; ++e) {
      const std::size_t d = total - e;
      // Numerator c_d t^d + ... + c_1 t, digits (c_d, ..., c_1).
      const bool more = odometer(d, q, 1, 0, [&](const std::vector<std::uint64_t>& nd) {
        std::vector<FqElem> nc(d + 1, FqElem(f));
        for (std::size_t i = 0; i < d; ++i) nc[d - i] = elem_from_index(f, nd[i]);
        const FqPoly num = FqPoly::from_coeffs(f, nc);
        // Monic denominator t^e + c_{e-1} t^(e-1) + ... + c_0 with c_0 != 0.
        return odometer(e, q, 0, 1, [&](const std::vector<std::uint64_t>& dd) {
          std::vector<FqElem> dc(e + 1, one);
          for (std::size_t i = 0; i < e; ++i) dc[e - 1 - i] = elem_from_index(f, dd[i]);
          const FqPoly den = FqPoly::from_coeffs(f, dc);
          if (!FqPoly::gcd(num, den).is_one()) return true;
          out.emplace_back(num, den);
          return out.size() < count;
        });
      });
      if (!more) return out;
    }
  }
}

CriterionVerdict criterion_scan(const FieldSpec& spec, std::size_t samples) {
  const FieldRef f = spec.make_field();
  CriterionVerdict v;
  v.spec = spec;
  if (spec.base == Base::Complete) {
    Rng rng(spec.seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto b = random_series(f, rng, rng.range(1, 4), spec.prec);
      const auto roots = as_solve_complete(b);
      ++v.sample_size;
      for (std::size_t c = 0; c < roots.size(); ++c) {
        const bool root_ok = at_least((roots[c].frobenius() - roots[c] - b).val(), spec.prec);
        const bool coset_ok = roots[c] - roots[0] ==
                              LaurentSeries::constant(FqElem::from_int(f, static_cast<std::int64_t>(c)), spec.prec);
        if (!root_ok || !coset_ok) v.criterion_holds_on_sample = false;
      }
    }
    return v;
  }
  for (const auto& b : enumerate_maximal_ideal(f, samples)) {
    ++v.sample_size;
    auto mem = membership_rational(b);
    if (mem.solvable()) continue;
    v.criterion_holds_on_sample = false;
    v.witness_b = b;
    v.certificate = *mem.certificate;
    v.nonunique_extension = classify_extension(b, spec.prec);
    break;
  }
  return v;
}

Json verdict_json(const CriterionVerdict& v) {
  Json out;
  out["field"] = field_json(v.spec);
  out["criterion_holds_on_sample"] = v.criterion_holds_on_sample;
  out["sample_size"] = v.sample_size;
  out["witness_b"] = v.witness_b ? Json(v.witness_b->str()) : Json(nullptr);
  out["certificate"] = v.certificate ? json::certificate(*v.certificate) : Json(nullptr);
  out["nonunique_extension"] = v.nonunique_extension ? json::report(*v.nonunique_extension) : Json(nullptr);
  return out;
}

DemoResult demo_report(const std::string& b_text, const FieldSpec& spec, const DemoOptions& opts) {
  const FieldRef f = spec.make_field();
  const BaseElem b = parse_base_elem(spec, f, b_text);
  const std::uint32_t p = f->p();
  DemoResult res;
  Json& out = res.report;
  out["field"] = field_json(spec);
  out["b"] = literal(b);

  const ExtensionReport rep = classify(b, spec.prec);
  std::optional<Membership> mem;
  if (const auto* r = std::get_if<RatFunc>(&b)) {
    mem = membership_rational(*r);
    out["membership"] = json::membership(*mem);
  } else {
    Json m;
    m["solvable"] = rep.kind == ExtensionKind::Split;
    m["to_precision"] = spec.prec;
    out["membership"] = std::move(m);
  }
  out["classification"] = json::report(rep);
  const bool fundamental = static_cast<std::int64_t>(rep.e) * rep.f * rep.g * rep.d == p;
  out["fundamental_equality"] = fundamental;
  res.ok = res.ok && fundamental;
  if (rep.kind != ExtensionKind::Split) {
    const std::vector<RatFunc> x{RatFunc(f), RatFunc::from_int(f, 1)};
    out["generator_valuation"] = json::values(extension_valuation(x, rep));
  }

  const auto* rb = std::get_if<RatFunc>(&b);
  if (!rb || !mem || mem->solvable() || rb->is_zero() || rb->tadic_order() < 1) return res;

  const std::int64_t vb = rb->tadic_order();
  std::size_t depth = 2;
  if (opts.depth) {
    depth = *opts.depth;
  } else {
    std::int64_t reach = static_cast<std::int64_t>(p) * p * vb;  // p^(n+1) v(b) for n = 1
    for (std::size_t n = 1; n <= 7; ++n, reach *= p) {
      if (reach >= spec.prec) break;
      depth = std::max<std::size_t>(n, 2);
    }
  }
  const PCPrefix prefix = partial_sum_sequence(*rb, depth);
  const bool pc = is_pseudo_convergent(prefix);
  res.ok = res.ok && pc;
  out["depth"] = depth;
  out["pseudo_convergent"] = pc;
  out["prefix"] = json::prefix(prefix);

  Rng rng(derive_seed(spec.seed, 1));
  const CSetProbe probe = c_set_probe(*rb, depth, rng);
  bool growing = true;
  for (std::size_t i = 1; i < probe.maxima.size(); ++i) growing = growing && probe.maxima[i - 1] < probe.maxima[i];
  res.ok = res.ok && growing;
  out["c_set_maxima"] = json::values(probe.maxima);
  out["c_set_maxima_increasing"] = growing;

  const auto pool = default_coeff_pool(f);
  const CheckReport check = min_degree_check(prefix, pool, opts.trials, derive_seed(spec.seed, 2));
  res.ok = res.ok && check.passed();
  out["min_degree_check"] = json::check_report(check);

  Rng table_rng(derive_seed(spec.seed, 3));
  const auto rows = pc_valuation_table(prefix, opts.random_rows, table_rng);
  const std::size_t limit = limit_embedding(rep, prefix);
  out["limit_embedding"] = limit;
  Json cmp = Json::array();
  for (const auto& row : rows) {
    const auto emb = extension_valuation(row.q, rep);
    const bool match = emb[limit] == row.report.value;
    res.ok = res.ok && match;
    Json j;
    j["polynomial"] = poly_literal(row.q);
    j["pc_value"] = json::value(row.report.value);
    j["stable_from"] = row.report.stable_from;
    j["embedding_values"] = json::values(emb);
    j["matches_limit_embedding"] = match;
    cmp.push_back(std::move(j));
  }
  out["valuation_table"] = std::move(cmp);
  out["checks_passed"] = res.ok;
  return res;
}

void render_demo_text(const Json& r, std::ostream& out) {
  const Json& fld = r["field"];
  out << "field: " << fld["field"].get<std::string>() << ", " << fld["base"].get<std::string>()
      << " base, precision " << fld["prec"] << "\n";
  out << "b = " << r["b"].get<std::string>() << "\n";
  const Json& mem = r["membership"];
  if (mem["solvable"].get<bool>()) {
    out << "membership: b = x^p - x is solvable";
    if (mem.contains("solution")) out << ", x = " << mem["solution"].get<std::string>();
    out << "\n";
  } else {
    out << "membership: not solvable";
    if (mem.contains("certificate")) out << ", certificate " << mem["certificate"].dump();
    out << "\n";
  }
  const Json& c = r["classification"];
  out << "classification: " << c["kind"].get<std::string>() << ", (e,f,g,d) = (" << c["e"] << "," << c["f"]
      << "," << c["g"] << "," << c["d"] << ")\n";
  out << "  reduced b = " << c["reduced_b"].get<std::string>() << ", shift = " << c["shift"].get<std::string>()
      << "\n";
  const Json& ev = c["evidence"];
  if (ev.contains("roots") && c["kind"] == "Split") out << "  roots: " << value_list(ev["roots"]) << "\n";
  if (ev.contains("embedding_valuations"))
    out << "  embedding valuations of a: " << value_list(ev["embedding_valuations"]) << "\n";
  if (ev.contains("distinguishers"))
    for (const auto& d : ev["distinguishers"])
      out << "  embeddings " << d["embeddings"][0] << " and " << d["embeddings"][1] << " differ on "
          << d["element"].get<std::string>() << ": " << value_list(d["values"]) << "\n";
  if (r.contains("generator_valuation"))
    out << "  valuation of a: " << value_list(r["generator_valuation"]) << "\n";
  if (!r.contains("prefix")) return;

  out << "pseudo-convergent prefix, n = " << r["depth"] << ": " << (r["pseudo_convergent"].get<bool>() ? "yes" : "no")
      << "\n";
  out << "  i  gamma  v(P(a_i))  a_i\n";
  for (const auto& row : r["prefix"])
    out << "  " << row["index"] << "  " << value_list(Json::array({row["gamma"]})) << "  "
        << value_list(Json::array({row["vP"]})) << "  " << row["element_literal"].get<std::string>() << "\n";
  out << "C-set maxima by depth: " << value_list(r["c_set_maxima"]) << "\n";
  const Json& m = r["min_degree_check"];
  out << "minimal degree check: " << (m["passed"].get<bool>() ? "passed" : "FAILED") << "\n";
  for (const auto& d : m["degrees"])
    out << "  degree " << d["degree"] << ": " << d["stabilized"] << "/" << d["samples"] << " stabilized\n";
  out << "  X^p - X - b along the prefix: " << value_list(m["p_trace"]) << "\n";
  out << "valuation table against embedding " << r["limit_embedding"] << ":\n";
  for (const auto& row : r["valuation_table"])
    out << "  " << row["polynomial"].get<std::string>() << ": " << value_list(Json::array({row["pc_value"]}))
        << " (embeddings " << value_list(row["embedding_values"]) << ")"
        << (row["matches_limit_embedding"].get<bool>() ? "" : "  MISMATCH") << "\n";
  out << "checks: " << (r["checks_passed"].get<bool>() ? "all passed" : "FAILED") << "\n";
}

CorpusSummary corpus_run(const FieldSpec& spec, std::size_t count, std::ostream& out, unsigned threads) {
  const FieldRef f = spec.make_field();
  const auto p = static_cast<std::int64_t>(f->p());
  struct Item {
    std::string line;
    bool violation = false;
    bool error = false;
    int kind = -1;
  };
  std::vector<Item> items(count);

  const auto run_one = [&](std::size_t idx) {
    Item& item = items[idx];
    Rng rng(derive_seed(spec.seed, idx));
    const std::size_t stratum = idx % 4;
    std::int64_t val = 0;
    switch (stratum) {
      case 0:
        do val = -rng.range(1, 9); while (val % p == 0);
        break;
      case 1: val = -p * rng.range(1, 3); break;
      case 2: val = 0; break;
      default: val = rng.range(1, 4); break;
    }
    BaseElem b = spec.base == Base::Complete ? BaseElem(random_series(f, rng, val, spec.prec))
                                             : BaseElem(random_ratfunc_with_val(f, rng, val, 3, 2));
    Json j;
    j["index"] = idx;
    j["stratum"] = stratum_name(stratum);
    j["b"] = literal(b);
    try {
      const ExtensionReport rep = classify(b, spec.prec);
      const bool fundamental = static_cast<std::int64_t>(rep.e) * rep.f * rep.g * rep.d == p;
      const ExtensionReport shifted = classify(add_as_image(b, rng, spec.prec), spec.prec);
      const FqElem c = FqElem::from_int(f, 1 + static_cast<std::int64_t>(rng.below(f->p() - 1)));
      const ExtensionReport scaled = classify(scale(b, c), spec.prec);
      const bool class_ok = same_shape(rep, shifted);
      const bool scale_ok = same_shape(rep, scaled);
      j["report"] = json::report(rep);
      j["fundamental_equality"] = fundamental;
      j["class_invariant"] = class_ok;
      j["scaling_invariant"] = scale_ok;
      item.kind = static_cast<int>(rep.kind);
      item.violation = !(fundamental && class_ok && scale_ok);
      j["ok"] = !item.violation;
    } catch (const Error& e) {
      item.error = true;
      j["error"] = e.what();
      j["ok"] = false;
    }
    item.line = j.dump();
  };

  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) run_one(i);
      });
    for (auto& t : pool) t.join();
  }

  CorpusSummary s;
  s.count = count;
  for (const auto& item : items) {
    out << item.line << '\n';
    s.violations += item.violation;
    s.errors += item.error;
    if (item.kind >= 0) ++s.kinds[static_cast<std::size_t>(item.kind)];
  }
  if (!out) throw Error(Errc::InvalidField, "failed to write corpus output");
  return s;
}

Json summary_json(const CorpusSummary& s) {
  Json out;
  out["count"] = s.count;
  out["violations"] = s.violations;
  out["errors"] = s.errors;
  Json kinds;
  for (std::size_t k = 0; k < 4; ++k) kinds[std::string(kind_name(static_cast<ExtensionKind>(k)))] = s.kinds[k];
  out["kinds"] = std::move(kinds);
  return out;
}

}  // namespace cvf
