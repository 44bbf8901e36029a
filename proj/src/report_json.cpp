#include "cvf/report_json.hpp"

namespace cvf::json {
namespace {

constexpr std::uint32_t kMaxListedSolutions = 16;

Json literals(const auto& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(literal(x));
  return out;
}

Json evidence(const SplitEvidence& e) {
  Json out;
  out["split"] = true;
  out["roots"] = literals(e.roots);
  return out;
}

Json evidence(const RamifiedEvidence& e) {
  Json out;
  out["reduced_val"] = e.reduced_val;
  out["generator_value"] = value(e.w_a);
  out["uniformizer"] = {{"generator_exp", e.uniformizer_a_exp}, {"t_exp", e.uniformizer_t_exp}};
  return out;
}

Json evidence(const ResidualEvidence& e) {
  Json out;
  out["residue"] = e.residue.str();
  out["trace"] = e.trace.str();
  return out;
}

Json evidence(const ImmediateEvidence& e) {
  Json out;
  Json w = Json::array();
  for (const auto& v : e.w_a) w.push_back(series_value(v));
  out["embedding_valuations"] = std::move(w);
  out["distinct_valuations"] = e.distinct_valuations;
  Json ds = Json::array();
  for (const auto& d : e.distinguishers) {
    Json j;
    j["embeddings"] = {d.i, d.j};
    j["element"] = d.element;
    j["values"] = {series_value(d.w_i), series_value(d.w_j)};
    ds.push_back(std::move(j));
  }
  out["distinguishers"] = std::move(ds);
  out["roots"] = literals(e.roots);
  out["certificate"] = certificate(e.certificate);
  return out;
}

}  // namespace

Json value(const Value& v) {
  if (v.is_infinite()) return "inf";
  if (v.is_integer()) return v.num();
  return v.str();
}

Json series_value(const SeriesValuation& v) {
  if (const auto* x = std::get_if<Value>(&v)) return value(*x);
  Json out;
  out["below_precision"] = std::get<BelowPrecision>(v).bound;
  return out;
}

Json values(const std::vector<Value>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(value(v));
  return out;
}

Json certificate(const NonMembershipCertificate& c) {
  Json out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PoleCertificate>) {
          out["type"] = "pole";
          out["place"] = x.place.str();
          out["order"] = x.order;
          out["irreducible"] = x.place_is_irreducible;
        } else if constexpr (std::is_same_v<T, PrincipalPartCertificate>) {
          out["type"] = "principal_part";
          out["denominator_root"] = x.denominator_root.str();
        } else if constexpr (std::is_same_v<T, DegreeCertificate>) {
          out["type"] = "degree";
          out["degree"] = x.degree;
          out["remainder"] = x.remainder.str();
        } else {
          out["type"] = "residue_trace";
          out["constant"] = x.constant.str();
          out["trace"] = x.trace.str();
        }
      },
      c);
  return out;
}

Json membership(const Membership& m) {
  Json out;
  out["solvable"] = m.solvable();
  if (m.solvable()) {
    out["solution"] = m.solution->str();
    if (m.solution->field()->p() <= kMaxListedSolutions) out["solutions"] = literals(m.solutions());
  } else {
    out["certificate"] = certificate(*m.certificate);
  }
  return out;
}

Json report(const ExtensionReport& r) {
  Json out;
  out["kind"] = std::string(kind_name(r.kind));
  out["e"] = r.e;
  out["f"] = r.f;
  out["g"] = r.g;
  out["d"] = r.d;
  out["reduced_b"] = literal(r.reduced_b);
  out["shift"] = literal(r.shift);
  Json ev = std::visit([](const auto& e) { return evidence(e); }, r.evidence);
  ev["reduction_steps"] = r.reduction_steps;
  out["evidence"] = std::move(ev);
  return out;
}

Json stabilization(const StabilizationReport& s) {
  Json out;
  out["stabilized"] = s.stabilized;
  if (s.stabilized) {
    out["value"] = value(s.value);
    out["stable_from"] = s.stable_from;
  }
  out["trace"] = values(s.trace);
  return out;
}

Json prefix(const PCPrefix& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row;
    row["index"] = i;
    row["element_literal"] = p.elems()[i].str();
    row["gamma"] = i < p.gamma().size() ? value(p.gamma()[i]) : Json(nullptr);
    row["vP"] = i < p.vP().size() ? value(p.vP()[i]) : Json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

Json c_set(const CSetProbe& c) {
  Json out;
  out["partial_sum_values"] = values(c.partial_sum_values);
  out["maxima"] = values(c.maxima);
  out["sample_values"] = values(c.sample_values);
  out["solution"] = c.solution ? Json(c.solution->str()) : Json(nullptr);
  return out;
}

Json check_report(const CheckReport& c) {
  Json out;
  out["passed"] = c.passed();
  Json ds = Json::array();
  for (const auto& d : c.degrees) {
    Json j;
    j["degree"] = d.degree;
    j["samples"] = d.samples;
    j["stabilized"] = d.stabilized;
    j["increasing"] = d.increasing;
    j["derivative_stabilized"] = d.delta_prime_stable;
    ds.push_back(std::move(j));
  }
  out["degrees"] = std::move(ds);
  out["p_increasing"] = c.p_increasing;
  out["p_trace"] = values(c.p_trace);
  Json ce = Json::array();
  for (const auto& x : c.counterexamples) {
    Json j;
    j["polynomial"] = poly_literal(x.q);
    j["trace"] = values(x.report.trace);
    ce.push_back(std::move(j));
  }
  out["counterexamples"] = std::move(ce);
  return out;
}

Json table(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["polynomial"] = poly_literal(r.q);
    j["value"] = value(r.report.value);
    j["stable_from"] = r.report.stable_from;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace cvf::json
