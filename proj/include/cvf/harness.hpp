#pragma once
// End-to-end drivers behind the command line tool.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/report_json.hpp"

namespace cvf {

struct FieldSpec {
  std::uint32_t p = 2;
  unsigned n = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  Base base = Base::Complete;
  std::int64_t prec = kDefaultPrecision;
  std::uint64_t seed = 0;

  // Throws InvalidField for prec < 8 or an invalid field.
  FieldRef make_field() const;
};

json::Json field_json(const FieldSpec& spec);

// Parses b in the base: a series literal for Complete, a rational one for
// Rational.
BaseElem parse_base_elem(const FieldSpec& spec, const FieldRef& field, const std::string& text);
ExtensionReport classify(const BaseElem& b, std::int64_t prec);

struct CriterionVerdict {
  FieldSpec spec;
  bool criterion_holds_on_sample = true;
  std::size_t sample_size = 0;
  std::optional<RatFunc> witness_b;
  std::optional<NonMembershipCertificate> certificate;
  std::optional<ExtensionReport> nonunique_extension;
};

// Complete base: `samples` random b with v(b) >= 1 must all be solvable.
// Rational base: scans b in M_v by total degree, then lexicographically, up
// to `samples` elements, stopping at the first b outside the image.
CriterionVerdict criterion_scan(const FieldSpec& spec, std::size_t samples);
json::Json verdict_json(const CriterionVerdict& v);

// Deterministic enumeration of b = num/den with v(b) >= 1, den monic with
// den(0) != 0, coprime, ordered by deg num + deg den, then lexicographically.
std::vector<RatFunc> enumerate_maximal_ideal(const FieldRef& field, std::size_t count);

struct DemoOptions {
  std::optional<std::size_t> depth;  // default: largest n with p^(n+1) v(b) < prec, within [2, 7]
  std::size_t trials = 50;
  std::size_t random_rows = 5;
};

struct DemoResult {
  json::Json report;
  bool ok = true;  // every internal cross-check held
};

DemoResult demo_report(const std::string& b_text, const FieldSpec& spec, const DemoOptions& opts = {});
void render_demo_text(const json::Json& report, std::ostream& out);

struct CorpusSummary {
  std::size_t count = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::vector<std::size_t> kinds = std::vector<std::size_t>(4, 0);  // by ExtensionKind
};

// Writes one JSON object per line to `out`, in index order.
CorpusSummary corpus_run(const FieldSpec& spec, std::size_t count, std::ostream& out, unsigned threads = 1);
json::Json summary_json(const CorpusSummary& s);

}  // namespace cvf
