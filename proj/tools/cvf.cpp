// Command line front end: cvf <solve|classify|member|pcs|criterion|demo|corpus>.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cvf/error.hpp"
#include "cvf/harness.hpp"
#include "cvf/literal.hpp"
#include "cvf/pseudo_convergence.hpp"
#include "cvf/random.hpp"
#include "cvf/report_json.hpp"

namespace {

using cvf::json::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw cvf::Error(cvf::Errc::ParseError, "bad modulus coefficient '" + item + "'");
    }
  }
  return out;
}

void print_text_report(const cvf::ExtensionReport& rep, std::ostream& out) {
  const Json j = cvf::json::report(rep);
  out << "kind: " << j["kind"].get<std::string>() << "\n";
  out << "(e,f,g,d) = (" << rep.e << "," << rep.f << "," << rep.g << "," << rep.d << ")\n";
  out << "reduced b: " << j["reduced_b"].get<std::string>() << "\n";
  out << "shift: " << j["shift"].get<std::string>() << "\n";
  out << "evidence: " << j["evidence"].dump() << "\n";
}

int report_violation(const Json& diagnostics) {
  std::cerr << diagnostics.dump() << "\n";
  return kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Schreier extensions, p-henselianity witnesses and pseudo-convergent sequences", "cvf"};
  app.require_subcommand(1);
  app.fallthrough();

  cvf::FieldSpec spec;
  std::string base = "complete";
  std::string modulus;
  bool as_json = false;
  app.add_option("--p", spec.p, "Characteristic (prime < 2^31)")->capture_default_str();
  app.add_option("--n", spec.n, "Degree of F_q over F_p (1..8)")->capture_default_str();
  app.add_option("--modulus", modulus, "Monic modulus of F_q over F_p, coefficients low to high, comma separated");
  app.add_option("--prec", spec.prec, "Series precision (>= 8)")->envname("CVF_PREC")->capture_default_str();
  app.add_option("--seed", spec.seed, "Master seed")->capture_default_str();
  app.add_option("--base", base, "Base field: complete F_q((t)) or rational F_q(t)")
      ->check(CLI::IsMember({"complete", "rational"}))
      ->capture_default_str();
  app.add_flag("--json", as_json, "Emit JSON");

  std::string b_text;
  std::size_t depth = 0;
  std::size_t samples = 100;
  std::size_t count = 100;
  std::size_t trials = 50;
  std::size_t random_rows = 5;
  unsigned threads = 1;
  std::string out_path = "corpus.jsonl";

  auto* solve = app.add_subcommand("solve", "Roots of X^p - X - b in F_q[[t]] for v(b) >= 1");
  solve->add_option("b", b_text, "Element literal")->required();
  auto* classify = app.add_subcommand("classify", "Classify the extension defined by X^p - X - b");
  classify->add_option("b", b_text, "Element literal")->required();
  auto* member = app.add_subcommand("member", "Decide whether b = x^p - x has a solution in F_q(t)");
  member->add_option("b", b_text, "Rational function literal")->required();
  auto* pcs = app.add_subcommand("pcs", "Pseudo-convergent sequence of partial sums for b in F_q(t)");
  pcs->add_option("b", b_text, "Rational function literal")->required();
  pcs->add_option("--depth", depth, "Last index of the prefix")->default_val(4);
  auto* criterion = app.add_subcommand("criterion", "Scan the maximal ideal for elements outside x^p - x");
  criterion->add_option("--samples", samples, "Number of elements to test")->capture_default_str();
  auto* demo = app.add_subcommand("demo", "Full report for one element");
  demo->add_option("b", b_text, "Element literal")->required();
  auto* demo_depth = demo->add_option("--depth", depth, "Last index of the prefix");
  demo->add_option("--trials", trials, "Sampled polynomials per degree")->capture_default_str();
  demo->add_option("--random", random_rows, "Random rows in the valuation table")->capture_default_str();
  auto* corpus = app.add_subcommand("corpus", "Classify random elements and check the invariants");
  corpus->add_option("--count", count, "Number of elements")->capture_default_str();
  corpus->add_option("--out", out_path, "JSONL output path, - for stdout")->capture_default_str();
  corpus->add_option("--threads", threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    spec.base = base == "rational" ? cvf::Base::Rational : cvf::Base::Complete;
    if (!modulus.empty()) spec.modulus = parse_modulus(modulus);
    const cvf::FieldRef field = spec.make_field();

    if (solve->parsed()) {
      const auto b = cvf::parse_series(field, b_text, spec.prec);
      const auto roots = cvf::as_solve_complete(b);
      Json j;
      j["b"] = b.str();
      Json r = Json::array();
      for (const auto& x : roots) r.push_back(x.str());
      j["roots"] = std::move(r);
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& x : roots) std::cout << x.str() << "\n";
      }
      return kExitOk;
    }

    if (classify->parsed()) {
      const auto rep = cvf::classify(cvf::parse_base_elem(spec, field, b_text), spec.prec);
      if (as_json)
        std::cout << cvf::json::report(rep).dump() << "\n";
      else
        print_text_report(rep, std::cout);
      if (static_cast<std::int64_t>(rep.e) * rep.f * rep.g * rep.d != spec.p)
        return report_violation(cvf::json::report(rep));
      return kExitOk;
    }

    if (member->parsed()) {
      const auto b = cvf::parse_rational(field, b_text);
      const auto m = cvf::membership_rational(b);
      const Json j = cvf::json::membership(m);
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else if (m.solvable()) {
        std::cout << "solvable: x = " << m.solution->str() << " (plus constants of F_p)\n";
      } else {
        std::cout << "not solvable: " << j["certificate"].dump() << "\n";
      }
      return kExitOk;
    }

    if (pcs->parsed()) {
      const auto b = cvf::parse_rational(field, b_text);
      const auto prefix = cvf::partial_sum_sequence(b, depth);
      cvf::Rng rng(cvf::derive_seed(spec.seed, 1));
      const auto probe = cvf::c_set_probe(b, depth, rng);
      Json j;
      j["b"] = b.str();
      j["pseudo_convergent"] = cvf::is_pseudo_convergent(prefix);
      j["prefix"] = cvf::json::prefix(prefix);
      j["c_set"] = cvf::json::c_set(probe);
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "pseudo-convergent: " << (j["pseudo_convergent"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& row : j["prefix"])
          std::cout << row["index"] << "  gamma=" << row["gamma"].dump() << "  v(P)=" << row["vP"].dump() << "  "
                    << row["element_literal"].get<std::string>() << "\n";
        std::cout << "C-set maxima: " << j["c_set"]["maxima"].dump() << "\n";
      }
      return j["pseudo_convergent"].get<bool>() ? kExitOk : report_violation(j);
    }

    if (criterion->parsed()) {
      const auto v = cvf::criterion_scan(spec, samples);
      const Json j = cvf::verdict_json(v);
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "criterion holds on " << v.sample_size << " sampled elements: "
                  << (v.criterion_holds_on_sample ? "yes" : "no") << "\n";
        if (v.witness_b) {
          std::cout << "witness b = " << v.witness_b->str() << ", certificate "
                    << cvf::json::certificate(*v.certificate).dump() << "\n";
          print_text_report(*v.nonunique_extension, std::cout);
        }
      }
      const bool coupled = v.witness_b.has_value() == v.nonunique_extension.has_value();
      const bool complete_ok = spec.base == cvf::Base::Rational || v.criterion_holds_on_sample;
      const bool nonunique_ok = !v.nonunique_extension || v.nonunique_extension->g > 1;
      return coupled && complete_ok && nonunique_ok ? kExitOk : report_violation(j);
    }

    if (demo->parsed()) {
      cvf::DemoOptions opts;
      if (demo_depth->count() > 0) opts.depth = depth;
      opts.trials = trials;
      opts.random_rows = random_rows;
      const auto res = cvf::demo_report(b_text, spec, opts);
      if (as_json)
        std::cout << res.report.dump() << "\n";
      else
        cvf::render_demo_text(res.report, std::cout);
      return res.ok ? kExitOk : report_violation(res.report);
    }

    if (corpus->parsed()) {
      cvf::CorpusSummary s;
      if (out_path == "-") {
        s = cvf::corpus_run(spec, count, std::cout, threads);
      } else {
        std::ofstream out(out_path);
        if (!out) throw cvf::Error(cvf::Errc::InvalidField, "cannot open " + out_path);
        s = cvf::corpus_run(spec, count, out, threads);
      }
      const Json j = cvf::summary_json(s);
      if (out_path != "-") {
        if (as_json) {
          std::cout << j.dump() << "\n";
        } else {
          std::cout << s.count << " elements, " << s.violations << " invariant violations, " << s.errors
                    << " errors; kinds " << j["kinds"].dump() << "\n";
        }
      }
      return s.violations == 0 && s.errors == 0 ? kExitOk : report_violation(j);
    }
  } catch (const cvf::Error& e) {
    std::cerr << "cvf: " << e.what() << "\n";
    return e.code() == cvf::Errc::InternalConsistency ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cvf: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
