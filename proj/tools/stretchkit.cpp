// Command-line front end: analyze, family, search, verify-paper.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stretchkit/corpus.hpp"
#include "stretchkit/error.hpp"
#include "stretchkit/family.hpp"
#include "stretchkit/report.hpp"
#include "stretchkit/suite.hpp"

namespace sk = stretchkit;

namespace {

// Exit codes: 0 clean, 1 theorem or assertion failure, 2 bad input,
// 3 cap reached (partial results printed).
constexpr int kViolation = 1;
constexpr int kBadInput = 2;
constexpr int kCapped = 3;

int analyze(const std::string& gens, const std::string& ideal_text, bool json) {
  auto base = sk::make_semigroup(std::string_view(gens));
  const auto ideal = ideal_text.empty()
                         ? sk::SemigroupIdeal::maximal(base)
                         : sk::SemigroupIdeal::from_valuations(base, sk::parse_int_list(ideal_text));
  const auto report = sk::classify(ideal);
  if (json) {
    std::cout << sk::to_json(report).dump(2) << '\n';
  } else {
    sk::print_report(std::cout, report);
  }
  return report.has_failures() ? kViolation : 0;
}

int family(const std::string& source, bool json) {
  const auto params = sk::parse_params(source);
  const auto report = sk::verify_family(params);
  if (json) {
    std::cout << sk::to_json(report).dump(2) << '\n';
  } else {
    sk::print_family(std::cout, report);
  }
  if (report.passed()) return 0;
  return sk::validate(params).empty() ? kViolation : kBadInput;
}

int search(sk::CorpusQuery query, const std::string& filter, const std::string& csv_path) {
  query.filter = sk::CorpusFilter::parse(filter);
  const auto result = sk::run_search(query);
  sk::print_summary(std::cout, result, query);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw sk::Error(sk::ErrorKind::ParseError, "cannot write '" + csv_path + "'");
    sk::write_csv(out, result);
  } else {
    sk::write_csv(std::cout, result);
  }
  if (result.cap_exceeded) {
    std::cerr << "error: " << sk::to_string(sk::ErrorKind::CapExceeded) << ": stopped after " << query.cap
              << " semigroups; results are partial\n";
    return kCapped;
  }
  return 0;
}

int verify_paper(const sk::SuiteOptions& options) {
  bool ok = true;
  for (auto& result : sk::run_suite(options)) {
    sk::print_criterion(std::cout, result);
    std::cout.flush();
    ok = ok && result.pass;
  }
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << '\n';
  return ok ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions, reduction numbers and stretched ideals of numerical semigroup rings"};
  app.require_subcommand(1);

  std::string gens;
  std::string ideal_text;
  bool json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "classify an ideal (default: the maximal ideal)");
  analyze_cmd->add_option("gens", gens, "generators, e.g. 7,15,18,26,27")->required();
  analyze_cmd->add_option("--ideal", ideal_text, "ideal generators as valuations v1,v2,...");
  analyze_cmd->add_flag("--json", json, "print the report as JSON");

  std::string source;
  auto* family_cmd = app.add_subcommand("family", "verify the predictions for one family parameter tuple");
  family_cmd->add_option("params", source, "JSON file or inline {\"b\":2,\"e\":6,\"ell\":2,\"b_table\":{...}}")
      ->required();
  family_cmd->add_flag("--json", json, "print the report as JSON");

  sk::CorpusQuery query;
  std::string filter = "all";
  std::string csv_path;
  auto* search_cmd = app.add_subcommand("search", "enumerate semigroups and classify their maximal ideals");
  search_cmd->add_option("--gen-bound", query.generator_bound, "largest generator")->required();
  search_cmd->add_option("--count-bound", query.count_bound, "most generators")->required();
  search_cmd->add_option("--filter", filter, "all | stretched | rank=N | g_cm | not_g_cm");
  search_cmd->add_option("--csv", csv_path, "write rows here instead of stdout");
  search_cmd->add_option("--cap", query.cap, "stop after this many semigroups");
  search_cmd->add_option("--min-multiplicity", query.multiplicity_lo);
  search_cmd->add_option("--max-multiplicity", query.multiplicity_hi);
  search_cmd->add_option("--threads", query.workers, "0 = hardware concurrency");

  sk::SuiteOptions suite;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run acceptance criteria 1-6");
  verify_cmd->add_option("--seed", suite.seed, "seed for the random instances");
  verify_cmd->add_option("--threads", suite.workers, "0 = hardware concurrency");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return analyze(gens, ideal_text, json);
    if (*family_cmd) return family(source, json);
    if (*search_cmd) return search(query, filter, csv_path);
    if (*verify_cmd) return verify_paper(suite);
  } catch (const sk::Error& ex) {
    std::cerr << "error: " << sk::to_string(ex.kind()) << ": " << ex.what() << '\n';
    return ex.kind() == sk::ErrorKind::TheoremViolation || ex.kind() == sk::ErrorKind::OracleMismatch ? kViolation
                                                                                                       : kBadInput;
  }
  return 0;
}
