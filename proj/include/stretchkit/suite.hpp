#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stretchkit/corpus.hpp"

namespace stretchkit {

struct SuiteOptions {
  std::uint64_t seed = 0x5eed2024;
  /// Family tuples verified per (b, e) cell.
  std::size_t family_cap = 5000;
  std::size_t random_semigroups = 500;
  std::size_t random_triples = 1000;
  Int random_generator_bound = 60;
  Int random_generator_count = 5;
  Int corpus_generator_bound = 40;
  Int corpus_generator_count = 5;
  /// Corpus instance cap; reaching it fails the corpus criterion.
  std::size_t corpus_cap = 5'000'000;
  unsigned workers = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  /// At most a handful of failure descriptions.
  std::vector<std::string> failures;
  double seconds = 0;
};

CriterionResult check_first_example(const SuiteOptions& options);
CriterionResult check_second_example(const SuiteOptions& options);
CriterionResult check_family_examples(const SuiteOptions& options);
CriterionResult check_family_sweep(const SuiteOptions& options);
CriterionResult check_oracle_equivalence(const SuiteOptions& options);
CriterionResult check_corpus(const SuiteOptions& options);

/// Criteria 1..6 in order.
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "criterion N: PASS|FAIL  title  summary (t s)" plus indented failures.
void print_criterion(std::ostream& os, const CriterionResult& result);

}  // namespace stretchkit
