#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "stretchkit/classifier.hpp"

namespace stretchkit {

enum class FilterKind { All, Stretched, Rank, GCohenMacaulay, NotGCohenMacaulay };

struct CorpusFilter {
  FilterKind kind = FilterKind::All;
  Int rank = 0;

  /// "all", "stretched", "rank=N", "g_cm", "not_g_cm".
  static CorpusFilter parse(std::string_view text);
  std::string to_string() const;
  bool accepts(const ClassificationReport& report) const;
};

struct CorpusQuery {
  Int generator_bound = 20;
  Int count_bound = 3;
  Int multiplicity_lo = 1;
  /// 0 means generator_bound.
  Int multiplicity_hi = 0;
  CorpusFilter filter;
  std::size_t cap = 100000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;

  /// Throws ParseError on non-positive bounds or a negative rank filter.
  void validate() const;
};

/// Visits minimal generating sets g1 < ... < gk (k <= count_bound, every
/// gi <= generator_bound, gcd 1, multiplicity in range) in lexicographic
/// order. Each numerical semigroup appears once, since the minimal
/// generating set is unique. The visitor returns false to stop.
void for_each_semigroup(const CorpusQuery& query, const std::function<bool(const std::vector<Int>&)>& visit);

struct CorpusRow {
  std::string semigroup;
  Int e0 = 0;
  Int e1 = 0;
  Int k = 0;
  Int r = 0;
  Int nilp = 0;
  std::vector<Int> lambda_set;
  bool stretched = false;
  bool g_cm = false;
  Int rank = 0;
  std::vector<Int> h_poly;
  std::string pattern;
};

CorpusRow make_row(const ClassificationReport& report);

struct SearchResult {
  std::vector<CorpusRow> rows;
  /// (k, r, rank) -> count over accepted rows.
  std::map<std::tuple<Int, Int, Int>, std::size_t> histogram;
  std::size_t enumerated = 0;
  std::size_t stretched = 0;
  bool cap_exceeded = false;
};

/// Classifies the maximal ideal of every enumerated semigroup on a worker
/// pool; rows come back in enumeration order regardless of worker count.
/// Throws TheoremViolation with the offending report serialized as JSON.
SearchResult run_search(const CorpusQuery& query);

/// Runs `task(i)` for i in [0, count) on `workers` threads; the first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task);

inline constexpr const char* kCsvHeader = "semigroup,e0,e1,k,r,nilp,lambda,stretched,g_cm,rank,h_poly";

void write_csv(std::ostream& os, const SearchResult& result);
void print_summary(std::ostream& os, const SearchResult& result, const CorpusQuery& query);

}  // namespace stretchkit
