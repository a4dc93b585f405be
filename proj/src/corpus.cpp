#include "stretchkit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <thread>

#include "stretchkit/error.hpp"
#include "stretchkit/report.hpp"

namespace stretchkit {
namespace {

std::string list(const std::vector<Int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

}  // namespace

CorpusFilter CorpusFilter::parse(std::string_view text) {
  if (text == "all") return {FilterKind::All, 0};
  if (text == "stretched") return {FilterKind::Stretched, 0};
  if (text == "g_cm") return {FilterKind::GCohenMacaulay, 0};
  if (text == "not_g_cm") return {FilterKind::NotGCohenMacaulay, 0};
  if (text.starts_with("rank=")) {
    Int n = 0;
    auto digits = text.substr(5);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 0) {
      throw Error(ErrorKind::ParseError, "rank filter needs a nonnegative integer, got '" + std::string(text) + "'");
    }
    return {FilterKind::Rank, n};
  }
  throw Error(ErrorKind::ParseError, "unknown filter '" + std::string(text) + "'");
}

std::string CorpusFilter::to_string() const {
  switch (kind) {
    case FilterKind::All: return "all";
    case FilterKind::Stretched: return "stretched";
    case FilterKind::Rank: return "rank=" + std::to_string(rank);
    case FilterKind::GCohenMacaulay: return "g_cm";
    case FilterKind::NotGCohenMacaulay: return "not_g_cm";
  }
  return "all";
}

bool CorpusFilter::accepts(const ClassificationReport& report) const {
  const auto& p = report.profile;
  switch (kind) {
    case FilterKind::All: return true;
    case FilterKind::Stretched: return p.stretched;
    // Rank patterns only exist for stretched ideals.
    case FilterKind::Rank: return p.stretched && p.rank == rank;
    case FilterKind::GCohenMacaulay: return p.g_cohen_macaulay;
    case FilterKind::NotGCohenMacaulay: return !p.g_cohen_macaulay;
  }
  return true;
}

void CorpusQuery::validate() const {
  if (generator_bound < 1) throw Error(ErrorKind::ParseError, "generator bound must be positive");
  if (count_bound < 1) throw Error(ErrorKind::ParseError, "count bound must be positive");
  if (multiplicity_lo < 1) throw Error(ErrorKind::ParseError, "multiplicity range must be positive");
  if (multiplicity_hi < 0) throw Error(ErrorKind::ParseError, "multiplicity range must be positive");
  if (cap == 0) throw Error(ErrorKind::ParseError, "instance cap must be positive");
  if (filter.kind == FilterKind::Rank && filter.rank < 0) throw Error(ErrorKind::ParseError, "rank filter must be >= 0");
}

void for_each_semigroup(const CorpusQuery& query, const std::function<bool(const std::vector<Int>&)>& visit) {
  query.validate();
  const Int hi_mult = query.multiplicity_hi == 0 ? query.generator_bound
                                                 : std::min(query.multiplicity_hi, query.generator_bound);
  std::vector<Int> gens;
  bool stop = false;

  // `table` is the Apery table of <gens> modulo gens[0]; a candidate is
  // redundant iff it already lies in the semigroup.
  std::function<void(const std::vector<Int>&, Int)> descend = [&](const std::vector<Int>& table, Int g) {
    const Int e = gens.front();
    if (g == 1) {
      if (!visit(gens)) stop = true;
    }
    if (stop || static_cast<Int>(gens.size()) >= query.count_bound) return;
    for (Int next = gens.back() + 1; next <= query.generator_bound && !stop; ++next) {
      if (next >= table[static_cast<std::size_t>(next % e)]) continue;
      gens.push_back(next);
      descend(apery_table(gens, e), std::gcd(g, next));
      gens.pop_back();
    }
  };
  for (Int e = query.multiplicity_lo; e <= hi_mult && !stop; ++e) {
    gens.assign(1, e);
    const std::vector<Int> start{e};
    descend(apery_table(start, e), e);
  }
}

CorpusRow make_row(const ClassificationReport& report) {
  const auto& p = report.profile;
  return CorpusRow{report.semigroup, report.hilbert.e0, report.hilbert.e1_polynomial, p.k, p.r, p.n_nilp,
                   p.lambda_set,     p.stretched,       p.g_cohen_macaulay,           p.rank, report.hilbert.h_poly,
                   report.pattern};
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (error) std::rethrow_exception(error);
}

SearchResult run_search(const CorpusQuery& query) {
  SearchResult result;
  std::vector<std::vector<Int>> instances;
  for_each_semigroup(query, [&](const std::vector<Int>& gens) {
    if (instances.size() >= query.cap) {
      result.cap_exceeded = true;
      return false;
    }
    instances.push_back(gens);
    return true;
  });
  result.enumerated = instances.size();

  std::vector<std::optional<ClassificationReport>> reports(instances.size());
  parallel_for(instances.size(), query.workers, [&](std::size_t i) {
    auto base = make_semigroup(instances[i]);
    auto report = classify(SemigroupIdeal::maximal(base));
    if (report.has_failures()) throw Error(ErrorKind::TheoremViolation, to_json(report).dump());
    reports[i] = std::move(report);
  });

  for (auto& report : reports) {
    if (report->profile.stretched) ++result.stretched;
    if (!query.filter.accepts(*report)) continue;
    const auto& p = report->profile;
    ++result.histogram[{p.k, p.r, p.rank}];
    result.rows.push_back(make_row(*report));
  }
  return result;
}

void write_csv(std::ostream& os, const SearchResult& result) {
  os << kCsvHeader << '\n';
  for (const auto& row : result.rows) {
    os << '"' << row.semigroup << "\"," << row.e0 << ',' << row.e1 << ',' << row.k << ',' << row.r << ','
       << row.nilp << ",\"" << list(row.lambda_set) << "\"," << (row.stretched ? 1 : 0) << ',' << (row.g_cm ? 1 : 0)
       << ',' << row.rank << ",\"" << list(row.h_poly) << "\"\n";
  }
}

void print_summary(std::ostream& os, const SearchResult& result, const CorpusQuery& query) {
  os << "enumerated " << result.enumerated << " semigroups (generators <= " << query.generator_bound
     << ", at most " << query.count_bound << " generators)" << (result.cap_exceeded ? "  [cap reached, partial]" : "")
     << '\n';
  os << "stretched  " << result.stretched << '\n';
  os << "filter " << query.filter.to_string() << ": " << result.rows.size() << " rows\n";
  os << "     k      r   rank  count\n";
  for (const auto& [key, count] : result.histogram) {
    const auto& [k, r, rank] = key;
    char line[64];
    std::snprintf(line, sizeof line, "%6lld %6lld %6lld %6zu\n", static_cast<long long>(k), static_cast<long long>(r),
                  static_cast<long long>(rank), count);
    os << line;
  }
}

}  // namespace stretchkit
