#include "stretchkit/suite.hpp"

#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "stretchkit/error.hpp"
#include "stretchkit/family.hpp"

namespace stretchkit {
namespace {

constexpr std::size_t kMaxListedFailures = 8;

std::string show(const std::vector<Int>& values, char open = '[', char close = ']') {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << close;
  return os.str();
}

// Collects named expectations for one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < kMaxListedFailures) failures_.push_back(what);
  }
  template <typename T>
  void equal(const std::string& what, const T& expected, const T& actual) {
    expect(expected == actual, what);
  }
  void equal(const std::string& what, const std::vector<Int>& expected, const std::vector<Int>& actual) {
    expect(expected == actual, what + ": expected " + show(expected) + ", got " + show(actual));
  }
  void equal(const std::string& what, Int expected, Int actual) {
    expect(expected == actual, what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual));
  }
  void equal(const std::string& what, bool expected, bool actual) {
    expect(expected == actual,
           what + ": expected " + (expected ? "true" : "false") + ", got " + (actual ? "true" : "false"));
  }
  void fail(const std::string& what) { expect(false, what); }

  std::size_t checked() const { return checked_; }
  std::size_t failed() const { return failed_; }

  void finish(CriterionResult& out) const {
    out.pass = failed_ == 0;
    out.failures = failures_;
    if (failed_ > failures_.size()) {
      out.failures.push_back("... " + std::to_string(failed_ - failures_.size()) + " more");
    }
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

template <typename Body>
CriterionResult timed(int id, std::string title, Body body) {
  CriterionResult out;
  out.id = id;
  out.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const Error& ex) {
    out.pass = false;
    out.failures.push_back(std::string(to_string(ex.kind())) + ": " + ex.what());
  } catch (const std::exception& ex) {
    out.pass = false;
    out.failures.push_back(ex.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void check_linear_tail(Tally& tally, const SemigroupIdeal& m, Int from, Int to, Int constant) {
  const auto hf = hilbert_function(m, to);
  const Int e0 = m.min_valuation();
  for (Int n = from; n <= to; ++n) {
    tally.equal("HF(" + std::to_string(n) + ")", e0 * (n + 1) - constant, hf[static_cast<std::size_t>(n)]);
  }
}

}  // namespace

CriterionResult check_first_example(const SuiteOptions&) {
  return timed(1, "example <7,15,18,26,27>", [](CriterionResult& out) {
    Tally t;
    auto base = make_semigroup(std::string_view("7,15,18,26,27"));
    auto m = SemigroupIdeal::maximal(base);
    const auto report = classify(m);
    const auto& p = report.profile;
    t.equal("embedding dimension", Int{5}, base->embedding_dimension());
    t.equal("Q = (u^7)", Int{7}, p.q_valuation);
    t.equal("k", Int{3}, p.k);
    t.equal("r", Int{3}, p.r);
    check_linear_tail(t, m, 2, 12, 9);
    t.equal("e1", Int{9}, report.hilbert.e1_polynomial);
    t.equal("e1 = e0 + 2", report.hilbert.e0 + 2, report.hilbert.e1_polynomial);
    t.equal("G CM", true, p.g_cohen_macaulay);
    t.equal("stretched", true, p.stretched);
    t.equal("classification checks clean", false, report.has_failures());
    t.finish(out);
    out.summary = "k=r=" + std::to_string(p.r) + " e1=" + std::to_string(report.hilbert.e1_polynomial) +
                  " G " + (p.g_cohen_macaulay ? "CM" : "not CM") + ", " + std::to_string(t.checked()) + " checks";
  });
}

CriterionResult check_second_example(const SuiteOptions&) {
  return timed(2, "example <8,17,21,30,39,52>", [](CriterionResult& out) {
    Tally t;
    auto base = make_semigroup(std::string_view("8,17,21,30,39,52"));
    auto m = SemigroupIdeal::maximal(base);
    const auto report = classify(m);
    const auto& p = report.profile;
    const auto& hd = report.hilbert;
    t.equal("embedding dimension", Int{6}, base->embedding_dimension());
    t.equal("type", Int{3}, base->type());
    t.equal("Q = (u^8)", Int{8}, p.q_valuation);
    t.equal("k", Int{3}, p.k);
    t.equal("r", Int{4}, p.r);
    t.equal("lambda", std::vector<Int>{3}, p.lambda_set);
    check_linear_tail(t, m, 3, 12, 11);
    t.equal("e1", Int{11}, hd.e1_polynomial);
    t.equal("e1 = e0 + 3", hd.e0 + 3, hd.e1_polynomial);
    t.equal("G CM", false, p.g_cohen_macaulay);
    // Numerator l + (e0 - l - 2) z + z^2 + z^4 with e0 = 8, l = l(A/m) = 1.
    const Int l = p.colength;
    const std::vector<Int> numerator{l, hd.e0 - l - 2, 1, 0, 1};
    t.equal("l(A/m)", Int{1}, l);
    t.equal("h-polynomial", numerator, hd.h_poly);
    t.equal("h-polynomial = [1,5,1,0,1]", std::vector<Int>{1, 5, 1, 0, 1}, hd.h_poly);
    t.equal("sum of h = e0", hd.e0, std::accumulate(hd.h_poly.begin(), hd.h_poly.end(), Int{0}));
    t.equal("pattern", std::string("rank4.I"), report.pattern);
    t.equal("classification checks clean", false, report.has_failures());
    t.finish(out);
    out.summary = "k=" + std::to_string(p.k) + " r=" + std::to_string(p.r) + " lambda=" +
                  show(p.lambda_set, '{', '}') + " e1=" + std::to_string(hd.e1_polynomial) + " h=" + show(hd.h_poly) +
                  ", " + std::to_string(t.checked()) + " checks";
  });
}

CriterionResult check_family_examples(const SuiteOptions&) {
  return timed(3, "family examples at e=6, b=2", [](CriterionResult& out) {
    struct Case {
      Int ell;
      std::map<Int, Int> table;
      std::vector<Int> stated_generators;
      Int k, r;
      std::vector<Int> lambda;
      Int constant;
      bool cm;
    };
    const std::vector<Case> cases{
        {2, {{3, 4}, {4, 5}, {5, 6}}, {6, 13, 27, 34, 41}, 2, 2, {}, 6, true},
        {2, {{3, 5}, {4, 5}, {5, 6}}, {6, 13, 33, 34, 41}, 2, 3, {2}, 7, false},
        {3, {{4, 5}, {5, 6}}, {6, 13, 34, 41}, 3, 3, {}, 8, true},
        {2, {{3, 5}, {4, 6}, {5, 6}}, {6, 13, 33, 40, 41}, 2, 4, {2, 3}, 8, false},
        {3, {{4, 6}, {5, 6}}, {6, 13, 40, 41}, 3, 4, {3}, 9, false},
        {2, {{3, 5}, {4, 6}, {5, 7}}, {6, 13, 33, 40, 47, 48}, 2, 5, {2, 3, 4}, 9, false},
    };
    Tally t;
    std::size_t index = 0;
    for (const auto& c : cases) {
      const std::string tag = "(" + std::to_string(++index) + ") ";
      const FamilyParams params{2, 6, c.ell, c.table};
      const auto built = build_semigroup(params);
      t.expect(built == NumericalSemigroup::from_generators(c.stated_generators),
               tag + "semigroup <" + built.to_string() + "> differs from stated generators");
      const auto report = classify(SemigroupIdeal::maximal(std::make_shared<const NumericalSemigroup>(built)));
      const auto& p = report.profile;
      t.equal(tag + "k", c.k, p.k);
      t.equal(tag + "r", c.r, p.r);
      t.equal(tag + "lambda", c.lambda, p.lambda_set);
      t.equal(tag + "HF constant", c.constant, report.hilbert.e1_polynomial);
      t.equal(tag + "G CM", c.cm, p.g_cohen_macaulay);
      const auto family = verify_family(params);
      t.expect(family.passed(), tag + "family prediction mismatch");
    }
    t.finish(out);
    out.summary = std::to_string(cases.size()) + " cases, " + std::to_string(t.checked()) + " checks";
  });
}

CriterionResult check_family_sweep(const SuiteOptions& options) {
  return timed(4, "family sweep b in {2,3}, e in 5..12", [&](CriterionResult& out) {
    std::vector<FamilyParams> all;
    std::size_t capped_cells = 0;
    for (Int b : {2, 3}) {
      for (Int e = 5; e <= 12; ++e) {
        auto cell = enumerate_families(b, e, options.family_cap + 1);
        if (cell.size() > options.family_cap) {
          ++capped_cells;
          cell.resize(options.family_cap);
        }
        all.insert(all.end(), cell.begin(), cell.end());
      }
    }
    std::vector<std::string> failures(all.size());
    parallel_for(all.size(), options.workers, [&](std::size_t i) {
      const auto report = verify_family(all[i]);
      if (report.passed()) return;
      std::ostringstream os;
      os << "b=" << all[i].b << " e=" << all[i].e << " ell=" << all[i].ell << " <" << report.semigroup << ">:";
      for (const auto& a : report.assertions) {
        if (!a.pass) os << " " << a.name << " (expected " << a.expected << ", got " << a.actual << ")";
      }
      failures[i] = os.str();
    });
    Tally t;
    for (const auto& f : failures) t.expect(f.empty(), f);
    t.finish(out);
    out.summary = std::to_string(all.size()) + " tuples, " + std::to_string(t.failed()) + " failures" +
                  (capped_cells ? ", " + std::to_string(capped_cells) + " cells capped at " +
                                      std::to_string(options.family_cap)
                                : "");
  });
}

CriterionResult check_oracle_equivalence(const SuiteOptions& options) {
  return timed(5, "oracle equivalence on random instances", [&](CriterionResult& out) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Int> count_pick(2, options.random_generator_count);
    std::uniform_int_distribution<Int> gen_pick(2, options.random_generator_bound);
    std::set<std::vector<Int>> seen;
    std::vector<SemigroupPtr> sample;
    while (sample.size() < options.random_semigroups) {
      std::vector<Int> gens(static_cast<std::size_t>(count_pick(rng)));
      for (auto& g : gens) g = gen_pick(rng);
      Int g = 0;
      for (Int x : gens) g = std::gcd(g, x);
      if (g != 1) continue;
      auto base = make_semigroup(gens);
      if (!seen.insert(base->minimal_generators()).second) continue;
      sample.push_back(base);
    }

    Tally t;
    for (const auto& base : sample) {
      const std::string tag = "<" + base->to_string() + "> ";
      PowerTower tower(SemigroupIdeal::maximal(base));
      const auto hd = compute_hilbert(tower);
      const Int poly = e1_via_polynomial(hd.hf, hd.e0);
      const Int sum = e1_via_huckaba(tower);
      t.equal(tag + "e1 routes", poly, sum);
      Int h_sum = 0;
      Int h_moment = 0;
      for (std::size_t i = 0; i < hd.h_poly.size(); ++i) {
        h_sum += hd.h_poly[i];
        h_moment += static_cast<Int>(i) * hd.h_poly[i];
      }
      t.equal(tag + "sum h = e0", hd.e0, h_sum);
      t.equal(tag + "sum i h_i = e1", poly, h_moment);
      t.expect(poly >= hd.e0 - 1, tag + "e1 >= e0 - l(A/m) fails: e1 = " + std::to_string(poly));
    }

    // Random element of H below a window past the conductor.
    auto element = [&](const NumericalSemigroup& h) {
      std::uniform_int_distribution<Int> pick(1, h.conductor() + 2 * h.multiplicity());
      for (;;) {
        const Int x = pick(rng);
        if (h.contains(x)) return x;
      }
    };
    auto random_ideal = [&](const SemigroupPtr& base) {
      std::uniform_int_distribution<int> size_pick(1, 4);
      std::vector<Int> vals(static_cast<std::size_t>(size_pick(rng)));
      for (auto& v : vals) v = element(*base);
      return SemigroupIdeal::from_valuations(base, vals);
    };
    std::uniform_int_distribution<std::size_t> base_pick(0, sample.size() - 1);
    for (std::size_t i = 0; i < options.random_triples; ++i) {
      const auto& base = sample[base_pick(rng)];
      const auto j1 = random_ideal(base);
      const auto j2 = intersect(j1, random_ideal(base));
      const auto j3 = multiply(j2, random_ideal(base));
      const std::string tag = "<" + base->to_string() + "> triple " + std::to_string(i) + " ";
      t.expect(contains_ideal(j1, j2) && contains_ideal(j2, j3), tag + "not nested");
      t.equal(tag + "length additivity", relative_length(j1, j3), relative_length(j1, j2) + relative_length(j2, j3));
      t.equal(tag + "colength additivity", colength(j3), colength(j1) + relative_length(j1, j3));
    }
    t.finish(out);
    out.summary = std::to_string(sample.size()) + " semigroups, " + std::to_string(options.random_triples) +
                  " triples, " + std::to_string(t.checked()) + " checks";
  });
}

CriterionResult check_corpus(const SuiteOptions& options) {
  return timed(6, "stretched corpus falsification", [&](CriterionResult& out) {
    CorpusQuery query;
    query.generator_bound = options.corpus_generator_bound;
    query.count_bound = options.corpus_generator_count;
    query.cap = options.corpus_cap;
    query.workers = options.workers;
    query.filter = CorpusFilter{FilterKind::Stretched, 0};
    Tally t;
    try {
      const auto result = run_search(query);
      t.expect(!result.cap_exceeded, "instance cap " + std::to_string(options.corpus_cap) + " reached");
      std::ostringstream os;
      os << result.enumerated << " semigroups, " << result.stretched << " stretched";
      std::map<Int, std::size_t> by_rank;
      for (const auto& [key, count] : result.histogram) by_rank[std::get<2>(key)] += count;
      os << ", by rank";
      for (Int rank = 1; rank <= 4; ++rank) os << ' ' << rank << ':' << by_rank[rank];
      out.summary = os.str();
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::TheoremViolation) throw;
      t.fail(std::string("violation: ") + ex.what());
    }
    t.finish(out);
  });
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  return {check_first_example(options),   check_second_example(options),     check_family_examples(options),
          check_family_sweep(options),    check_oracle_equivalence(options), check_corpus(options)};
}

void print_criterion(std::ostream& os, const CriterionResult& result) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2fs", result.seconds);
  os << "criterion " << result.id << ": " << (result.pass ? "PASS" : "FAIL") << "  " << result.title << "  ("
     << result.summary << (result.summary.empty() ? "" : ", ") << seconds << ")\n";
  for (const auto& f : result.failures) os << "    " << f << '\n';
}

}  // namespace stretchkit
