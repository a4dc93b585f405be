#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "stretchkit/classifier.hpp"
#include "stretchkit/corpus.hpp"
#include "stretchkit/error.hpp"

using namespace stretchkit;

namespace {

SemigroupIdeal m_of(std::string_view literal) { return SemigroupIdeal::maximal(make_semigroup(literal)); }

SemigroupIdeal q_of(const SemigroupIdeal& i) { return SemigroupIdeal::principal(i.base(), i.min_valuation()); }

ClassificationReport report_of(std::string_view literal) { return classify(m_of(literal)); }

void check_against_oracle(const std::vector<Int>& gens, const std::vector<Int>& vals) {
  auto base = make_semigroup(gens);
  const auto ideal = SemigroupIdeal::from_valuations(base, vals);
  const auto report = classify(ideal);
  const auto& p = report.profile;
  const auto ref = oracle::profile(gens, vals, static_cast<Int>(report.hilbert.hf.size()) - 1);
  INFO("H=<" << base->to_string() << "> ideal " << doctest::toString(vals.size()) << " gens, min " << vals.front());
  CHECK(report.hilbert.hf == ref.hf);
  CHECK(report.hilbert.e1_polynomial == ref.e1);
  CHECK(report.hilbert.h_poly == ref.h_poly);
  CHECK(p.r == ref.r);
  CHECK(p.n_nilp == ref.n_nilp);
  CHECK(p.k == ref.k);
  CHECK(p.colength == ref.colength);
  CHECK(p.quotient_lengths == ref.quotient_lengths);
  CHECK(p.lambda_set == ref.lambda_set);
  CHECK(p.witness.intersection_equal == ref.intersection_equal);
  CHECK(p.witness.length == ref.stretch_length);
  CHECK(p.g_cohen_macaulay == ref.g_cm);
  CHECK_FALSE(report.has_failures());
}

}  // namespace

TEST_CASE("reduction numbers") {
  const auto m1 = m_of("6,13,27,34,41");
  CHECK(reduction_number(m1, q_of(m1)) == 2);
  const auto m6 = m_of("6,13,33,40,47,48");
  CHECK(reduction_number(m6, q_of(m6)) == 5);
  const auto m23 = m_of("2,3");
  CHECK(reduction_number(m23, q_of(m23)) == 1);
}

TEST_CASE("stretchedness witnesses") {
  const auto m = m_of("8,17,21,30,39,52");
  CHECK(is_stretched(m, q_of(m)).stretched());
  const auto minimal = m_of("4,5,6,7");
  const auto w1 = is_stretched(minimal, q_of(minimal));
  CHECK_FALSE(w1.stretched());
  CHECK(w1.intersection_equal);
  CHECK(w1.length == 0);
  const auto m567 = m_of("5,6,7");
  const auto w2 = is_stretched(m567, q_of(m567));
  CHECK_FALSE(w2.stretched());
  CHECK(w2.length == 2);
}

TEST_CASE("k invariant, lambda and G") {
  for (auto [literal, k] : std::vector<std::pair<std::string_view, Int>>{
           {"7,15,18,26,27", 3}, {"6,13,33,34,41", 2}, {"2,3", 1}}) {
    const auto m = m_of(literal);
    CHECK(k_invariant(m, q_of(m)) == k);
  }
  for (auto [literal, lambda] : std::vector<std::pair<std::string_view, std::vector<Int>>>{
           {"6,13,33,40,41", {2, 3}}, {"6,13,40,41", {3}}, {"6,13,27,34,41", {}}}) {
    const auto m = m_of(literal);
    CHECK(lambda_set(m, q_of(m)) == lambda);
  }
  for (auto [literal, cm] : std::vector<std::pair<std::string_view, bool>>{
           {"6,13,34,41", true}, {"6,13,33,34,41", false}, {"2,3", true}}) {
    const auto m = m_of(literal);
    CHECK(is_g_cohen_macaulay(m, q_of(m)) == cm);
  }
}

TEST_CASE("classification of the worked examples") {
  SUBCASE("<6,13,40,41>") {
    const auto r = report_of("6,13,40,41");
    CHECK(r.profile.rank == 4);
    CHECK(r.profile.k == 3);
    CHECK(r.pattern == "rank4.I");
    CHECK(r.profile.lambda_set == std::vector<Int>{3});
    CHECK_FALSE(r.profile.g_cohen_macaulay);
    CHECK_FALSE(r.has_failures());
  }
  SUBCASE("<6,13,27,34,41>") {
    const auto r = report_of("6,13,27,34,41");
    CHECK(r.profile.rank == 1);
    CHECK(r.pattern == "rank1");
    CHECK(r.profile.g_cohen_macaulay);
    CHECK(r.hilbert.h_poly == std::vector<Int>{1, 4, 1});
    CHECK_FALSE(r.has_failures());
  }
  SUBCASE("<6,13,33,40,47>") {
    const auto r = report_of("6,13,33,40,47,48");
    CHECK(r.profile.rank == 4);
    CHECK(r.pattern == "rank4.II");
    CHECK(r.profile.lambda_set == std::vector<Int>{2, 3, 4});
    CHECK(r.profile.quotient_lengths == std::vector<Int>{1, 1, 1, 1, 0});
    const auto m = m_of("6,13,33,40,47");
    CHECK(power(m, 6) == multiply(q_of(m), power(m, 5)));
    CHECK_FALSE(r.has_failures());
  }
  SUBCASE("<7,15,18,26,27>") {
    const auto r = report_of("7,15,18,26,27");
    CHECK(r.pattern == "rank3.I");
    CHECK(r.profile.rank == 3);
  }
  SUBCASE("<2,3> is not stretched") {
    const auto r = report_of("2,3");
    CHECK(r.hilbert.e0 == 2);
    CHECK(r.hilbert.e1_polynomial == 1);
    CHECK(r.profile.rank == 0);
    CHECK(r.profile.k == 1);
    CHECK_FALSE(r.profile.stretched);
    CHECK(r.pattern.empty());
    CHECK(r.find("cm_equivalence")->status == CheckStatus::NotApplicable);
    CHECK(r.find("nagata_bound")->status == CheckStatus::Pass);
  }
}

TEST_CASE("every check is recorded with a status") {
  const auto stretched = report_of("8,17,21,30,39,52");
  const auto plain = report_of("5,6,7");
  CHECK(stretched.checks.size() >= plain.checks.size());
  for (const auto* name : {"e1_routes_agree", "nagata_bound", "k_identity", "lambda_size", "cm_equivalence",
                           "quotient_recursion", "rank4.I", "k3_rank4"}) {
    INFO(name);
    REQUIRE(stretched.find(name) != nullptr);
    CHECK(stretched.find(name)->status != CheckStatus::Fail);
    REQUIRE(plain.find(name) != nullptr);
  }
  CHECK(plain.find("lambda_size")->status == CheckStatus::NotApplicable);
  CHECK_NOTHROW(require_consistent(stretched));
}

TEST_CASE("require_consistent reports tampered instances") {
  auto report = report_of("6,13,40,41");
  report.checks.push_back({"planted", CheckStatus::Fail, "synthetic"});
  try {
    require_consistent(report);
    FAIL("expected a violation");
  } catch (const Error& ex) {
    CHECK(ex.kind() == ErrorKind::TheoremViolation);
    CHECK(std::string(ex.what()).find("6,13,40,41") != std::string::npos);
    CHECK(std::string(ex.what()).find("planted") != std::string::npos);
  }
}

TEST_CASE("maximal ideals agree with the brute-force oracle") {
  CorpusQuery query;
  query.generator_bound = 13;
  query.count_bound = 4;
  std::size_t seen = 0;
  for_each_semigroup(query, [&](const std::vector<Int>& gens) {
    if (gens.front() > 1) {
      check_against_oracle(gens, gens);
      ++seen;
    }
    return true;
  });
  CHECK(seen > 200);
}

TEST_CASE("random ideals agree with the brute-force oracle") {
  std::mt19937_64 rng(4242);
  const std::vector<std::vector<Int>> bases{{3, 5},        {4, 6, 9},      {5, 6, 7},     {6, 13, 27, 34, 41},
                                            {7, 9, 10, 12}, {5, 8, 11, 12}, {8, 17, 21, 30, 39, 52}};
  for (int trial = 0; trial < 150; ++trial) {
    const auto& gens = bases[static_cast<std::size_t>(trial) % bases.size()];
    auto base = make_semigroup(gens);
    std::uniform_int_distribution<Int> pick(1, base->conductor() + base->multiplicity());
    std::uniform_int_distribution<int> size_pick(1, 4);
    const auto want = static_cast<std::size_t>(size_pick(rng));
    std::vector<Int> vals;
    while (vals.size() < want) {
      const Int x = pick(rng);
      if (base->contains(x)) vals.push_back(x);
    }
    std::sort(vals.begin(), vals.end());
    check_against_oracle(gens, vals);
  }
}

TEST_CASE("supplied reductions") {
  const auto m = m_of("7,15,18,26,27");
  const auto report = classify(m, q_of(m));
  CHECK(report == classify(m));
  auto h = m.base();
  CHECK_THROWS_AS(classify(m, SemigroupIdeal::unit(h)), Error);
}
