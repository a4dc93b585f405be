#include <random>
#include <set>

#include "doctest.h"
#include "stretchkit/error.hpp"
#include "stretchkit/family.hpp"

using namespace stretchkit;

namespace {

FamilyParams params(Int ell, std::map<Int, Int> table, Int b = 2, Int e = 6) { return {b, e, ell, std::move(table)}; }

const FamilyParams kCase1 = params(2, {{3, 4}, {4, 5}, {5, 6}});
const FamilyParams kCase2 = params(2, {{3, 5}, {4, 5}, {5, 6}});
const FamilyParams kCase3 = params(3, {{4, 5}, {5, 6}});
const FamilyParams kCase4 = params(2, {{3, 5}, {4, 6}, {5, 6}});
const FamilyParams kCase5 = params(3, {{4, 6}, {5, 6}});
const FamilyParams kCase6 = params(2, {{3, 5}, {4, 6}, {5, 7}});

bool names_constraint(const std::vector<Violation>& vs, std::string_view needle) {
  for (const auto& v : vs) {
    if (v.constraint.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(kCase1).empty());
  const auto too_big = validate(params(2, {{3, 7}, {4, 7}, {5, 8}}));
  CHECK(names_constraint(too_big, "b_{ell+1} <= b*ell+b-1"));
  const auto jump = validate(params(2, {{3, 4}, {4, 6}, {5, 6}}));
  CHECK(names_constraint(jump, "b_{n+1} <= b_n+ceil(b/2)"));
  CHECK(names_constraint(validate(params(2, {{3, 3}, {4, 5}, {5, 6}})), "ceil(b/2)n+1 <= b_n"));
  CHECK(names_constraint(validate(params(2, {{3, 4}, {5, 6}})), "b_n given"));
  CHECK(names_constraint(validate(params(6, {})), "2 <= ell <= e-1"));
  CHECK(names_constraint(validate(params(2, {{3, 4}, {4, 5}, {5, 6}}, 1)), "b >= 2"));
}

TEST_CASE("predicted reduction numbers") {
  CHECK(expected_r(kCase1) == 2);
  CHECK(expected_r(kCase5) == 4);
  CHECK(expected_r(kCase6) == 5);
}

TEST_CASE("built semigroups") {
  CHECK(build_semigroup(kCase1).to_string() == "6,13,27,34,41");
  CHECK(build_semigroup(kCase5).to_string() == "6,13,40,41");
  CHECK(build_semigroup(kCase4).to_string() == "6,13,33,40,41");
  CHECK(build_semigroup(kCase6).to_string() == "6,13,33,40,47");
}

TEST_CASE("predicted profiles") {
  const auto p5 = expected_profile(kCase5);
  CHECK(p5.k == 3);
  CHECK(p5.r == 4);
  CHECK(p5.lambda_set == std::vector<Int>{3});
  CHECK(p5.hf_constant == 9);
  CHECK(p5.type == 3);
  CHECK_FALSE(p5.g_cohen_macaulay);
  const auto p1 = expected_profile(kCase1);
  CHECK(p1.lambda_set.empty());
  CHECK(p1.hf_constant == 6);
  CHECK(p1.g_cohen_macaulay);
  const auto p6 = expected_profile(kCase6);
  CHECK(p6.r == 5);
  CHECK(p6.lambda_set == std::vector<Int>{2, 3, 4});
  CHECK(p6.hf_constant == 9);
}

TEST_CASE("the six worked parameter sets verify") {
  for (const auto& p : {kCase1, kCase2, kCase3, kCase4, kCase5, kCase6}) {
    const auto report = verify_family(p);
    INFO(report.semigroup);
    CHECK(report.passed());
    CHECK_NOTHROW(require_family(report));
  }
  const auto r2 = verify_family(kCase2);
  CHECK(r2.classification.profile.r == 3);
  CHECK(r2.classification.profile.k == 2);
  CHECK(r2.classification.profile.lambda_set == std::vector<Int>{2});
  CHECK(verify_family(kCase3).classification.profile.g_cohen_macaulay);
}

TEST_CASE("invalid parameters are reported, not thrown") {
  const auto report = verify_family(params(2, {{3, 7}, {4, 7}, {5, 8}}));
  CHECK_FALSE(report.passed());
  CHECK(report.semigroup.empty());
  CHECK(report.assertions.front().name.rfind("valid: ", 0) == 0);
  CHECK_THROWS_AS(require_family(report), Error);
}

TEST_CASE("presets instantiate and match their claims") {
  for (const auto& name : preset_names()) {
    const auto claim = preset_claim(name);
    // b_4 - b_3 = b - 1 in these two schemas, which exceeds ceil(b/2) once b >= 4.
    const bool steep = name == "ex3-2" || name == "ex4-2";
    for (Int b = 2; b <= 5; ++b) {
      for (Int e = 6; e <= 10; ++e) {
        const auto p = preset(name, b, e);
        REQUIRE(p.has_value());
        INFO(name << " b=" << b << " e=" << e);
        const auto report = verify_family(*p);
        if (steep && b >= 4) {
          const auto violations = validate(*p);
          REQUIRE(violations.size() >= 1);
          CHECK(violations.front().constraint == "b_{n+1} <= b_n+ceil(b/2)");
          CHECK_FALSE(report.passed());
          continue;
        }
        CHECK(report.passed());
        const auto& prof = report.classification.profile;
        CHECK(prof.k == claim.k);
        CHECK(prof.r == claim.r);
        CHECK(prof.lambda_set == claim.lambda_set);
        CHECK(report.classification.hilbert.e1_polynomial - e == claim.hf_constant_minus_e);
        CHECK(prof.g_cohen_macaulay == claim.g_cohen_macaulay);
      }
    }
  }
  CHECK_FALSE(preset("ex4-2", 2, 5).has_value());
  CHECK_THROWS_AS(preset("ex9", 2, 6), Error);
}

TEST_CASE("the worked semigroup with e = 8 has the predicted constant") {
  const auto report = classify(SemigroupIdeal::maximal(make_semigroup(std::string_view("8,17,21,30,39,52"))));
  CHECK(report.hilbert.e1_polynomial == 11);
}

TEST_CASE("enumeration and sampling stay inside the constraints") {
  for (Int b : {2, 3, 4}) {
    for (Int e = 3; e <= 8; ++e) {
      const auto all = enumerate_families(b, e, 100000);
      CHECK_FALSE(all.empty());
      for (const auto& p : all) CHECK(validate(p).empty());
      std::set<std::map<Int, Int>> distinct;
      for (const auto& p : all) distinct.insert(p.b_table);
      std::size_t per_ell_distinct = 0;
      for (Int ell = 2; ell <= e - 1; ++ell) {
        std::set<std::map<Int, Int>> s;
        for (const auto& p : all) {
          if (p.ell == ell) s.insert(p.b_table);
        }
        per_ell_distinct += s.size();
      }
      CHECK(per_ell_distinct == all.size());
    }
  }
  CHECK(enumerate_families(3, 12, 10).size() == 10);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Int b = 2 + i % 3;
    const Int e = 4 + i % 9;
    const Int ell = 2 + i % (e - 2);
    const auto p = sample_family(rng, b, e, ell);
    INFO("b=" << b << " e=" << e << " ell=" << ell);
    CHECK(validate(p).empty());
    CHECK(verify_family(p).passed());
  }
}
