#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stretchkit/classifier.hpp"

namespace stretchkit {

/// Parameters of the family H = <e, b e + 1, {b_n e + n : ell < n < e}>.
struct FamilyParams {
  Int b = 2;
  Int e = 3;
  Int ell = 2;
  /// b_n for ell + 1 <= n <= e - 1.
  std::map<Int, Int> b_table;

  bool operator==(const FamilyParams&) const = default;
};

struct Violation {
  std::string constraint;
  std::string detail;
};

/// Every violated constraint, in a fixed order; empty means valid.
std::vector<Violation> validate(const FamilyParams& params);

/// ceil(b / 2).
Int half_up(Int b);

/// max({n < e : b_n > bn - n + 1} u {ell}).
Int expected_r(const FamilyParams& params);

NumericalSemigroup build_semigroup(const FamilyParams& params);

struct FamilyPrediction {
  Int k = 0;
  Int r = 0;
  std::vector<Int> lambda_set;
  /// c in l(A/m^{n+1}) = e(n+1) - c for n >= r - 1.
  Int hf_constant = 0;
  Int type = 0;
  Int embedding_dimension = 0;
  bool g_cohen_macaulay = false;
};

FamilyPrediction expected_profile(const FamilyParams& params);

struct Assertion {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct FamilyReport {
  FamilyParams params;
  std::string semigroup;
  FamilyPrediction prediction;
  ClassificationReport classification;
  std::vector<Assertion> assertions;

  bool passed() const;
};

/// Builds the semigroup, runs the engine on its maximal ideal and compares
/// every predicted invariant. Mismatches are reported; `require_family`
/// turns them into a TheoremViolation.
FamilyReport verify_family(const FamilyParams& params);
void require_family(const FamilyReport& report);

/// Every valid tuple for fixed (b, e), ell ascending, chains in
/// lexicographic order, at most `cap` entries.
std::vector<FamilyParams> enumerate_families(Int b, Int e, std::size_t cap);

/// Forward sampling of a valid b_n chain for fixed (b, e, ell).
FamilyParams sample_family(std::mt19937_64& rng, Int b, Int e, Int ell);

/// Named parameter schemas: "ex1", "ex2", "ex3-1", "ex3-2", "ex4-1",
/// "ex4-2". Unlisted b_n are filled by b_{n+1} = min(b_n + ceil(b/2),
/// (b-1)(n+1) + ell). Returns nullopt when the schema needs a larger e.
struct PresetClaim {
  Int k = 0;
  Int r = 0;
  std::vector<Int> lambda_set;
  Int hf_constant_minus_e = 0;  ///< c - e
  bool g_cohen_macaulay = false;
};
std::optional<FamilyParams> preset(std::string_view name, Int b, Int e);
PresetClaim preset_claim(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace stretchkit
