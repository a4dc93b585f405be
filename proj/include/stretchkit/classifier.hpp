#pragma once

#include <string>
#include <vector>

#include "stretchkit/hilbert.hpp"

namespace stretchkit {

/// The two defining conditions of a stretched ideal with respect to Q:
/// Q cap I^2 = QI, and l(Q + I^2 / Q + I^3) = 1.
struct StretchedWitness {
  bool intersection_equal = false;
  Int length = 0;

  bool stretched() const { return intersection_equal && length == 1; }
  bool operator==(const StretchedWitness&) const = default;
};

struct ReductionProfile {
  Int q_valuation = 0;
  Int colength = 0;  ///< l_A(A/I)
  Int r = 0;
  Int n_nilp = 0;
  Int k = 0;
  /// Entry n-1 holds l(I^{n+1} / Q I^n) for 1 <= n <= r.
  std::vector<Int> quotient_lengths;
  std::vector<Int> lambda_set;
  /// Entry n-1 holds (I^{n+1} cap Q == Q I^n) for 1 <= n <= r.
  std::vector<bool> vv_flags;
  StretchedWitness witness;
  bool stretched = false;
  bool g_cohen_macaulay = false;
  Int rank = 0;

  /// l(I^{n+1} / Q I^n) for any n >= 1 (zero past r).
  Int quotient_length(Int n) const;

  bool operator==(const ReductionProfile&) const = default;
};

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;

  bool operator==(const Check&) const = default;
};

struct ClassificationReport {
  std::string semigroup;
  std::vector<Int> ideal_generators;
  HilbertData hilbert;
  ReductionProfile profile;
  /// Matching structural pattern for ranks 1..4 ("rank1", "rank3.II", ...),
  /// empty when none applies.
  std::string pattern;
  std::vector<Check> checks;

  bool has_failures() const;
  std::vector<Check> failures() const;
  const Check* find(std::string_view name) const;

  bool operator==(const ClassificationReport&) const = default;
};

Int reduction_number(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);
StretchedWitness is_stretched(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);
/// k_I = l(I^2/QI) + 1; throws OracleMismatch if e0 = l(I/I^2) + k - 1 fails.
Int k_invariant(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);
std::vector<Int> lambda_set(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);
/// Valabrega-Valla: G is CM iff I^{n+1} cap Q = Q I^n for all n. For a
/// stretched ideal throws TheoremViolation unless this agrees with r == k.
bool is_g_cohen_macaulay(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);

ReductionProfile reduction_profile(PowerTower& tower, const HilbertData& hilbert);

/// Computes Hilbert data and the reduction profile, then evaluates every
/// numerical characterization of stretched ideals that applies to the
/// instance. Failed checks are reported, not thrown.
ClassificationReport classify(const SemigroupIdeal& ideal);
ClassificationReport classify(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);

/// Throws TheoremViolation (message carries the instance) if any check failed.
void require_consistent(const ClassificationReport& report);

}  // namespace stretchkit
