#pragma once

#include <optional>
#include <vector>

#include "stretchkit/ideal.hpp"

namespace stretchkit {

/// Lazily computed powers I^n of an m-primary monomial ideal together with its
/// principal reduction Q. Not thread-safe (caches); create one per worker.
class PowerTower {
 public:
  /// Uses the monomial reduction Q = (u^a), a = min valuation of I.
  explicit PowerTower(SemigroupIdeal ideal);
  /// Uses a caller-supplied Q. Throws NotNested unless Q is inside I.
  PowerTower(SemigroupIdeal ideal, SemigroupIdeal reduction);

  const SemigroupIdeal& ideal() const { return ideal_; }
  const SemigroupIdeal& reduction() const { return reduction_; }

  /// I^n (I^0 = A).
  const SemigroupIdeal& power(Int n);
  /// Q I^n.
  SemigroupIdeal reduction_times(Int n);

  /// l(I^{n+1} / Q I^n).
  Int quotient_length(Int n);

  /// Least n >= 0 with I^{n+1} = Q I^n. Throws NotAReduction past `cap`
  /// (default: conductor(H) + min valuation of I).
  Int reduction_number(std::optional<Int> cap = std::nullopt);

 private:
  SemigroupIdeal ideal_;
  SemigroupIdeal reduction_;
  std::vector<SemigroupIdeal> powers_;
  std::optional<Int> reduction_number_;
};

struct HilbertData {
  /// hf[n] = l_A(A / I^{n+1}) for n = 0..n_max.
  std::vector<Int> hf;
  Int stabilization_index = 0;
  Int e0 = 0;
  Int e1_polynomial = 0;
  Int e1_huckaba = 0;
  std::vector<Int> h_poly;

  bool operator==(const HilbertData&) const = default;
};

/// l_A(A / I^{n+1}) for n = 0..n_max. Without `n_max` the table is extended
/// adaptively until it runs at least three steps past the reduction number
/// (cap 512). Throws UnitIdeal, ZeroIdeal, NotStabilized.
std::vector<Int> hilbert_function(const SemigroupIdeal& ideal, std::optional<Int> n_max = std::nullopt);

/// e0(I): the least valuation, cross-checked against the slope of the
/// stabilized Hilbert function. Throws OracleMismatch on disagreement.
Int multiplicity(const SemigroupIdeal& ideal);

/// Index from which hf is exactly linear of slope e0 through the end of the
/// table. Throws NotStabilized if the last three differences are not e0.
Int stabilization_index(const std::vector<Int>& hf, Int e0);

/// e1 = e0 (n+1) - HF(n) on the stabilized range.
Int e1_via_polynomial(const HilbertData& data);
Int e1_via_polynomial(const std::vector<Int>& hf, Int e0);

/// e1 = sum_{n >= 0} l(I^{n+1} / Q I^n).
Int e1_via_huckaba(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction);
Int e1_via_huckaba(PowerTower& tower);

/// Numerator of the Hilbert series in dimension one: h_i = d_i - d_{i-1}
/// with d_i = l(I^i / I^{i+1}); trailing zeros trimmed.
std::vector<Int> h_polynomial(const HilbertData& data);
std::vector<Int> h_polynomial(const std::vector<Int>& hf, Int e0);

/// Full HilbertData with both e1 routes; throws OracleMismatch when they
/// disagree.
HilbertData compute_hilbert(PowerTower& tower);
HilbertData compute_hilbert(const SemigroupIdeal& ideal);

}  // namespace stretchkit
