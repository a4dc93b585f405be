#pragma once

#include <span>
#include <vector>

#include "stretchkit/semigroup.hpp"

namespace stretchkit {

/// A monomial ideal of A = k[[H]], identified with its valuation set E.
///
/// E + H is contained in E, so E is closed under adding the multiplicity e of
/// H and is determined by its least element in each residue class mod e.
/// That vector is the stored form; `threshold()` and `finite_part()` expose
/// the equivalent "finite set plus cofinite tail" view used for
/// serialization. The zero ideal has every class minimum equal to kAbsent.
class SemigroupIdeal {
 public:
  static constexpr Int kAbsent = kUnreachable;

  /// E = union of (v + H) over `vals`. Throws GeneratorNotInRing if some v is
  /// not in H, EmptyGenerators if `vals` is empty.
  static SemigroupIdeal from_valuations(SemigroupPtr base, std::span<const Int> vals);
  /// The ideal whose valuation set is exactly `finite_part` together with all
  /// integers >= threshold. Throws GeneratorNotInRing if the set is not an
  /// integral H-ideal.
  static SemigroupIdeal from_set(SemigroupPtr base, std::span<const Int> finite_part, Int threshold);

  static SemigroupIdeal maximal(SemigroupPtr base);
  static SemigroupIdeal unit(SemigroupPtr base);
  static SemigroupIdeal principal(SemigroupPtr base, Int a);
  static SemigroupIdeal zero(SemigroupPtr base);

  const NumericalSemigroup& semigroup() const { return *base_; }
  const SemigroupPtr& base() const { return base_; }

  bool contains(Int x) const;
  bool is_zero() const;
  bool is_unit() const { return contains(0); }
  /// Least valuation; throws ZeroIdeal for the zero ideal.
  Int min_valuation() const;

  /// Least T with [T, inf) inside E (0 when E = N). Throws ZeroIdeal.
  Int threshold() const;
  /// Elements of E below threshold(), ascending.
  std::vector<Int> finite_part() const;
  /// Minimal monomial generators: elements of E not in E + (H \ {0}).
  std::vector<Int> generators() const;

  const std::vector<Int>& class_minima() const { return minima_; }

  bool operator==(const SemigroupIdeal& other) const;

 private:
  SemigroupIdeal(SemigroupPtr base, std::vector<Int> minima) : base_(std::move(base)), minima_(std::move(minima)) {}

  friend SemigroupIdeal multiply(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal sum(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal intersect(const SemigroupIdeal&, const SemigroupIdeal&);
  friend SemigroupIdeal shift(const SemigroupIdeal&, Int);

  SemigroupPtr base_;
  std::vector<Int> minima_;
};

SemigroupIdeal multiply(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal power(const SemigroupIdeal& a, Int n);
SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal intersect(const SemigroupIdeal& a, const SemigroupIdeal& b);
/// u^a * J for a in H.
SemigroupIdeal shift(const SemigroupIdeal& j, Int a);

/// True iff `inner` is a subset of `outer`.
bool contains_ideal(const SemigroupIdeal& outer, const SemigroupIdeal& inner);

/// l_A(A/J). Throws ZeroIdeal.
Int colength(const SemigroupIdeal& j);
/// l_A(outer/inner) for inner inside outer. Throws NotNested or ZeroIdeal.
Int relative_length(const SemigroupIdeal& outer, const SemigroupIdeal& inner);

}  // namespace stretchkit
