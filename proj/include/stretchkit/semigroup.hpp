#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stretchkit {

using Int = std::int64_t;

/// A numerical semigroup H = <g1, ..., gk> (a cofinite submonoid of N).
///
/// The semigroup is stored through its Apery set with respect to the
/// multiplicity e: apery_[c] is the least element of H congruent to c mod e.
/// Membership, Frobenius number, genus and every ideal operation downstream
/// are read off this table. Instances are immutable after construction.
class NumericalSemigroup {
 public:
  /// Reduces `gens` to the minimal generating set. Throws EmptyGenerators,
  /// InvalidGenerator (non-positive entry) or GcdNotOne.
  static NumericalSemigroup from_generators(std::span<const Int> gens);

  /// Parses a literal like "6,13,27,34,41". Throws ParseError with the
  /// offending character position.
  static NumericalSemigroup parse(std::string_view literal);

  const std::vector<Int>& minimal_generators() const { return generators_; }
  Int multiplicity() const { return generators_.front(); }
  Int embedding_dimension() const { return static_cast<Int>(generators_.size()); }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  Int genus() const { return genus_; }

  bool contains(Int x) const;

  /// Least element of H in residue class c modulo the multiplicity.
  Int apery_min(Int residue) const { return apery_[static_cast<std::size_t>(residue)]; }
  const std::vector<Int>& apery_by_residue() const { return apery_; }

  /// Ap(H, a) = {h in H : h - a not in H}, sorted ascending. Throws NotMember
  /// unless a is a positive element of H.
  std::vector<Int> apery_set(Int a) const;

  std::vector<Int> gaps() const;

  /// Gaps x with x + h in H for every nonzero h in H. Throws
  /// TrivialSemigroup when H = N.
  std::vector<Int> pseudo_frobenius() const;
  Int type() const { return static_cast<Int>(pseudo_frobenius().size()); }

  /// Comma-separated minimal generators.
  std::string to_string() const;

  bool operator==(const NumericalSemigroup& other) const { return generators_ == other.generators_; }

 private:
  NumericalSemigroup(std::vector<Int> generators, std::vector<Int> apery);

  std::vector<Int> generators_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::span<const Int> gens);
SemigroupPtr make_semigroup(std::string_view literal);

/// Shortest-path Apery table of <gens> modulo `modulus` (gens[i] > 0,
/// modulus > 0). Entries for unreachable residues are kUnreachable.
std::vector<Int> apery_table(std::span<const Int> gens, Int modulus);

inline constexpr Int kUnreachable = INT64_MAX / 4;

/// Comma-separated list of nonnegative integers; positions in errors are
/// zero-based character offsets into `text`.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace stretchkit
