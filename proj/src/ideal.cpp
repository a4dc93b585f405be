#include "stretchkit/ideal.hpp"

#include <algorithm>

#include "stretchkit/error.hpp"

namespace stretchkit {
namespace {

void require_same_base(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.base() == b.base()) return;
  if (*a.base() == *b.base()) return;
  throw Error(ErrorKind::BaseMismatch,
              "ideals over <" + a.semigroup().to_string() + "> and <" + b.semigroup().to_string() + ">");
}

// (min,+) convolution of class minima over Z/eZ.
std::vector<Int> convolve(const std::vector<Int>& x, const std::vector<Int>& y) {
  const std::size_t e = x.size();
  std::vector<Int> out(e, SemigroupIdeal::kAbsent);
  for (std::size_t i = 0; i < e; ++i) {
    if (x[i] >= SemigroupIdeal::kAbsent) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (y[j] >= SemigroupIdeal::kAbsent) continue;
      auto& slot = out[(i + j) % e];
      slot = std::min(slot, x[i] + y[j]);
    }
  }
  return out;
}

}  // namespace

SemigroupIdeal SemigroupIdeal::from_valuations(SemigroupPtr base, std::span<const Int> vals) {
  if (vals.empty()) throw Error(ErrorKind::EmptyGenerators, "ideal needs at least one valuation");
  const Int e = base->multiplicity();
  std::vector<Int> seeds(static_cast<std::size_t>(e), kAbsent);
  for (Int v : vals) {
    if (!base->contains(v)) {
      throw Error(ErrorKind::GeneratorNotInRing, "u^" + std::to_string(v) + " is not in k[[H]]");
    }
    auto& slot = seeds[static_cast<std::size_t>(v % e)];
    slot = std::min(slot, v);
  }
  auto minima = convolve(seeds, base->apery_by_residue());
  return SemigroupIdeal(std::move(base), std::move(minima));
}

SemigroupIdeal SemigroupIdeal::from_set(SemigroupPtr base, std::span<const Int> finite_part, Int threshold) {
  const Int e = base->multiplicity();
  std::vector<Int> minima(static_cast<std::size_t>(e), kAbsent);
  for (Int c = 0; c < e; ++c) {
    // First element of the class at or after the threshold.
    Int start = std::max<Int>(threshold, 0);
    Int t = start + ((c - start % e) % e + e) % e;
    minima[static_cast<std::size_t>(c)] = t;
  }
  for (Int v : finite_part) {
    if (v < 0 || v >= threshold) {
      throw Error(ErrorKind::GeneratorNotInRing, "finite part entry " + std::to_string(v) + " outside [0, threshold)");
    }
  }
  for (Int v : finite_part) {
    auto& slot = minima[static_cast<std::size_t>(v % e)];
    slot = std::min(slot, v);
  }
  SemigroupIdeal candidate(base, std::move(minima));
  // The set must be exactly the H-ideal it generates and lie inside H.
  auto closed = convolve(candidate.minima_, base->apery_by_residue());
  for (Int c = 0; c < e; ++c) {
    if (candidate.minima_[static_cast<std::size_t>(c)] < base->apery_min(c)) {
      throw Error(ErrorKind::GeneratorNotInRing, "valuation set is not contained in H");
    }
  }
  if (closed != candidate.minima_) throw Error(ErrorKind::GeneratorNotInRing, "valuation set is not closed under H");
  std::vector<Int> expected(finite_part.begin(), finite_part.end());
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  std::vector<Int> actual;
  for (Int x = 0; x < threshold; ++x) {
    if (candidate.contains(x)) actual.push_back(x);
  }
  if (actual != expected) throw Error(ErrorKind::GeneratorNotInRing, "finite part is not an arithmetic-progression tail set");
  return candidate;
}

SemigroupIdeal SemigroupIdeal::maximal(SemigroupPtr base) {
  auto minima = base->apery_by_residue();
  minima[0] = base->multiplicity();
  return SemigroupIdeal(std::move(base), std::move(minima));
}

SemigroupIdeal SemigroupIdeal::unit(SemigroupPtr base) {
  auto minima = base->apery_by_residue();
  return SemigroupIdeal(std::move(base), std::move(minima));
}

SemigroupIdeal SemigroupIdeal::principal(SemigroupPtr base, Int a) {
  const Int vals[] = {a};
  return from_valuations(std::move(base), vals);
}

SemigroupIdeal SemigroupIdeal::zero(SemigroupPtr base) {
  std::vector<Int> minima(static_cast<std::size_t>(base->multiplicity()), kAbsent);
  return SemigroupIdeal(std::move(base), std::move(minima));
}

bool SemigroupIdeal::contains(Int x) const {
  if (x < 0) return false;
  const Int e = static_cast<Int>(minima_.size());
  return x >= minima_[static_cast<std::size_t>(x % e)];
}

bool SemigroupIdeal::is_zero() const {
  return std::all_of(minima_.begin(), minima_.end(), [](Int m) { return m >= kAbsent; });
}

Int SemigroupIdeal::min_valuation() const {
  if (is_zero()) throw Error(ErrorKind::ZeroIdeal, "zero ideal has no valuations");
  return *std::min_element(minima_.begin(), minima_.end());
}

Int SemigroupIdeal::threshold() const {
  if (is_zero()) throw Error(ErrorKind::ZeroIdeal, "zero ideal has no threshold");
  const Int e = static_cast<Int>(minima_.size());
  Int largest_missing = -1;
  for (Int c = 0; c < e; ++c) largest_missing = std::max(largest_missing, minima_[static_cast<std::size_t>(c)] - e);
  return largest_missing + 1;
}

std::vector<Int> SemigroupIdeal::finite_part() const {
  std::vector<Int> out;
  const Int t = threshold();
  for (Int x = 0; x < t; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> SemigroupIdeal::generators() const {
  if (is_zero()) return {};
  // x is redundant iff x - g lies in E for some minimal generator g of H.
  std::vector<Int> out;
  for (Int x : minima_) {
    bool redundant = false;
    for (Int g : base_->minimal_generators()) {
      if (contains(x - g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SemigroupIdeal::operator==(const SemigroupIdeal& other) const {
  require_same_base(*this, other);
  return minima_ == other.minima_;
}

SemigroupIdeal multiply(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_base(a, b);
  return SemigroupIdeal(a.base_, convolve(a.minima_, b.minima_));
}

SemigroupIdeal power(const SemigroupIdeal& a, Int n) {
  SemigroupIdeal result = SemigroupIdeal::unit(a.base());
  SemigroupIdeal square = a;
  while (n > 0) {
    if (n & 1) result = multiply(result, square);
    n >>= 1;
    if (n > 0) square = multiply(square, square);
  }
  return result;
}

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_base(a, b);
  std::vector<Int> minima(a.minima_.size());
  std::transform(a.minima_.begin(), a.minima_.end(), b.minima_.begin(), minima.begin(),
                 [](Int x, Int y) { return std::min(x, y); });
  return SemigroupIdeal(a.base_, std::move(minima));
}

SemigroupIdeal intersect(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  require_same_base(a, b);
  std::vector<Int> minima(a.minima_.size());
  std::transform(a.minima_.begin(), a.minima_.end(), b.minima_.begin(), minima.begin(),
                 [](Int x, Int y) { return std::max(x, y); });
  return SemigroupIdeal(a.base_, std::move(minima));
}

SemigroupIdeal shift(const SemigroupIdeal& j, Int a) {
  return multiply(j, SemigroupIdeal::principal(j.base(), a));
}

bool contains_ideal(const SemigroupIdeal& outer, const SemigroupIdeal& inner) {
  require_same_base(outer, inner);
  const auto& o = outer.class_minima();
  const auto& i = inner.class_minima();
  for (std::size_t c = 0; c < o.size(); ++c) {
    if (i[c] < o[c]) return false;
  }
  return true;
}

Int colength(const SemigroupIdeal& j) {
  return relative_length(SemigroupIdeal::unit(j.base()), j);
}

Int relative_length(const SemigroupIdeal& outer, const SemigroupIdeal& inner) {
  if (!contains_ideal(outer, inner)) throw Error(ErrorKind::NotNested, "second ideal is not contained in the first");
  if (inner.is_zero() && !outer.is_zero()) throw Error(ErrorKind::ZeroIdeal, "quotient by the zero ideal has infinite length");
  if (outer.is_zero()) return 0;
  const auto& o = outer.class_minima();
  const auto& i = inner.class_minima();
  const Int e = static_cast<Int>(o.size());
  Int total = 0;
  for (std::size_t c = 0; c < o.size(); ++c) total += (i[c] - o[c]) / e;
  return total;
}

}  // namespace stretchkit
