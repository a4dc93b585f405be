#include "stretchkit/hilbert.hpp"

#include <algorithm>

#include "stretchkit/error.hpp"

namespace stretchkit {
namespace {

constexpr Int kHardCap = 512;

// Table length that runs at least three steps past the reduction number.
Int adaptive_top(const SemigroupIdeal& ideal, Int r) {
  Int top = ideal.semigroup().conductor() / ideal.min_valuation() + 4;
  while (top < r + 3) {
    top *= 2;
    if (top > kHardCap) throw Error(ErrorKind::NotStabilized, "Hilbert function not linear below n = 512");
  }
  return top;
}

void require_proper(const SemigroupIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::ZeroIdeal, "Hilbert function of the zero ideal");
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "Hilbert function of the unit ideal");
}

}  // namespace

PowerTower::PowerTower(SemigroupIdeal ideal)
    : PowerTower(ideal, SemigroupIdeal::principal(ideal.base(), (require_proper(ideal), ideal.min_valuation()))) {}

PowerTower::PowerTower(SemigroupIdeal ideal, SemigroupIdeal reduction)
    : ideal_(std::move(ideal)), reduction_(std::move(reduction)) {
  require_proper(ideal_);
  if (!contains_ideal(ideal_, reduction_)) throw Error(ErrorKind::NotNested, "reduction is not contained in the ideal");
  powers_.push_back(SemigroupIdeal::unit(ideal_.base()));
  powers_.push_back(ideal_);
}

const SemigroupIdeal& PowerTower::power(Int n) {
  while (static_cast<Int>(powers_.size()) <= n) powers_.push_back(multiply(powers_.back(), ideal_));
  return powers_[static_cast<std::size_t>(n)];
}

SemigroupIdeal PowerTower::reduction_times(Int n) { return multiply(reduction_, power(n)); }

Int PowerTower::quotient_length(Int n) { return relative_length(power(n + 1), reduction_times(n)); }

Int PowerTower::reduction_number(std::optional<Int> cap) {
  if (reduction_number_) return *reduction_number_;
  const Int limit = cap.value_or(ideal_.semigroup().conductor() + ideal_.min_valuation());
  for (Int n = 0; n <= limit; ++n) {
    if (power(n + 1) == reduction_times(n)) {
      reduction_number_ = n;
      return n;
    }
  }
  throw Error(ErrorKind::NotAReduction, "I^{n+1} != QI^n for every n <= " + std::to_string(limit));
}

std::vector<Int> hilbert_function(const SemigroupIdeal& ideal, std::optional<Int> n_max) {
  PowerTower tower(ideal);
  const Int top = n_max ? *n_max : adaptive_top(ideal, tower.reduction_number());
  std::vector<Int> hf;
  hf.reserve(static_cast<std::size_t>(top + 1));
  for (Int n = 0; n <= top; ++n) hf.push_back(colength(tower.power(n + 1)));
  return hf;
}

Int stabilization_index(const std::vector<Int>& hf, Int e0) {
  const Int size = static_cast<Int>(hf.size());
  if (size < 4) throw Error(ErrorKind::NotStabilized, "table too short to certify linearity");
  for (Int n = size - 3; n < size; ++n) {
    if (hf[static_cast<std::size_t>(n)] - hf[static_cast<std::size_t>(n - 1)] != e0) {
      throw Error(ErrorKind::NotStabilized, "last differences of the Hilbert function are not e0");
    }
  }
  Int n0 = size - 1;
  while (n0 > 0 && hf[static_cast<std::size_t>(n0)] - hf[static_cast<std::size_t>(n0 - 1)] == e0) --n0;
  return n0;
}

Int e1_via_polynomial(const std::vector<Int>& hf, Int e0) {
  const Int n0 = stabilization_index(hf, e0);
  const Int e1 = e0 * (n0 + 1) - hf[static_cast<std::size_t>(n0)];
  for (Int n = n0; n < static_cast<Int>(hf.size()); ++n) {
    if (e0 * (n + 1) - hf[static_cast<std::size_t>(n)] != e1) {
      throw Error(ErrorKind::OracleMismatch, "Hilbert function is not linear past its stabilization index");
    }
  }
  return e1;
}

Int e1_via_polynomial(const HilbertData& data) { return e1_via_polynomial(data.hf, data.e0); }

Int e1_via_huckaba(PowerTower& tower) {
  const Int r = tower.reduction_number();
  Int total = 0;
  for (Int n = 0; n < r; ++n) total += tower.quotient_length(n);
  return total;
}

Int e1_via_huckaba(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  return e1_via_huckaba(tower);
}

std::vector<Int> h_polynomial(const std::vector<Int>& hf, Int e0) {
  stabilization_index(hf, e0);
  std::vector<Int> h;
  Int prev_step = 0;
  for (std::size_t i = 0; i < hf.size(); ++i) {
    const Int step = i == 0 ? hf[0] : hf[i] - hf[i - 1];
    h.push_back(step - prev_step);
    prev_step = step;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<Int> h_polynomial(const HilbertData& data) { return h_polynomial(data.hf, data.e0); }

Int multiplicity(const SemigroupIdeal& ideal) {
  auto hf = hilbert_function(ideal);
  const Int a = ideal.min_valuation();
  const Int slope = hf.back() - hf[hf.size() - 2];
  if (slope != a) {
    throw Error(ErrorKind::OracleMismatch,
                "least valuation " + std::to_string(a) + " but Hilbert slope " + std::to_string(slope));
  }
  return a;
}

HilbertData compute_hilbert(PowerTower& tower) {
  const SemigroupIdeal& ideal = tower.ideal();
  HilbertData data;
  data.e0 = ideal.min_valuation();
  const Int top = adaptive_top(ideal, tower.reduction_number());
  data.hf.reserve(static_cast<std::size_t>(top + 1));
  for (Int n = 0; n <= top; ++n) data.hf.push_back(colength(tower.power(n + 1)));
  const Int slope = data.hf.back() - data.hf[data.hf.size() - 2];
  if (slope != data.e0) throw Error(ErrorKind::OracleMismatch, "Hilbert slope differs from the least valuation");
  data.stabilization_index = stabilization_index(data.hf, data.e0);
  data.e1_polynomial = e1_via_polynomial(data.hf, data.e0);
  data.e1_huckaba = e1_via_huckaba(tower);
  if (data.e1_polynomial != data.e1_huckaba) {
    throw Error(ErrorKind::OracleMismatch, "e1 from the Hilbert polynomial (" + std::to_string(data.e1_polynomial) +
                                               ") differs from the length sum (" + std::to_string(data.e1_huckaba) + ")");
  }
  data.h_poly = h_polynomial(data.hf, data.e0);
  return data;
}

HilbertData compute_hilbert(const SemigroupIdeal& ideal) {
  PowerTower tower(ideal);
  return compute_hilbert(tower);
}

}  // namespace stretchkit
