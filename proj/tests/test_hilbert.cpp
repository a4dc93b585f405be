#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "stretchkit/error.hpp"
#include "stretchkit/hilbert.hpp"

using namespace stretchkit;

namespace {

SemigroupIdeal m_of(std::string_view literal) { return SemigroupIdeal::maximal(make_semigroup(literal)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& ex) {
    return ex.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("Hilbert function tails") {
  const auto hf7 = hilbert_function(m_of("7,15,18,26,27"), 20);
  for (Int n = 2; n <= 20; ++n) CHECK(hf7[static_cast<std::size_t>(n)] == 7 * (n + 1) - 9);
  const auto hf8 = hilbert_function(m_of("8,17,21,30,39,52"), 20);
  for (Int n = 3; n <= 20; ++n) CHECK(hf8[static_cast<std::size_t>(n)] == 8 * (n + 1) - 11);
  CHECK(hf8[2] != 8 * 3 - 11);
  CHECK(hilbert_function(m_of("6,13,27,34,41"), 2)[2] == 12);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(m_of("6,13,33,34,41")) == 6);
  CHECK(multiplicity(m_of("2,3")) == 2);
  CHECK(multiplicity(m_of("7,15,18,26,27")) == 7);
  auto h = make_semigroup(std::string_view("3,5"));
  const std::vector<Int> vals{5, 6};
  CHECK(multiplicity(SemigroupIdeal::from_valuations(h, vals)) == 5);
}

TEST_CASE("first Hilbert coefficient") {
  for (auto [literal, e1] : std::vector<std::pair<std::string_view, Int>>{
           {"7,15,18,26,27", 9}, {"8,17,21,30,39,52", 11}, {"2,3", 1}, {"6,13,33,40,47", 9}}) {
    const auto m = m_of(literal);
    const auto hd = compute_hilbert(m);
    CHECK(hd.e1_polynomial == e1);
    CHECK(e1_via_polynomial(hd) == e1);
    CHECK(e1_via_huckaba(m, SemigroupIdeal::principal(m.base(), m.min_valuation())) == e1);
  }
}

TEST_CASE("h-polynomials") {
  CHECK(compute_hilbert(m_of("6,13,33,40,47,48")).h_poly == std::vector<Int>{1, 4, 0, 0, 0, 1});
  CHECK(compute_hilbert(m_of("6,13,40,41")).h_poly == std::vector<Int>{1, 3, 1, 0, 1});
  CHECK(compute_hilbert(m_of("2,3")).h_poly == std::vector<Int>{1, 1});
  CHECK(compute_hilbert(m_of("6,13,27,34,41")).h_poly == std::vector<Int>{1, 4, 1});
  CHECK(compute_hilbert(m_of("8,17,21,30,39,52")).h_poly == std::vector<Int>{1, 5, 1, 0, 1});
  CHECK(h_polynomial({1, 3, 5, 7}, 2) == std::vector<Int>{1, 1});
}

TEST_CASE("power tower") {
  PowerTower tower(m_of("6,13,27,34,41"));
  CHECK(tower.reduction_number() == 2);
  CHECK(tower.quotient_length(1) == 1);
  CHECK(tower.quotient_length(2) == 0);
  CHECK(tower.power(3) == power(tower.ideal(), 3));
  CHECK(tower.reduction_times(2) == multiply(tower.reduction(), power(tower.ideal(), 2)));
  PowerTower six(m_of("6,13,33,40,47,48"));
  CHECK(six.reduction_number() == 5);
  PowerTower dvr(m_of("2,3"));
  CHECK(dvr.reduction_number() == 1);
}

TEST_CASE("errors") {
  auto h = make_semigroup(std::string_view("3,5"));
  CHECK(kind_of([&] { hilbert_function(SemigroupIdeal::unit(h)); }) == ErrorKind::UnitIdeal);
  CHECK(kind_of([&] { hilbert_function(SemigroupIdeal::zero(h)); }) == ErrorKind::ZeroIdeal);
  CHECK(kind_of([] { stabilization_index({1, 2, 4, 7}, 2); }) == ErrorKind::NotStabilized);
  const auto m = SemigroupIdeal::maximal(h);
  const std::vector<Int> five{5};
  CHECK(kind_of([&] { PowerTower(SemigroupIdeal::from_valuations(h, five), SemigroupIdeal::principal(h, 3)); }) ==
        ErrorKind::NotNested);
  // (u^5) is inside m but m^{n+1} = (u^5) m^n never holds.
  PowerTower bad(m, SemigroupIdeal::principal(h, 5));
  CHECK(kind_of([&] { bad.reduction_number(); }) == ErrorKind::NotAReduction);
  CHECK(kind_of([&] { bad.reduction_number(6); }) == ErrorKind::NotAReduction);
}

TEST_CASE("agrees with the brute-force oracle") {
  const std::vector<std::vector<Int>> cases{{2, 3},
                                            {3, 5},
                                            {3, 7, 8},
                                            {4, 5, 6, 7},
                                            {5, 6, 7},
                                            {4, 6, 9},
                                            {5, 7, 9, 11},
                                            {6, 13, 27, 34, 41},
                                            {7, 15, 18, 26, 27},
                                            {8, 17, 21, 30, 39, 52},
                                            {6, 13, 33, 40, 47},
                                            {9, 10, 23}};
  for (const auto& gens : cases) {
    auto base = make_semigroup(gens);
    const auto m = SemigroupIdeal::maximal(base);
    const auto hd = compute_hilbert(m);
    const Int top = static_cast<Int>(hd.hf.size()) - 1;
    const auto ref = oracle::profile(gens, {base->minimal_generators()}, top);
    INFO("H=<" << base->to_string() << ">");
    CHECK(hd.hf == ref.hf);
    CHECK(hd.e0 == ref.e0);
    CHECK(hd.e1_polynomial == ref.e1);
    CHECK(hd.h_poly == ref.h_poly);
    CHECK(std::accumulate(hd.h_poly.begin(), hd.h_poly.end(), Int{0}) == hd.e0);
  }
}
