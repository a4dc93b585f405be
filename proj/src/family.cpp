#include "stretchkit/family.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "stretchkit/error.hpp"

namespace stretchkit {
namespace {

Int choose2(Int n) { return n * (n - 1) / 2; }

std::string show(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

std::string show(bool value) { return value ? "true" : "false"; }

struct Schema {
  Int ell;
  Int min_e;
  // Listed b_n as affine functions of b: {n, slope, offset} meaning b_n = slope*b + offset.
  std::vector<std::array<Int, 3>> listed;
  PresetClaim claim;
};

const std::map<std::string, Schema, std::less<>>& schemas() {
  static const std::map<std::string, Schema, std::less<>> table{
      {"ex1", {2, 3, {{3, 3, -2}}, {2, 2, {}, 0, true}}},
      {"ex2", {2, 4, {{3, 3, -1}, {4, 4, -3}}, {2, 3, {2}, 1, false}}},
      {"ex3-1", {3, 5, {{4, 4, -3}}, {3, 3, {}, 2, true}}},
      {"ex3-2", {2, 5, {{3, 3, -1}, {4, 4, -2}, {5, 5, -4}}, {2, 4, {2, 3}, 2, false}}},
      {"ex4-1", {3, 5, {{4, 4, -2}, {5, 5, -4}}, {3, 4, {3}, 3, false}}},
      {"ex4-2", {2, 6, {{3, 3, -1}, {4, 4, -2}, {5, 5, -3}, {6, 6, -5}}, {2, 5, {2, 3, 4}, 3, false}}},
  };
  return table;
}

}  // namespace

Int half_up(Int b) { return (b + 1) / 2; }

std::vector<Violation> validate(const FamilyParams& p) {
  std::vector<Violation> out;
  auto fail = [&](std::string what, std::string detail) { out.push_back({std::move(what), std::move(detail)}); };
  if (p.b < 2) fail("b >= 2", "b = " + std::to_string(p.b));
  if (p.ell < 2 || p.ell > p.e - 1) {
    fail("2 <= ell <= e-1", "ell = " + std::to_string(p.ell) + ", e = " + std::to_string(p.e));
    return out;
  }
  for (Int n = p.ell + 1; n <= p.e - 1; ++n) {
    if (!p.b_table.count(n)) fail("b_n given for ell+1 <= n <= e-1", "missing b_" + std::to_string(n));
  }
  for (const auto& [n, bn] : p.b_table) {
    if (n <= p.ell || n >= p.e) fail("b_n given for ell+1 <= n <= e-1", "unexpected b_" + std::to_string(n));
  }
  if (!out.empty()) return out;
  const Int h = half_up(p.b);
  for (Int n = p.ell + 1; n <= p.e - 1; ++n) {
    const Int bn = p.b_table.at(n);
    if (bn < h * n + 1) {
      fail("ceil(b/2)n+1 <= b_n", "b_" + std::to_string(n) + " = " + std::to_string(bn) + " < " +
                                      std::to_string(h * n + 1));
    }
    if (bn > (p.b - 1) * n + p.ell) {
      fail("b_n <= (b-1)n+ell", "b_" + std::to_string(n) + " = " + std::to_string(bn) + " > " +
                                    std::to_string((p.b - 1) * n + p.ell));
    }
  }
  if (p.ell + 1 <= p.e - 1) {
    const Int first = p.b_table.at(p.ell + 1);
    const Int bound = p.b * p.ell + p.b - 1;
    if (first > bound) {
      fail("b_{ell+1} <= b*ell+b-1", "b_" + std::to_string(p.ell + 1) + " = " + std::to_string(first) + " > " +
                                         std::to_string(bound));
    }
  }
  for (Int n = p.ell + 1; n <= p.e - 2; ++n) {
    const Int cur = p.b_table.at(n);
    const Int next = p.b_table.at(n + 1);
    if (next > cur + h) {
      fail("b_{n+1} <= b_n+ceil(b/2)", "b_" + std::to_string(n + 1) + " = " + std::to_string(next) + " > " +
                                           std::to_string(cur + h));
    }
  }
  return out;
}

Int expected_r(const FamilyParams& p) {
  Int r = p.ell;
  for (const auto& [n, bn] : p.b_table) {
    if (n < p.e && bn > p.b * n - n + 1) r = std::max(r, n);
  }
  return r;
}

NumericalSemigroup build_semigroup(const FamilyParams& p) {
  std::vector<Int> gens{p.e, p.b * p.e + 1};
  for (const auto& [n, bn] : p.b_table) gens.push_back(bn * p.e + n);
  return NumericalSemigroup::from_generators(gens);
}

FamilyPrediction expected_profile(const FamilyParams& p) {
  FamilyPrediction out;
  out.k = p.ell;
  out.r = expected_r(p);
  std::set<Int> lambda;
  Int tail = 0;
  for (Int n = p.ell + 1; n <= out.r; ++n) {
    const Int bn = p.b_table.at(n);
    lambda.insert(p.b * n - bn + 1);
    tail += bn - p.b * n + n - 1;
  }
  out.lambda_set.assign(lambda.begin(), lambda.end());
  out.hf_constant = p.e - 1 + choose2(p.ell) + tail;
  out.type = p.e - p.ell;
  out.embedding_dimension = p.e - p.ell + 1;
  out.g_cohen_macaulay = out.r == p.ell;
  return out;
}

bool FamilyReport::passed() const {
  return !assertions.empty() && std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

FamilyReport verify_family(const FamilyParams& params) {
  FamilyReport report;
  report.params = params;
  auto check = [&](std::string name, auto expected, auto actual) {
    std::ostringstream e;
    std::ostringstream a;
    if constexpr (std::is_same_v<decltype(expected), bool>) {
      e << show(expected);
      a << show(actual);
    } else if constexpr (std::is_same_v<decltype(expected), std::vector<Int>>) {
      e << show(expected);
      a << show(actual);
    } else {
      e << expected;
      a << actual;
    }
    report.assertions.push_back({std::move(name), expected == actual, e.str(), a.str()});
  };

  auto violations = validate(params);
  if (!violations.empty()) {
    for (const auto& v : violations) report.assertions.push_back({"valid: " + v.constraint, false, "holds", v.detail});
    return report;
  }
  report.prediction = expected_profile(params);
  const auto& pred = report.prediction;
  auto semigroup = std::make_shared<const NumericalSemigroup>(build_semigroup(params));
  report.semigroup = semigroup->to_string();
  report.classification = classify(SemigroupIdeal::maximal(semigroup));
  const auto& prof = report.classification.profile;
  const auto& hd = report.classification.hilbert;

  check("stretched", true, prof.stretched);
  check("e0 = e", params.e, hd.e0);
  check("k = ell", pred.k, prof.k);
  check("r", pred.r, prof.r);
  check("lambda", pred.lambda_set, prof.lambda_set);
  check("|lambda| = r - ell", pred.r - params.ell, static_cast<Int>(pred.lambda_set.size()));
  bool tail_ok = true;
  for (Int n = std::max<Int>(pred.r - 1, 0); n < static_cast<Int>(hd.hf.size()); ++n) {
    tail_ok = tail_ok && hd.hf[static_cast<std::size_t>(n)] == params.e * (n + 1) - pred.hf_constant;
  }
  check("hilbert function tail", true, tail_ok);
  check("hf constant = e1", pred.hf_constant, hd.e1_polynomial);
  check("type = e - ell", pred.type, semigroup->type());
  check("embedding dimension = e - ell + 1", pred.embedding_dimension, semigroup->embedding_dimension());
  check("G CM iff r = ell", pred.g_cohen_macaulay, prof.g_cohen_macaulay);
  const bool slack = params.ell + 1 > params.e - 1 ||
                     params.b_table.at(params.ell + 1) <= params.b * params.ell + params.b - params.ell;
  check("r = ell iff b_{ell+1} <= b*ell+b-ell", slack, pred.r == params.ell);
  check("classification checks", true, !report.classification.has_failures());
  return report;
}

void require_family(const FamilyReport& report) {
  if (report.passed()) return;
  std::ostringstream os;
  os << "family b=" << report.params.b << " e=" << report.params.e << " ell=" << report.params.ell << " <"
     << report.semigroup << "> fails";
  for (const auto& a : report.assertions) {
    if (!a.pass) os << " [" << a.name << ": expected " << a.expected << ", got " << a.actual << "]";
  }
  throw Error(ErrorKind::TheoremViolation, os.str());
}

std::vector<FamilyParams> enumerate_families(Int b, Int e, std::size_t cap) {
  std::vector<FamilyParams> out;
  const Int h = half_up(b);
  for (Int ell = 2; ell <= e - 1 && out.size() < cap; ++ell) {
    FamilyParams base{b, e, ell, {}};
    std::function<void(Int, Int)> extend = [&](Int n, Int prev) {
      if (out.size() >= cap) return;
      if (n > e - 1) {
        out.push_back(base);
        return;
      }
      const Int lo = h * n + 1;
      const Int hi = std::min(n == ell + 1 ? b * ell + b - 1 : prev + h, (b - 1) * n + ell);
      for (Int bn = lo; bn <= hi; ++bn) {
        base.b_table[n] = bn;
        extend(n + 1, bn);
      }
      base.b_table.erase(n);
    };
    extend(ell + 1, 0);
  }
  return out;
}

FamilyParams sample_family(std::mt19937_64& rng, Int b, Int e, Int ell) {
  FamilyParams p{b, e, ell, {}};
  const Int h = half_up(b);
  Int prev = 0;
  for (Int n = ell + 1; n <= e - 1; ++n) {
    const Int lo = h * n + 1;
    const Int hi = std::min(n == ell + 1 ? b * ell + b - 1 : prev + h, (b - 1) * n + ell);
    std::uniform_int_distribution<Int> pick(lo, hi);
    prev = pick(rng);
    p.b_table[n] = prev;
  }
  return p;
}

std::optional<FamilyParams> preset(std::string_view name, Int b, Int e) {
  auto it = schemas().find(name);
  if (it == schemas().end()) throw Error(ErrorKind::ParseError, "unknown preset '" + std::string(name) + "'");
  const Schema& s = it->second;
  if (e < s.min_e) return std::nullopt;
  FamilyParams p{b, e, s.ell, {}};
  Int last_n = s.ell;
  Int last_b = 0;
  for (const auto& [n, slope, offset] : s.listed) {
    if (n > e - 1) break;
    p.b_table[n] = slope * b + offset;
    last_n = n;
    last_b = slope * b + offset;
  }
  for (Int n = last_n + 1; n <= e - 1; ++n) {
    last_b = std::min(last_b + half_up(b), (b - 1) * n + s.ell);
    p.b_table[n] = last_b;
  }
  return p;
}

PresetClaim preset_claim(std::string_view name) {
  auto it = schemas().find(name);
  if (it == schemas().end()) throw Error(ErrorKind::ParseError, "unknown preset '" + std::string(name) + "'");
  return it->second.claim;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"ex1", "ex2", "ex3-1", "ex3-2", "ex4-1", "ex4-2"};
  return names;
}

}  // namespace stretchkit
