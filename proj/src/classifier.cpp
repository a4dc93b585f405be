#include "stretchkit/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stretchkit/error.hpp"

namespace stretchkit {
namespace {

Int choose2(Int n) { return n * (n - 1) / 2; }

std::string join(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ']';
  return os.str();
}

Int compute_n_nilp(PowerTower& tower, Int r) {
  for (Int n = 0; n <= r; ++n) {
    if (contains_ideal(tower.reduction(), tower.power(n + 1))) return n;
  }
  return r;
}

std::vector<Int> compute_lambda(PowerTower& tower, Int r) {
  std::vector<Int> out;
  for (Int n = 1; n < r; ++n) {
    auto lhs = intersect(tower.reduction_times(n - 1), tower.power(n + 1));
    if (!(lhs == tower.reduction_times(n))) out.push_back(n);
  }
  return out;
}

StretchedWitness compute_witness(PowerTower& tower) {
  const auto& q = tower.reduction();
  StretchedWitness w;
  w.intersection_equal = intersect(q, tower.power(2)) == tower.reduction_times(1);
  w.length = relative_length(sum(q, tower.power(2)), sum(q, tower.power(3)));
  return w;
}

/// Accumulates checks for one report.
class CheckList {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void skip(std::string name) { checks_.push_back({std::move(name), CheckStatus::NotApplicable, {}}); }
  void add_if(bool applies, std::string name, bool ok, std::string detail = {}) {
    if (applies) {
      add(std::move(name), ok, std::move(detail));
    } else {
      skip(std::move(name));
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

// Predicted numerators l + (e0 - l - c) z + tail, with `tail` listing the
// coefficients of z^2, z^3, ...
std::vector<Int> numerator(Int colength, Int e0, Int c, std::vector<Int> tail) {
  std::vector<Int> h{colength, e0 - colength - c};
  h.insert(h.end(), tail.begin(), tail.end());
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

struct Context {
  const HilbertData& hd;
  const ReductionProfile& p;
  PowerTower& tower;
  Int e0;
  Int e1;
  Int l;
  Int rank;
  Int ql(Int n) const { return p.quotient_length(n); }
  bool lambda_is(std::vector<Int> expected) const { return p.lambda_set == expected; }
  bool reduces_by(Int n) const { return p.r <= n; }  // I^{n+1} = Q I^n
};

void universal_checks(const Context& c, CheckList& out) {
  out.add("e1_routes_agree", c.hd.e1_polynomial == c.hd.e1_huckaba,
          "polynomial " + std::to_string(c.hd.e1_polynomial) + ", length sum " + std::to_string(c.hd.e1_huckaba));
  out.add("nagata_bound", c.rank >= 0, "rank " + std::to_string(c.rank));
  out.add("nagata_equality", (c.rank == 0) == c.reduces_by(1));
  const Int ll = relative_length(c.tower.ideal(), c.tower.power(2));
  out.add("k_identity", c.e0 == ll + c.p.k - 1);
  const auto& h = c.hd.h_poly;
  Int s0 = 0;
  Int s1 = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    s0 += h[i];
    s1 += static_cast<Int>(i) * h[i];
  }
  out.add("hilbert_numerator", s0 == c.e0 && s1 == c.e1 && !h.empty() && h[0] == c.l, join(h));
  // QI^{n-1} cap I^{n+1} sits inside Q cap I^{n+1}, so a CM G forces an empty lambda set.
  out.add("cm_empty_lambda", !c.p.g_cohen_macaulay || c.p.lambda_set.empty(), join(c.p.lambda_set));
}

void stretched_structure_checks(const Context& c, CheckList& out) {
  const auto& p = c.p;
  const Int r = p.r;
  const Int k = p.k;
  const auto& lam = p.lambda_set;
  const Int lam_sum = std::accumulate(lam.begin(), lam.end(), Int{0});
  const Int lam_size = static_cast<Int>(lam.size());

  out.add("stretched_rank_positive", c.rank >= 1);
  out.add("k_equals_nilpotency", k == p.n_nilp, "k " + std::to_string(k) + ", n_nilp " + std::to_string(p.n_nilp));
  out.add("k_at_most_r", k <= r);
  out.add("lambda_range", std::all_of(lam.begin(), lam.end(), [&](Int n) { return n >= 2 && n <= r - 1; }),
          join(lam));
  out.add("lambda_size", lam_size == r - k, "|L| " + std::to_string(lam_size) + ", r-k " + std::to_string(r - k));

  Int ql_sum = 0;
  for (Int n = 1; n <= r; ++n) ql_sum += c.ql(n);
  const Int predicted = choose2(r) - lam_sum + lam_size;
  out.add("quotient_sum", ql_sum == predicted, std::to_string(ql_sum) + " vs " + std::to_string(predicted));
  out.add("e1_lambda_formula", c.e1 == c.e0 - c.l + predicted);

  bool monotone = true;
  bool step = true;
  for (Int n = 1; n <= r + 1; ++n) {
    monotone = monotone && c.ql(n) >= c.ql(n + 1);
    auto lower = sum(c.tower.reduction_times(n), c.tower.power(n + 2));
    step = step && relative_length(c.tower.power(n + 1), lower) <= 1;
  }
  out.add("quotient_monotone", monotone, join(p.quotient_lengths));
  out.add("graded_step_at_most_one", step);

  bool mod_q = true;
  for (Int n = 1; n <= k; ++n) {
    auto top = sum(c.tower.power(n + 1), c.tower.reduction());
    mod_q = mod_q && relative_length(top, c.tower.reduction()) == k - n;
  }
  out.add("colength_modulo_q", mod_q);

  bool recursion = true;
  for (Int n = 2; n <= r - 1; ++n) {
    const bool in_lambda = std::find(lam.begin(), lam.end(), n) != lam.end();
    recursion = recursion && c.ql(n) == c.ql(n - 1) - (in_lambda ? 0 : 1);
  }
  out.add("quotient_recursion", recursion);
}

void cohen_macaulay_checks(const Context& c, CheckList& out) {
  const auto& p = c.p;
  const Int k = p.k;
  out.add("cm_lower_bound", c.rank >= choose2(k));
  const bool attains = c.rank == choose2(k);
  const bool r_is_k = p.r == k;
  out.add("cm_equivalence", attains == r_is_k && r_is_k == p.g_cohen_macaulay);

  bool consequences = true;
  if (p.g_cohen_macaulay) {
    for (Int n = 1; n <= k; ++n) consequences = consequences && c.ql(n) == k - n;
    std::vector<Int> tail(static_cast<std::size_t>(std::max<Int>(k - 1, 0)), 1);
    consequences = consequences && c.hd.h_poly == numerator(c.l, c.e0, k - 1, tail);
  }
  out.add_if(p.g_cohen_macaulay, "cm_consequences", consequences, join(c.hd.h_poly));

  // k = 3: rank 3 <=> I^4 = QI^3 <=> G CM, and rank 4 <=> l(I^3/QI^2) =
  // l(I^4/QI^3) = 1 with I^5 = QI^4.
  const bool k3 = k == 3;
  if (k3) {
    const bool rank3 = c.rank == 3;
    bool ok = rank3 == c.reduces_by(3) && c.reduces_by(3) == p.g_cohen_macaulay;
    if (rank3) {
      ok = ok && c.ql(2) == 1 && p.r == 3 && c.lambda_is({}) && c.hd.h_poly == numerator(c.l, c.e0, 2, {1, 1});
    }
    out.add("k3_rank3", ok);
    const bool rank4 = c.rank == 4;
    const bool structure = c.ql(2) == 1 && c.ql(3) == 1 && c.reduces_by(4);
    ok = rank4 == structure;
    if (rank4) {
      ok = ok && c.lambda_is({3}) && c.hd.h_poly == numerator(c.l, c.e0, 2, {1, 0, 1}) && !p.g_cohen_macaulay;
    }
    out.add("k3_rank4", ok);
  } else {
    out.skip("k3_rank3");
    out.skip("k3_rank4");
  }
}

struct Pattern {
  const char* name;
  Int rank;
  bool matches;
  bool consequences;
};

std::vector<Pattern> small_rank_patterns(const Context& c) {
  const auto& p = c.p;
  const bool cm = p.g_cohen_macaulay;
  std::vector<Pattern> patterns;
  patterns.push_back({"rank1", 1, c.reduces_by(2),
                      p.k == 2 && p.r == 2 && c.ql(1) == 1 && c.lambda_is({}) && cm &&
                          c.hd.h_poly == numerator(c.l, c.e0, 1, {1})});
  patterns.push_back({"rank2", 2, c.ql(1) == 1 && c.ql(2) == 1 && c.reduces_by(3),
                      c.lambda_is({2}) && !cm && c.hd.h_poly == numerator(c.l, c.e0, 1, {0, 1})});
  patterns.push_back({"rank3.I", 3, c.ql(1) == 2 && c.reduces_by(3),
                      c.ql(2) == 1 && c.lambda_is({}) && cm && c.hd.h_poly == numerator(c.l, c.e0, 2, {1, 1})});
  patterns.push_back({"rank3.II", 3, c.ql(1) == 1 && c.ql(2) == 1 && c.ql(3) == 1 && c.reduces_by(4),
                      c.lambda_is({2, 3}) && !cm && c.hd.h_poly == numerator(c.l, c.e0, 1, {0, 0, 1})});
  patterns.push_back({"rank4.I", 4, c.ql(1) == 2 && c.ql(2) == 1 && c.ql(3) == 1 && c.reduces_by(4),
                      c.lambda_is({3}) && !cm && c.hd.h_poly == numerator(c.l, c.e0, 2, {1, 0, 1})});
  patterns.push_back({"rank4.II", 4,
                      c.ql(1) == 1 && c.ql(2) == 1 && c.ql(3) == 1 && c.ql(4) == 1 && c.reduces_by(5),
                      c.lambda_is({2, 3, 4}) && !cm && c.hd.h_poly == numerator(c.l, c.e0, 1, {0, 0, 0, 1})});
  return patterns;
}

std::string small_rank_checks(const Context& c, CheckList& out) {
  auto patterns = small_rank_patterns(c);
  std::string matched;
  for (Int rank = 1; rank <= 4; ++rank) {
    bool structural = false;
    int count = 0;
    for (const auto& pat : patterns) {
      if (pat.rank != rank) continue;
      structural = structural || pat.matches;
      count += pat.matches ? 1 : 0;
    }
    const std::string base = "rank" + std::to_string(rank);
    out.add(base, (c.rank == rank) == structural,
            "rank " + std::to_string(c.rank) + ", structural " + (structural ? "yes" : "no"));
    if (count > 1) out.add(base + ".exclusive", false);
  }
  for (const auto& pat : patterns) {
    const bool applies = pat.matches && c.rank == pat.rank;
    if (applies) matched = pat.name;
    if (pat.rank == 1) {
      out.add_if(applies, "rank1.consequences", pat.consequences, join(c.hd.h_poly));
    } else if (pat.rank == 2) {
      out.add_if(applies, "rank2.consequences", pat.consequences, join(c.hd.h_poly));
    } else {
      out.add_if(applies, pat.name, pat.consequences, join(c.hd.h_poly));
    }
  }
  const auto hits = std::count_if(patterns.begin(), patterns.end(), [](const Pattern& pat) { return pat.matches; });
  if (c.rank <= 4) {
    out.add("small_rank_classified", hits == 1, std::to_string(hits) + " patterns match");
  } else {
    out.add("small_rank_classified", hits == 0, "rank above 4 but a small-rank pattern matches");
  }
  return matched;
}

}  // namespace

Int ReductionProfile::quotient_length(Int n) const {
  if (n < 1 || n > r) return 0;
  return quotient_lengths[static_cast<std::size_t>(n - 1)];
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "n/a";
}

bool ClassificationReport::has_failures() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::vector<Check> ClassificationReport::failures() const {
  std::vector<Check> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const Check& c) { return c.status == CheckStatus::Fail; });
  return out;
}

const Check* ClassificationReport::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

Int reduction_number(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  return tower.reduction_number();
}

StretchedWitness is_stretched(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  return compute_witness(tower);
}

Int k_invariant(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  const Int k = tower.quotient_length(1) + 1;
  const Int e0 = colength(reduction);
  const Int ll = relative_length(ideal, tower.power(2));
  if (e0 != ll + k - 1) {
    throw Error(ErrorKind::OracleMismatch, "e0 = " + std::to_string(e0) + " but l(I/I^2) + k - 1 = " +
                                               std::to_string(ll + k - 1));
  }
  return k;
}

std::vector<Int> lambda_set(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  return compute_lambda(tower, tower.reduction_number());
}

bool is_g_cohen_macaulay(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  const Int r = tower.reduction_number();
  bool cm = true;
  for (Int n = 1; n <= r && cm; ++n) {
    cm = intersect(tower.power(n + 1), reduction) == tower.reduction_times(n);
  }
  if (compute_witness(tower).stretched()) {
    const Int k = tower.quotient_length(1) + 1;
    if (cm != (r == k)) {
      throw Error(ErrorKind::TheoremViolation, "stretched ideal over <" + ideal.semigroup().to_string() +
                                                   "> with r = " + std::to_string(r) + ", k = " +
                                                   std::to_string(k) + " but G CM = " + (cm ? "yes" : "no"));
    }
  }
  return cm;
}

ReductionProfile reduction_profile(PowerTower& tower, const HilbertData& hilbert) {
  ReductionProfile p;
  const auto& ideal = tower.ideal();
  p.q_valuation = tower.reduction().min_valuation();
  p.colength = colength(ideal);
  p.r = tower.reduction_number();
  p.n_nilp = compute_n_nilp(tower, p.r);
  p.k = tower.quotient_length(1) + 1;
  for (Int n = 1; n <= p.r; ++n) {
    p.quotient_lengths.push_back(tower.quotient_length(n));
    p.vv_flags.push_back(intersect(tower.power(n + 1), tower.reduction()) == tower.reduction_times(n));
  }
  p.lambda_set = compute_lambda(tower, p.r);
  p.witness = compute_witness(tower);
  p.stretched = p.witness.stretched();
  p.g_cohen_macaulay = std::all_of(p.vv_flags.begin(), p.vv_flags.end(), [](bool b) { return b; });
  p.rank = hilbert.e1_polynomial - (hilbert.e0 - p.colength);
  return p;
}

ClassificationReport classify(const SemigroupIdeal& ideal) {
  PowerTower tower(ideal);
  return classify(ideal, tower.reduction());
}

ClassificationReport classify(const SemigroupIdeal& ideal, const SemigroupIdeal& reduction) {
  PowerTower tower(ideal, reduction);
  ClassificationReport report;
  report.semigroup = ideal.semigroup().to_string();
  report.ideal_generators = ideal.generators();
  report.hilbert = compute_hilbert(tower);
  report.profile = reduction_profile(tower, report.hilbert);

  Context ctx{report.hilbert, report.profile, tower, report.hilbert.e0, report.hilbert.e1_polynomial,
              report.profile.colength, report.profile.rank};
  CheckList checks;
  universal_checks(ctx, checks);
  report.checks = checks.take();

  // Stretched-only characterizations are still listed for non-stretched
  // inputs so corpus records share one column set.
  CheckList stretched_checks;
  stretched_structure_checks(ctx, stretched_checks);
  cohen_macaulay_checks(ctx, stretched_checks);
  auto pattern = small_rank_checks(ctx, stretched_checks);
  for (auto& c : stretched_checks.take()) {
    if (!report.profile.stretched) {
      c.status = CheckStatus::NotApplicable;
      c.detail.clear();
    }
    report.checks.push_back(std::move(c));
  }
  if (report.profile.stretched) report.pattern = pattern;
  return report;
}

void require_consistent(const ClassificationReport& report) {
  auto failed = report.failures();
  if (failed.empty()) return;
  std::ostringstream os;
  os << "instance <" << report.semigroup << "> ideal " << join(report.ideal_generators) << " fails";
  for (const auto& c : failed) os << ' ' << c.name << (c.detail.empty() ? "" : "(" + c.detail + ")");
  throw Error(ErrorKind::TheoremViolation, os.str());
}

}  // namespace stretchkit
