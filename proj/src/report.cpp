#include "stretchkit/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "stretchkit/error.hpp"

namespace stretchkit {
namespace {

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "n/a") return CheckStatus::NotApplicable;
  throw Error(ErrorKind::ParseError, "unknown check status '" + s + "'");
}

std::string braces(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

std::string brackets(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ']';
  return os.str();
}

}  // namespace

Json to_json(const SemigroupIdeal& ideal) {
  Json j;
  j["base"] = ideal.semigroup().minimal_generators();
  if (ideal.is_zero()) {
    j["finite_part"] = Json::array();
    j["threshold"] = nullptr;
  } else {
    j["finite_part"] = ideal.finite_part();
    j["threshold"] = ideal.threshold();
  }
  return j;
}

SemigroupIdeal ideal_from_json(const Json& j) {
  try {
    auto gens = j.at("base").get<std::vector<Int>>();
    auto base = make_semigroup(gens);
    if (j.at("threshold").is_null()) return SemigroupIdeal::zero(base);
    auto finite = j.at("finite_part").get<std::vector<Int>>();
    return SemigroupIdeal::from_set(base, finite, j.at("threshold").get<Int>());
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("ideal JSON: ") + ex.what());
  }
}

Json to_json(const HilbertData& d) {
  return Json{{"hf", d.hf},
              {"e0", d.e0},
              {"e1", d.e1_polynomial},
              {"e1_polynomial", d.e1_polynomial},
              {"e1_huckaba", d.e1_huckaba},
              {"h_poly", d.h_poly},
              {"n0", d.stabilization_index}};
}

HilbertData hilbert_from_json(const Json& j) {
  try {
    HilbertData d;
    d.hf = j.at("hf").get<std::vector<Int>>();
    d.e0 = j.at("e0").get<Int>();
    d.e1_polynomial = j.value("e1_polynomial", j.at("e1").get<Int>());
    d.e1_huckaba = j.value("e1_huckaba", j.at("e1").get<Int>());
    d.h_poly = j.at("h_poly").get<std::vector<Int>>();
    d.stabilization_index = j.at("n0").get<Int>();
    return d;
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("Hilbert JSON: ") + ex.what());
  }
}

Json to_json(const ClassificationReport& report) {
  const auto& p = report.profile;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  std::vector<int> vv(p.vv_flags.begin(), p.vv_flags.end());
  return Json{{"semigroup", report.semigroup},
              {"ideal_generators", report.ideal_generators},
              {"q_valuation", p.q_valuation},
              {"colength", p.colength},
              {"rank", p.rank},
              {"k", p.k},
              {"r", p.r},
              {"n_nilp", p.n_nilp},
              {"lambda", p.lambda_set},
              {"quotient_lengths", p.quotient_lengths},
              {"vv_flags", vv},
              {"witness", {{"intersection_equal", p.witness.intersection_equal}, {"length", p.witness.length}}},
              {"stretched", p.stretched},
              {"stretched_with_respect_to", "monomial reduction (u^" + std::to_string(p.q_valuation) + ")"},
              {"g_cm", p.g_cohen_macaulay},
              {"pattern", report.pattern},
              {"hilbert", to_json(report.hilbert)},
              {"checks", checks}};
}

ClassificationReport report_from_json(const Json& j) {
  try {
    ClassificationReport report;
    report.semigroup = j.at("semigroup").get<std::string>();
    report.ideal_generators = j.at("ideal_generators").get<std::vector<Int>>();
    report.hilbert = hilbert_from_json(j.at("hilbert"));
    auto& p = report.profile;
    p.q_valuation = j.at("q_valuation").get<Int>();
    p.colength = j.at("colength").get<Int>();
    p.rank = j.at("rank").get<Int>();
    p.k = j.at("k").get<Int>();
    p.r = j.at("r").get<Int>();
    p.n_nilp = j.at("n_nilp").get<Int>();
    p.lambda_set = j.at("lambda").get<std::vector<Int>>();
    p.quotient_lengths = j.at("quotient_lengths").get<std::vector<Int>>();
    for (int flag : j.at("vv_flags").get<std::vector<int>>()) p.vv_flags.push_back(flag != 0);
    p.witness.intersection_equal = j.at("witness").at("intersection_equal").get<bool>();
    p.witness.length = j.at("witness").at("length").get<Int>();
    p.stretched = j.at("stretched").get<bool>();
    p.g_cohen_macaulay = j.at("g_cm").get<bool>();
    report.pattern = j.at("pattern").get<std::string>();
    for (const auto& c : j.at("checks")) {
      report.checks.push_back(
          {c.at("name").get<std::string>(), status_from_string(c.at("status").get<std::string>()), c.value("detail", "")});
    }
    return report;
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + ex.what());
  }
}

Json to_json(const FamilyParams& params) {
  Json table = Json::object();
  for (const auto& [n, bn] : params.b_table) table[std::to_string(n)] = bn;
  return Json{{"b", params.b}, {"e", params.e}, {"ell", params.ell}, {"b_table", table}};
}

FamilyParams params_from_json(const Json& j) {
  try {
    FamilyParams p;
    p.b = j.at("b").get<Int>();
    p.e = j.at("e").get<Int>();
    p.ell = j.at("ell").get<Int>();
    if (j.contains("b_table")) {
      for (const auto& [key, value] : j.at("b_table").items()) {
        std::size_t used = 0;
        const Int n = std::stoll(key, &used);
        if (used != key.size()) throw Error(ErrorKind::ParseError, "b_table key '" + key + "' is not an integer");
        p.b_table[n] = value.get<Int>();
      }
    }
    return p;
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("params JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "params JSON: b_table keys must be integers");
  }
}

FamilyParams parse_params(const std::string& file_or_inline) {
  std::string text = file_or_inline;
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream in(file_or_inline);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open params file '" + file_or_inline + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw Error(ErrorKind::ParseError, "params JSON at byte " + std::to_string(ex.byte) + ": " + ex.what());
  }
  return params_from_json(j);
}

Json to_json(const FamilyReport& report) {
  Json assertions = Json::array();
  for (const auto& a : report.assertions) {
    assertions.push_back({{"name", a.name}, {"pass", a.pass}, {"expected", a.expected}, {"actual", a.actual}});
  }
  Json j{{"params", to_json(report.params)},
         {"semigroup", report.semigroup},
         {"passed", report.passed()},
         {"assertions", assertions}};
  if (!report.semigroup.empty()) {
    const auto& pred = report.prediction;
    j["prediction"] = {{"k", pred.k},
                       {"r", pred.r},
                       {"lambda", pred.lambda_set},
                       {"hf_constant", pred.hf_constant},
                       {"type", pred.type},
                       {"embedding_dimension", pred.embedding_dimension},
                       {"g_cm", pred.g_cohen_macaulay}};
    j["classification"] = to_json(report.classification);
  }
  return j;
}

void print_report(std::ostream& os, const ClassificationReport& report) {
  const auto& p = report.profile;
  const auto& h = report.hilbert;
  os << "semigroup        <" << report.semigroup << ">\n";
  os << "ideal generators " << brackets(report.ideal_generators) << "  (Q = (u^" << p.q_valuation << "))\n";
  os << "l(A/I)           " << p.colength << '\n';
  os << "e0, e1           " << h.e0 << ", " << h.e1_polynomial << "  (length sum " << h.e1_huckaba << ")\n";
  os << "HF               " << brackets(h.hf) << "  linear from n = " << h.stabilization_index << '\n';
  os << "h-polynomial     " << brackets(h.h_poly) << '\n';
  os << "k, r, n_nilp     " << p.k << ", " << p.r << ", " << p.n_nilp << '\n';
  os << "l(I^{n+1}/QI^n)  " << brackets(p.quotient_lengths) << '\n';
  os << "lambda           " << braces(p.lambda_set) << '\n';
  os << "stretched        " << (p.stretched ? "yes" : "no") << " w.r.t. monomial reduction  (Q cap I^2 = QI: "
     << (p.witness.intersection_equal ? "yes" : "no") << ", l(Q+I^2/Q+I^3) = " << p.witness.length << ")\n";
  os << "G Cohen-Macaulay " << (p.g_cohen_macaulay ? "yes" : "no") << '\n';
  os << "rank             " << p.rank << (report.pattern.empty() ? "" : "  pattern " + report.pattern) << '\n';
  std::size_t pass = 0;
  std::size_t skipped = 0;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Pass) ++pass;
    if (c.status == CheckStatus::NotApplicable) ++skipped;
  }
  os << "checks           " << pass << " pass, " << report.failures().size() << " fail, " << skipped << " n/a\n";
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Fail) os << "  FAIL " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  }
}

void print_family(std::ostream& os, const FamilyReport& report) {
  const auto& p = report.params;
  os << "params  b=" << p.b << " e=" << p.e << " ell=" << p.ell << " b_n=";
  for (const auto& [n, bn] : p.b_table) os << ' ' << n << ':' << bn;
  os << '\n';
  if (!report.semigroup.empty()) os << "H       <" << report.semigroup << ">\n";
  for (const auto& a : report.assertions) {
    os << "  " << (a.pass ? "pass " : "FAIL ") << std::left << std::setw(40) << a.name << " expected " << a.expected
       << ", got " << a.actual << '\n';
  }
  os << (report.passed() ? "all assertions pass" : "assertions failed") << '\n';
}

}  // namespace stretchkit
