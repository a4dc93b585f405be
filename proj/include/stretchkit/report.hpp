#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "stretchkit/family.hpp"

namespace stretchkit {

using Json = nlohmann::json;

/// {"base": [...], "finite_part": [...], "threshold": T}; the zero ideal
/// serializes with "threshold": null.
Json to_json(const SemigroupIdeal& ideal);
SemigroupIdeal ideal_from_json(const Json& j);

/// {"hf": [...], "e0": _, "e1": _, "h_poly": [...], "n0": _}. The two e1
/// routes are also written as "e1_polynomial"/"e1_huckaba".
Json to_json(const HilbertData& data);
HilbertData hilbert_from_json(const Json& j);

/// {"rank", "k", "r", "n_nilp", "lambda", "quotient_lengths", "stretched",
///  "g_cm", "checks": [{"name", "status"}...]} plus the Hilbert data and
/// stretchedness witness.
Json to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const Json& j);

/// {"b": _, "e": _, "ell": _, "b_table": {"4": 6, ...}}
Json to_json(const FamilyParams& params);
FamilyParams params_from_json(const Json& j);
/// Accepts a JSON object literal or a path to a file containing one.
FamilyParams parse_params(const std::string& file_or_inline);

Json to_json(const FamilyReport& report);

void print_report(std::ostream& os, const ClassificationReport& report);
void print_family(std::ostream& os, const FamilyReport& report);

}  // namespace stretchkit
