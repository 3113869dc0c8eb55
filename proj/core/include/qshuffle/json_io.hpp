#pragma once

#include <nlohmann/json.hpp>

#include "qshuffle/harness.hpp"
#include "qshuffle/specialize.hpp"

namespace qshuffle {

using Json = nlohmann::ordered_json;

/// {"<exponent>": "p/q", ...}, ascending exponents, "/q" omitted when q = 1.
Json laurent_to_json(const LaurentV& p);
LaurentV laurent_from_json(const Json& j);

/// {"num": <LaurentV>, "den": <LaurentV>}.
Json ratv_to_json(const RatV& x);
RatV ratv_from_json(const Json& j);

/// {"rank": n, "degree": [...], "terms": [{"exps": {"x_c_r": e}, "coeff": ...}]}
/// Terms in graded-lexicographic order; zero exponents omitted.
Json multilaurent_to_json(const MultiLaurent& p, int rank, const DegreeVector& degree);

/// {"rank": n, "degree": [...], "numerator": <MultiLaurent>}.
Json shuffle_element_to_json(const ShuffleElement& F);
ShuffleElement shuffle_element_from_json(const Json& j);

/// {"good": bool, "plan": {"j-i": mult}, "required_power": int,
///  "failing_coefficient": <LaurentV>} or {"good": bool,
///  "bad_coefficient": <RatV>}.
Json good_certificate_to_json(const GoodCertificate& c);

/// {"config": ..., "blocks": [...], "summary": {"checked", "violations"}}.
Json gram_report_to_json(const GramReport& rep);
/// One line per entry: degree,total_mode,row,col,value,laurent.
std::string gram_report_to_csv(const GramReport& rep);

Json dual_basis_report_to_json(const DualBasisReport& rep);

/// Parse with // comments tolerated.
Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace qshuffle
