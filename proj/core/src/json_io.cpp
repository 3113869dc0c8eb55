#include "qshuffle/json_io.hpp"

#include <fstream>

namespace qshuffle {

Json laurent_to_json(const LaurentV& p) {
    Json j = Json::object();
    for (const auto& [k, c] : p.coeffs()) j[std::to_string(k)] = rational_to_string(c);
    return j;
}

LaurentV laurent_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("LaurentV JSON: object expected");
    LaurentV p;
    for (const auto& [key, val] : j.items())
        p.add_term(std::stol(key), rational_from_string(val.get<std::string>()));
    return p;
}

Json ratv_to_json(const RatV& x) {
    return Json{{"num", laurent_to_json(x.num())}, {"den", laurent_to_json(x.den())}};
}

RatV ratv_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("RatV JSON: {num, den} expected");
    return RatV(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Json multilaurent_to_json(const MultiLaurent& p, int rank, const DegreeVector& degree) {
    Json terms = Json::array();
    const auto& vars = p.vars();
    for (const auto& [e, c] : p.sorted_terms()) {
        Json exps = Json::object();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) exps[vars[i].str()] = e[i];
        terms.push_back(Json{{"exps", exps}, {"coeff", ratv_to_json(c)}});
    }
    return Json{{"rank", rank}, {"degree", degree.entries()}, {"terms", terms}};
}

Json shuffle_element_to_json(const ShuffleElement& F) {
    return Json{{"rank", F.rank},
                {"degree", F.degree.entries()},
                {"numerator", multilaurent_to_json(F.numerator, F.rank, F.degree)}};
}

namespace {
ColorVar parse_var_name(const std::string& name) {
    // "x_<color>_<index>"
    if (name.size() < 5 || name[0] != 'x' || name[1] != '_')
        throw std::invalid_argument("bad variable name: " + name);
    size_t mid = name.find('_', 2);
    if (mid == std::string::npos) throw std::invalid_argument("bad variable name: " + name);
    return {std::stoi(name.substr(2, mid - 2)), std::stoi(name.substr(mid + 1))};
}
} // namespace

ShuffleElement shuffle_element_from_json(const Json& j) {
    const int rank = j.at("rank").get<int>();
    const DegreeVector degree{j.at("degree").get<std::vector<int>>()};
    if (degree.rank() != rank) throw std::invalid_argument("element JSON: degree/rank mismatch");
    const auto vars = canonical_vars(degree);
    MultiLaurent num{vars};
    for (const auto& term : j.at("numerator").at("terms")) {
        MultiLaurent::Exps e(vars.size(), 0);
        for (const auto& [name, expo] : term.at("exps").items()) {
            const ColorVar cv = parse_var_name(name);
            auto it = std::lower_bound(vars.begin(), vars.end(), cv);
            if (it == vars.end() || *it != cv)
                throw std::invalid_argument("element JSON: variable outside degree: " + name);
            e[it - vars.begin()] = expo.get<int>();
        }
        num.add_term(e, ratv_from_json(term.at("coeff")));
    }
    return {rank, degree, std::move(num)};
}

Json good_certificate_to_json(const GoodCertificate& c) {
    Json j{{"good", c.good}};
    if (c.bad_coefficient) j["bad_coefficient"] = ratv_to_json(*c.bad_coefficient);
    if (c.plan) {
        Json plan = Json::object();
        for (const auto& [beta, mult] : c.plan->d) plan[beta.str()] = mult;
        j["plan"] = plan;
        j["required_power"] = c.required_power;
        j["failing_coefficient"] = laurent_to_json(*c.failing_coefficient);
    }
    return j;
}

Json gram_report_to_json(const GramReport& rep) {
    Json config{{"n", rep.config.n},
                {"max_degree", rep.config.max_total_degree},
                {"modes", {rep.config.mode_min, rep.config.mode_max}},
                {"strategy", strategy_name(rep.config.strategy)}};
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) {
        Json entries = Json::array(), verdicts = Json::array();
        for (size_t r = 0; r < b.rows.size(); ++r) {
            Json erow = Json::array(), vrow = Json::array();
            for (size_t c = 0; c < b.cols.size(); ++c) {
                erow.push_back(ratv_to_json(b.entries[r][c]));
                vrow.push_back(static_cast<bool>(b.verdicts[r][c]));
            }
            entries.push_back(std::move(erow));
            verdicts.push_back(std::move(vrow));
        }
        blocks.push_back(Json{{"degree", b.degree.entries()},
                              {"total_mode", b.total_mode},
                              {"rows", b.rows},
                              {"cols", b.cols},
                              {"entries", entries},
                              {"verdicts", verdicts}});
    }
    Json summary{{"checked", rep.checked}, {"violations", rep.violations}};
    if (!rep.first_violation.empty()) summary["first_violation"] = rep.first_violation;
    return Json{{"config", config}, {"blocks", blocks}, {"summary", summary}};
}

std::string gram_report_to_csv(const GramReport& rep) {
    std::string out = "degree,total_mode,row,col,value,laurent\n";
    for (const auto& b : rep.blocks)
        for (size_t r = 0; r < b.rows.size(); ++r)
            for (size_t c = 0; c < b.cols.size(); ++c) {
                out += "\"" + b.degree.str() + "\"," + std::to_string(b.total_mode) + ",\"" +
                       b.rows[r] + "\",\"" + b.cols[c] + "\",\"" + b.entries[r][c].str() +
                       "\"," + (b.verdicts[r][c] ? "true" : "false") + "\n";
            }
    return out;
}

Json dual_basis_report_to_json(const DualBasisReport& rep) {
    Json records = Json::array();
    for (const auto& r : rep.normalizations)
        records.push_back(Json{{"degree", r.degree.entries()},
                               {"total_mode", r.total_mode},
                               {"row", r.row},
                               {"col", r.col},
                               {"entry", ratv_to_json(r.entry)}});
    Json j{{"pass", rep.pass}, {"blocks", rep.blocks}, {"records", records}};
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in, nullptr, /*allow_exceptions=*/true, /*ignore_comments=*/true);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qshuffle
