#include <CLI11.hpp>

#include <iostream>

#include "qshuffle/errors.hpp"
#include "qshuffle/json_io.hpp"
#include "qshuffle/textfmt.hpp"

using namespace qshuffle;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    int n = 2;
    int max_degree = 3;
    std::string modes = "-2..2";
    std::string decomp = "zero";
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

void add_window_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "rank parameter n (colors 1..n-1)")->required();
    cmd->add_option("--max-degree", o.max_degree, "total degree cap");
    cmd->add_option("--modes", o.modes, "per-factor mode window, lo..hi");
    cmd->add_option("--decomp", o.decomp, "decomposition strategy: zero | slope | file:PATH");
    cmd->add_option("--out", o.out, "write the report to this path");
    cmd->add_option("--format", o.format, "report format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--jobs", o.jobs, "worker threads for Gram entries");
}

std::pair<int, int> parse_modes(const std::string& s) {
    const size_t dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("modes: expected lo..hi");
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("modes: lo > hi");
    return {lo, hi};
}

WindowConfig make_config(const CommonOpts& o) {
    WindowConfig cfg;
    cfg.n = o.n;
    cfg.max_total_degree = o.max_degree;
    std::tie(cfg.mode_min, cfg.mode_max) = parse_modes(o.modes);
    cfg.jobs = o.jobs;
    if (o.decomp == "zero") {
        cfg.strategy = DecompStrategy::Zero;
    } else if (o.decomp == "slope") {
        cfg.strategy = DecompStrategy::Slope;
    } else if (o.decomp.rfind("file:", 0) == 0) {
        cfg.strategy = DecompStrategy::Custom;
        Json j = parse_json_file(o.decomp.substr(5));
        for (const auto& [key, val] : j.items()) {
            // "<j>-<i>@<r>": [r_j,...,r_i]
            const size_t dash = key.find('-'), at = key.find('@');
            if (dash == std::string::npos || at == std::string::npos)
                throw std::invalid_argument("decomposition file: bad key '" + key + "'");
            Root root{std::stoi(key.substr(0, dash)),
                      std::stoi(key.substr(dash + 1, at - dash - 1))};
            int mode = std::stoi(key.substr(at + 1));
            cfg.custom[{root, mode}] = val.get<std::vector<int>>();
        }
    } else {
        throw std::invalid_argument("unknown --decomp value: " + o.decomp);
    }
    return cfg;
}

void emit(const CommonOpts& o, const Json& j) {
    if (o.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(o.out, j);
}

void emit_gram(const CommonOpts& o, const GramReport& rep) {
    if (o.format == "csv") {
        const std::string csv = gram_report_to_csv(rep);
        if (o.out.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(o.out);
            if (!f) throw std::runtime_error("cannot write " + o.out);
            f << csv;
        }
    } else {
        emit(o, gram_report_to_json(rep));
    }
}

ShuffleElement element_from_opts(int n, const std::string& file, const std::string& etext) {
    if (!file.empty()) return shuffle_element_from_json(parse_json_file(file));
    ElementCache cache(n);
    return build_e_pbwd(n, parse_e_monomial(etext), &cache);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shuffle-algebra pairing and integral-form verification"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string lhs, rhs, etext, ftext, element_file, inject_file;

    auto* cmd_star = app.add_subcommand("star", "shuffle product of two e-side monomials");
    add_window_flags(cmd_star, o);
    cmd_star->add_option("--lhs", lhs, "left factor, e.g. e[1..2]@0^1")->required();
    cmd_star->add_option("--rhs", rhs, "right factor")->required();

    auto* cmd_good = app.add_subcommand("good", "divided-power lattice membership test");
    add_window_flags(cmd_good, o);
    cmd_good->add_option("--element", element_file, "element JSON file");
    cmd_good->add_option("--e", etext, "e-side monomial text");

    auto* cmd_pair = app.add_subcommand("pair", "pairing of an e-monomial with an f-monomial");
    add_window_flags(cmd_pair, o);
    cmd_pair->add_option("--e", etext, "e-side monomial")->required();
    cmd_pair->add_option("--f", ftext, "f-side monomial, e.g. f[1..2]@(-3,0)*f[1..1]@(2)")
        ->required();

    auto* cmd_gram = app.add_subcommand("gram", "full window Gram report");
    add_window_flags(cmd_gram, o);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->require_subcommand(1);
    std::map<std::string, CLI::App*> suites;
    for (const char* name : {"duality", "good", "dual-bases", "oracle", "relations", "key-spec"}) {
        auto* s = cmd_verify->add_subcommand(name);
        add_window_flags(s, o);
        suites[name] = s;
    }
    suites["duality"]->add_option("--inject", inject_file,
                                  "extra row element JSON (negative control)");
    suites["good"]->add_option("--element", element_file, "candidate element JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_star->parsed()) {
            ElementCache cache(o.n);
            auto a = build_e_pbwd(o.n, parse_e_monomial(lhs), &cache);
            auto b = build_e_pbwd(o.n, parse_e_monomial(rhs), &cache);
            emit(o, shuffle_element_to_json(star(a, b)));
            return kExitPass;
        }
        if (cmd_good->parsed()) {
            if (element_file.empty() == etext.empty())
                throw std::invalid_argument("good: give exactly one of --element / --e");
            auto cert = is_good(element_from_opts(o.n, element_file, etext));
            emit(o, good_certificate_to_json(cert));
            return cert.good ? kExitPass : kExitViolation;
        }
        if (cmd_pair->parsed()) {
            ElementCache cache(o.n);
            auto x = build_e_pbwd(o.n, parse_e_monomial(etext), &cache);
            RatV value = pair(x, parse_f_monomial(ftext));
            emit(o, Json{{"value", ratv_to_json(value)},
                         {"pretty", value.str()},
                         {"laurent", value.is_laurent_polynomial()}});
            return kExitPass;
        }
        if (cmd_gram->parsed()) {
            auto rep = verify_duality(make_config(o));
            emit_gram(o, rep);
            return rep.pass() ? kExitPass : kExitViolation;
        }
        if (suites["duality"]->parsed()) {
            std::optional<ShuffleElement> inject;
            if (!inject_file.empty())
                inject = shuffle_element_from_json(parse_json_file(inject_file));
            auto rep = verify_duality(make_config(o), inject);
            std::cerr << "duality: " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.checked
                      << " entries";
            if (!rep.pass()) std::cerr << "; first violation: " << rep.first_violation;
            std::cerr << ")\n";
            if (!o.out.empty() || o.format == "csv") emit_gram(o, rep);
            return rep.pass() ? kExitPass : kExitViolation;
        }
        if (suites["good"]->parsed()) {
            std::optional<ShuffleElement> cand;
            if (!element_file.empty())
                cand = shuffle_element_from_json(parse_json_file(element_file));
            auto rep = verify_good_criterion(make_config(o), cand);
            std::cerr << "good: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked
                      << " monomials)";
            if (!rep.detail.empty()) std::cerr << " " << rep.detail;
            std::cerr << "\n";
            Json j{{"pass", rep.pass}, {"checked", rep.checked}, {"detail", rep.detail}};
            if (rep.candidate_certificate)
                j["certificate"] = good_certificate_to_json(*rep.candidate_certificate);
            if (!rep.witness.empty()) j["witness"] = rep.witness;
            if (!o.out.empty()) emit(o, j);
            const bool candidate_bad =
                rep.candidate_certificate && !rep.candidate_certificate->good;
            return (rep.pass && !candidate_bad) ? kExitPass : kExitViolation;
        }
        if (suites["dual-bases"]->parsed()) {
            auto rep = verify_dual_bases(make_config(o));
            std::cerr << "dual-bases: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.blocks
                      << " blocks)";
            if (!rep.detail.empty()) std::cerr << " " << rep.detail;
            std::cerr << "\n";
            if (!o.out.empty()) emit(o, dual_basis_report_to_json(rep));
            return rep.pass ? kExitPass : kExitViolation;
        }
        if (suites["oracle"]->parsed() || suites["relations"]->parsed() ||
            suites["key-spec"]->parsed()) {
            SuiteReport rep;
            std::string name;
            if (suites["oracle"]->parsed()) {
                rep = verify_oracle(make_config(o));
                name = "oracle";
            } else if (suites["relations"]->parsed()) {
                rep = verify_relations(make_config(o));
                name = "relations";
            } else {
                rep = verify_key_spec(make_config(o));
                name = "key-spec";
            }
            std::cerr << name << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked
                      << " checks)";
            if (!rep.detail.empty()) std::cerr << " " << rep.detail;
            std::cerr << "\n";
            if (!o.out.empty())
                emit(o, Json{{"pass", rep.pass}, {"checked", rep.checked}, {"detail", rep.detail}});
            return rep.pass ? kExitPass : kExitViolation;
        }
    } catch (const NonDivisibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
