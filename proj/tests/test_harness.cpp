#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qshuffle/json_io.hpp"
#include "qshuffle/textfmt.hpp"
#include "support.hpp"

using namespace qshuffle;

namespace {
WindowConfig small2() {
    WindowConfig cfg;
    cfg.n = 2;
    cfg.max_total_degree = 2;
    cfg.mode_min = -1;
    cfg.mode_max = 1;
    return cfg;
}
} // namespace

TEST_CASE("monomial text round trips") {
    for (const char* s : {"e[1..1]@0", "e[1..1]@-2^3*e[1..2]@1", "e[2..3]@4"}) {
        auto m = parse_e_monomial(s);
        CHECK(format_e_monomial(m) == s);
    }
    CHECK(parse_e_monomial("e[1..1]@0^1").factors[0].power == 1);
    CHECK(format_e_monomial(parse_e_monomial("e[1..1]@0^1")) == "e[1..1]@0");
    for (const char* s : {"f[1..2]@(-3,0)*f[1..1]@(2)", "f[1..1]@(0)", "f[2..3]@(1,-1)"}) {
        auto m = parse_f_monomial(s);
        CHECK(format_f_monomial(m) == s);
    }
    CHECK_THROWS_AS(parse_e_monomial("e[1..1]@0*e[1..1]@0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_e_monomial("e[2..1]@0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_f_monomial("f[1..1]@(0)*f[1..1]@(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_f_monomial("f[1..2]@(3)"), std::invalid_argument);
}

TEST_CASE("decomposition strategies") {
    WindowConfig cfg = small2();
    CHECK(decomposition_for(cfg, {1, 1}, 3).r == std::vector<int>{3});
    cfg.n = 3;
    CHECK(decomposition_for(cfg, {1, 2}, -1).r == std::vector<int>{-1, 0});
    cfg.strategy = DecompStrategy::Slope;
    CHECK(decomposition_for(cfg, {1, 2}, -1).r == std::vector<int>{-1, 0});
    CHECK(decomposition_for(cfg, {1, 2}, 3).r == std::vector<int>{1, 2});
    cfg.strategy = DecompStrategy::Custom;
    cfg.custom[{{1, 2}, 3}] = {5, -2};
    CHECK(decomposition_for(cfg, {1, 2}, 3).r == std::vector<int>{5, -2});
    CHECK_THROWS_AS(decomposition_for(cfg, {1, 2}, 4), std::invalid_argument);
}

TEST_CASE("window enumerations") {
    WindowConfig cfg = small2();
    SUBCASE("rank two") {
        auto single = enumerate_e_monomials(cfg, DegreeVector({1}), 0);
        REQUIRE(single.size() == 1);
        CHECK(format_e_monomial(single[0]) == "e[1..1]@0");

        auto deg2 = enumerate_e_monomials(cfg, DegreeVector({2}), 0);
        std::set<std::string> found;
        for (const auto& m : deg2) found.insert(format_e_monomial(m));
        CHECK(found == std::set<std::string>{"e[1..1]@0^2", "e[1..1]@-1*e[1..1]@1"});

        auto f = enumerate_f_monomials(cfg, DegreeVector({1}), 0);
        REQUIRE(f.size() == 1);
        CHECK(format_f_monomial(f[0]) == "f[1..1]@(0)");
    }
    SUBCASE("rank three") {
        WindowConfig cfg3 = cfg;
        cfg3.n = 3;
        auto rows = enumerate_e_monomials(cfg3, DegreeVector({1, 1}), 0);
        std::set<std::string> found;
        for (const auto& m : rows) found.insert(format_e_monomial(m));
        CHECK(found == std::set<std::string>{"e[1..2]@0", "e[1..1]@-1*e[2..2]@1",
                                             "e[1..1]@0*e[2..2]@0", "e[1..1]@1*e[2..2]@-1"});

        auto cols = enumerate_f_monomials(cfg3, DegreeVector({1, 1}), -1);
        std::set<std::string> fset;
        for (const auto& m : cols) fset.insert(format_f_monomial(m));
        CHECK(fset.count("f[1..2]@(-1,0)") == 1);
        for (const auto& m : cols) CHECK(m.is_opposite_sorted());
    }
    SUBCASE("every enumerated monomial hits the requested degree and mode") {
        WindowConfig cfg3 = cfg;
        cfg3.n = 3;
        for (long m = -2; m <= 2; ++m)
            for (const auto& mon : enumerate_e_monomials(cfg3, DegreeVector({2, 1}), m)) {
                CHECK(mon.degree(3) == DegreeVector({2, 1}));
                CHECK(mon.total_mode() == m);
                CHECK(mon.is_sorted());
            }
    }
}

TEST_CASE("duality on a small window") {
    auto rep = verify_duality(small2());
    CHECK(rep.pass());
    CHECK(rep.checked > 0);
    for (const auto& b : rep.blocks)
        for (const auto& row : b.entries)
            for (const auto& e : row) CHECK(e.is_laurent_polynomial());
}

TEST_CASE("negative control") {
    WindowConfig cfg;
    cfg.n = 3;
    cfg.max_total_degree = 2;
    cfg.mode_min = -1;
    cfg.mode_max = 1;
    auto rep = verify_duality(cfg, nongood_fixture());
    CHECK_FALSE(rep.pass());
    CHECK(rep.violations > 0);

    bool witnessed = false;
    for (const auto& b : rep.blocks)
        for (size_t r = 0; r < b.rows.size(); ++r)
            for (size_t c = 0; c < b.cols.size(); ++c)
                if (!b.verdicts[r][c]) {
                    CHECK(b.rows[r] == "fixture");
                    CHECK(divides_power(b.entries[r][c].den(), 1));
                    witnessed = true;
                }
    CHECK(witnessed);

    auto good = verify_good_criterion(cfg, nongood_fixture());
    CHECK(good.pass);
    REQUIRE(good.candidate_certificate.has_value());
    CHECK_FALSE(good.candidate_certificate->good);
    CHECK_FALSE(good.witness.empty());
}

TEST_CASE("dual bases, rank two") {
    WindowConfig cfg;
    cfg.n = 2;
    cfg.max_total_degree = 2;
    cfg.mode_min = -2;
    cfg.mode_max = 2;
    cfg.strategy = DecompStrategy::Slope;
    auto rep = verify_dual_bases(cfg);
    CHECK(rep.pass);
    CHECK(rep.blocks > 0);
    for (const auto& r : rep.normalizations) {
        CHECK(r.entry.is_laurent_polynomial());
        CHECK(r.entry.num().is_monomial());
        if (r.degree.total() == 1) CHECK(r.entry == RatV(1));
    }
}

TEST_CASE("oracle and relation suites") {
    WindowConfig cfg = small2();
    auto rep = verify_oracle(cfg, 2);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
    CHECK(verify_relations(cfg).pass);
    WindowConfig cfg3 = cfg;
    cfg3.n = 3;
    CHECK(verify_key_spec(cfg3).pass);
}

TEST_CASE("reports are deterministic across parallelism settings") {
    WindowConfig cfg;
    cfg.n = 3;
    cfg.max_total_degree = 2;
    cfg.mode_min = -1;
    cfg.mode_max = 1;
    cfg.jobs = 1;
    auto a = gram_report_to_json(verify_duality(cfg)).dump(2);
    cfg.jobs = 4;
    auto b = gram_report_to_json(verify_duality(cfg)).dump(2);
    cfg.jobs = 3;
    auto c = gram_report_to_json(verify_duality(cfg)).dump(2);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("element json round trip") {
    auto el = e_tilde(3, Decomposition({1, 2}, {1, 0}));
    auto back = shuffle_element_from_json(shuffle_element_to_json(el));
    CHECK(back == el);
    CHECK(shuffle_element_from_json(shuffle_element_to_json(nongood_fixture())) ==
          nongood_fixture());
}

TEST_CASE("gram json schema is frozen") {
    WindowConfig cfg;
    cfg.n = 2;
    cfg.max_total_degree = 1;
    cfg.mode_min = 0;
    cfg.mode_max = 0;
    CHECK(gram_report_to_json(verify_duality(cfg)).dump() ==
          R"({"config":{"n":2,"max_degree":1,"modes":[0,0],"strategy":"zero"},)"
          R"("blocks":[{"degree":[1],"total_mode":0,"rows":["e[1..1]@0"],)"
          R"("cols":["f[1..1]@(0)"],"entries":[[{"num":{"0":"1"},"den":{"0":"1"}}]],)"
          R"("verdicts":[[true]]}],"summary":{"checked":1,"violations":0}})");
}

TEST_CASE("gram csv shape") {
    auto rep = verify_duality(small2());
    auto csv = gram_report_to_csv(rep);
    CHECK(csv.rfind("degree,total_mode,row,col,value,laurent\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == rep.checked + 1);
}
