#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/errors.hpp"
#include "qshuffle/shuffle.hpp"
#include "support.hpp"

using namespace qshuffle;
using testsupport::Rng;

TEST_CASE("root system data") {
    RootSystemData rs(4);
    CHECK(rs.cartan(1, 1) == 2);
    CHECK(rs.cartan(1, 2) == -1);
    CHECK(rs.cartan(2, 1) == -1);
    CHECK(rs.cartan(1, 3) == 0);
    CHECK_THROWS_AS(rs.cartan(0, 1), std::out_of_range);

    CHECK(positive_roots(3) == std::vector<Root>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(Root{1, 2}.degree(3) == DegreeVector({1, 1}));
}

TEST_CASE("zeta factors") {
    RootSystemData rs2(2), rs3(3), rs5(5);
    auto z11 = zeta(rs2, 1, 1);
    CHECK(z11.num_shift == LaurentV::v_pow(-2));
    CHECK(z11.den_shift == LaurentV(1));
    CHECK_FALSE(z11.is_one());
    CHECK(zeta(rs5, 1, 3).is_one());
    CHECK(zeta(rs3, 1, 2).num_shift == LaurentV::v_pow(1));
}

TEST_CASE("decompositions") {
    auto lead = Decomposition::leading({1, 3}, 5);
    CHECK(lead.r == std::vector<int>{5, 0, 0});
    CHECK(lead.total_mode() == 5);
    CHECK(Decomposition::slope({1, 2}, -1).r == std::vector<int>{-1, 0});
    CHECK(Decomposition::slope({1, 2}, 1).r == std::vector<int>{0, 1});
    CHECK(Decomposition::slope({1, 3}, -4).r == std::vector<int>{-2, -1, -1});
    CHECK_THROWS_AS(Decomposition({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("star basics") {
    // two degree-one factors of the same color
    auto s = star(gen_e(2, 1, 0), gen_e(2, 1, 0));
    CHECK(s.degree == DegreeVector({2}));
    MultiLaurent expect{canonical_vars(s.degree)};
    expect.add_term({0, 0}, RatV(LaurentV(Rational(1, 2)) + LaurentV::v_pow(-2, Rational(1, 2))));
    CHECK(s.numerator == expect);

    // adjacent colors: numerator x^r (x_{1,1} - v x_{2,1})
    auto t = star(gen_e(3, 1, 2), gen_e(3, 2, 0));
    MultiLaurent expect2{canonical_vars(t.degree)};
    expect2.add_term({3, 0}, RatV(1));
    expect2.add_term({2, 1}, -RatV::v_pow(1));
    CHECK(t.numerator == expect2);

    CHECK(star(s, ShuffleElement::unit(2)) == s);
    CHECK(star(ShuffleElement::unit(2), s) == s);
    CHECK_THROWS_AS(star(gen_e(2, 1, 0), gen_e(3, 1, 0)), std::invalid_argument);
}

TEST_CASE("star matches the symmetrized oracle") {
    Rng rng(555);
    for (int n : {2, 3}) {
        RootSystemData rs(n);
        for (int trial = 0; trial < 25; ++trial) {
            auto a = testsupport::rand_element(rng, n, testsupport::rand_int(rng, 1, 2));
            auto b = testsupport::rand_element(rng, n, testsupport::rand_int(rng, 1, 2));
            CHECK(star(rs, a, b) == star_symmetrization_oracle(rs, a, b));
        }
    }
}

TEST_CASE("grading, associativity, unit, symmetry") {
    Rng rng(808);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 34; ++trial) {
            int d1 = testsupport::rand_int(rng, 1, 2);
            int d2 = testsupport::rand_int(rng, 1, 2);
            int d3 = testsupport::rand_int(rng, 1, std::max(1, 4 - d1 - d2));
            auto F = testsupport::rand_element(rng, n, d1);
            auto G = testsupport::rand_element(rng, n, d2);
            auto H = testsupport::rand_element(rng, n, d3);
            auto FG = star(F, G);
            CHECK(FG.degree == F.degree + G.degree);
            CHECK(star(FG, H) == star(F, star(G, H)));
            CHECK(FG.numerator == FG.numerator.symmetrize());
            CHECK(wheel_check(FG));
        }
    }
}

TEST_CASE("qbracket") {
    auto a = gen_e(3, 1, 1);
    CHECK(qbracket(a, a, RatV(1)).is_zero());
    // numerator (1 - v^2) x_{1,1}^{r+1} in degree (1,1)
    auto qb = qbracket(gen_e(3, 1, 2), gen_e(3, 2, 0), RatV::v_pow(1));
    MultiLaurent expect{canonical_vars(qb.degree)};
    expect.add_term({3, 0}, RatV(LaurentV(1) - LaurentV::v_pow(2)));
    CHECK(qb.numerator == expect);
    // bilinearity spot check
    CHECK(qbracket(a.scaled(RatV(2)), gen_e(3, 2, 0), RatV::v_pow(1)) ==
          qbracket(a, gen_e(3, 2, 0), RatV::v_pow(1)).scaled(RatV(2)));
}

TEST_CASE("bracket generators") {
    // simple root: only the (v - v^{-1}) prefactor
    auto simple = e_tilde(2, Decomposition::leading({1, 1}, 3));
    CHECK(simple == gen_e(2, 1, 3).scaled(RatV(LaurentV::v_minus_vinv())));

    // higher root at the leading split
    auto et = e_tilde(3, Decomposition({1, 2}, {2, 0}));
    MultiLaurent expect{canonical_vars(et.degree)};
    expect.add_term({3, 0},
                    RatV(LaurentV::v_minus_vinv() * (LaurentV(1) - LaurentV::v_pow(2))));
    CHECK(et.numerator == expect);

    // inserting x_{1,1}^r shifts the mode of the first letter
    auto base = e_tilde(3, Decomposition({1, 2}, {0, 0}));
    MultiLaurent shifted{base.numerator.vars()};
    for (const auto& [e, c] : base.numerator.terms()) {
        auto ne = e;
        ne[0] += 2;
        shifted.add_term(ne, c);
    }
    CHECK(et.numerator == shifted);

    CHECK(e_root(3, {1, 1}, 5) == gen_e(3, 1, 5));
    for (int r = -2; r <= 2; ++r)
        CHECK(e_root(3, {1, 2}, r).scaled(RatV(LaurentV::v_minus_vinv())) ==
              e_tilde(3, Decomposition::leading({1, 2}, r)));
}

TEST_CASE("divided powers") {
    auto e = gen_e(2, 1, 0);
    CHECK(divided_power(e, 1) == e);
    auto d2 = divided_power(e, 2);
    CHECK(d2.numerator.constant_term() == RatV(LaurentV::v_pow(-1, Rational(1, 2))));
    auto d3 = divided_power(e, 3);
    CHECK(d3 == star(star(e, e), e).scaled(RatV(LaurentV(1), qfact(3))));
}

TEST_CASE("pbwd monomials") {
    EPBWDMonomial single{{{{1, 1}, 0, 1}}};
    CHECK(build_e_pbwd(2, single) == gen_e(2, 1, 0));
    EPBWDMonomial squared{{{{1, 1}, 0, 2}}};
    CHECK(build_e_pbwd(2, squared) == divided_power(gen_e(2, 1, 0), 2));
    EPBWDMonomial two{{{{1, 1}, 0, 1}, {{1, 1}, 1, 1}}};
    CHECK(build_e_pbwd(2, two) == star(gen_e(2, 1, 0), gen_e(2, 1, 1)));
    CHECK(two.degree(2) == DegreeVector({2}));
    CHECK(two.total_mode() == 1);

    EPBWDMonomial unsorted{{{{1, 1}, 1, 1}, {{1, 1}, 0, 1}}};
    CHECK_THROWS_AS(build_e_pbwd(2, unsorted), std::invalid_argument);

    ElementCache cache(2);
    CHECK(build_e_pbwd(2, two, &cache) == build_e_pbwd(2, two));
}

TEST_CASE("wheel conditions") {
    CHECK(wheel_check(gen_e(3, 1, 2)));                            // no wheel exists
    CHECK(wheel_check(star(star(gen_e(3, 1, 0), gen_e(3, 1, 0)), gen_e(3, 2, 0))));
    // constant numerator in degree (2,1) does not vanish on the wheel
    ShuffleElement flat(3, DegreeVector({2, 1}), MultiLaurent::constant(RatV(1)));
    CHECK_FALSE(wheel_check(flat));
}

TEST_CASE("adjacent-color star leaves no spurious factor") {
    Rng rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int r = testsupport::rand_int(rng, -2, 2), s = testsupport::rand_int(rng, -2, 2);
        auto t = star(gen_e(3, 1, r), gen_e(3, 2, s));
        auto q = (t.numerator * MultiLaurent::linear_diff({1, 1}, {2, 1}))
                     .exact_divide_linear({{{1, 1}, {2, 1}}});
        CHECK(q == t.numerator);
    }
}

TEST_CASE("defining relations") {
    CHECK(check_relations(2, -1, 1).pass);
    CHECK(check_relations(3, -1, 1).pass);
    auto bad = check_relations(RootSystemData::perturbed(3, 1, 2, -1), -1, 1);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.detail.empty());
}
