#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/errors.hpp"
#include "qshuffle/polyring.hpp"
#include "support.hpp"

using namespace qshuffle;
using testsupport::Rng;

namespace {
const ColorVar x11{1, 1}, x12{1, 2}, x21{2, 1};
}

TEST_CASE("arithmetic basics") {
    MultiLaurent a = MultiLaurent::variable(x11);
    CHECK((a + a.scaled(RatV(-1))).is_zero());

    MultiLaurent prod = MultiLaurent::variable(x11) * MultiLaurent::variable(x21);
    CHECK(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first == MultiLaurent::Exps{1, 1});

    MultiLaurent scaled = MultiLaurent::variable(x11, -2).scaled(RatV::v_pow(1));
    CHECK(scaled.terms().begin()->first == MultiLaurent::Exps{-2});
    CHECK(scaled.terms().begin()->second == RatV::v_pow(1));

    // alignment makes equality independent of unused variables
    MultiLaurent wide{std::vector<ColorVar>{x11, x21}};
    wide.add_term({1, 0}, RatV(1));
    CHECK(wide == MultiLaurent::variable(x11));
}

TEST_CASE("symmetrize") {
    // x_{1,1} over two same-color slots averages to (x11 + x12)/2
    MultiLaurent p{std::vector<ColorVar>{x11, x12}};
    p.add_term({1, 0}, RatV(1));
    MultiLaurent s = p.symmetrize();
    MultiLaurent expect{std::vector<ColorVar>{x11, x12}};
    expect.add_term({1, 0}, RatV(Rational(1, 2)));
    expect.add_term({0, 1}, RatV(Rational(1, 2)));
    CHECK(s == expect);
    CHECK(s.symmetrize() == s);

    MultiLaurent anti{std::vector<ColorVar>{x11, x12}};
    anti.add_term({1, 0}, RatV(1));
    anti.add_term({0, 1}, RatV(-1));
    CHECK(anti.symmetrize().is_zero());

    SUBCASE("idempotence and commutation with same-color relabeling") {
        Rng rng(42);
        std::vector<ColorVar> vars{x11, x12, {1, 3}, x21, {2, 2}};
        // swap the first two color-1 slots and the two color-2 slots
        std::map<ColorVar, VarImage> relabel{{x11, {RatV(1), x12}},
                                             {x12, {RatV(1), x11}},
                                             {{1, 3}, {RatV(1), {1, 3}}},
                                             {x21, {RatV(1), {2, 2}}},
                                             {{2, 2}, {RatV(1), x21}}};
        for (int trial = 0; trial < 40; ++trial) {
            MultiLaurent q = testsupport::rand_multilaurent(rng, vars);
            MultiLaurent sym = q.symmetrize();
            CHECK(sym.symmetrize() == sym);
            CHECK(q.substitute(relabel).aligned(vars).symmetrize() == sym);
        }
    }
}

TEST_CASE("substitute") {
    const ColorVar y{0, 1};
    std::map<ColorVar, VarImage> images{{x11, {RatV::v_pow(-1), y}}};
    CHECK(MultiLaurent::variable(x11).substitute(images) ==
          MultiLaurent::variable(y, 1, RatV::v_pow(-1)));
    CHECK(MultiLaurent::variable(x11, 3).substitute(images) ==
          MultiLaurent::variable(y, 3, RatV::v_pow(-3)));

    std::map<ColorVar, VarImage> both{{x11, {RatV::v_pow(-1), y}}, {x21, {RatV::v_pow(-2), y}}};
    CHECK((MultiLaurent::variable(x11) * MultiLaurent::variable(x21)).substitute(both) ==
          MultiLaurent::variable(y, 2, RatV::v_pow(-3)));

    CHECK_THROWS_AS(
        (MultiLaurent::variable(x11) * MultiLaurent::variable(x21)).substitute(images),
        std::invalid_argument);

    SUBCASE("ring homomorphism on random pairs") {
        Rng rng(777);
        std::vector<ColorVar> vars{x11, x12, x21};
        std::map<ColorVar, VarImage> sub{{x11, {RatV::v_pow(2), {0, 1}}},
                                         {x12, {RatV(Rational(3, 2)), {0, 2}}},
                                         {x21, {RatV::v_pow(-1), {0, 1}}}};
        for (int trial = 0; trial < 60; ++trial) {
            MultiLaurent p = testsupport::rand_multilaurent(rng, vars);
            MultiLaurent q = testsupport::rand_multilaurent(rng, vars);
            CHECK((p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub));
            CHECK((p + q).substitute(sub) == p.substitute(sub) + q.substitute(sub));
        }
    }
}

TEST_CASE("exact_divide_linear") {
    MultiLaurent sq = MultiLaurent::variable(x11, 2) - MultiLaurent::variable(x21, 2);
    MultiLaurent q = sq.exact_divide_linear({{x11, x21}});
    CHECK(q == MultiLaurent::variable(x11) + MultiLaurent::variable(x21));

    CHECK_THROWS_AS(MultiLaurent::variable(x11).exact_divide_linear({{x11, x21}}),
                    NonDivisibleError);

    // (1 - v^2) x_{1,1}^{r+1} does not vanish at x_{1,1} = x_{2,1}
    MultiLaurent p =
        MultiLaurent::variable(x11, 3, RatV(LaurentV(1) - LaurentV::v_pow(2))) *
        MultiLaurent::variable(x21, 0);
    CHECK_THROWS_AS(p.exact_divide_linear({{x11, x21}}), NonDivisibleError);

    SUBCASE("round trip on random polynomials") {
        Rng rng(1234);
        std::vector<ColorVar> vars{x11, x12, x21};
        for (int trial = 0; trial < 60; ++trial) {
            MultiLaurent r = testsupport::rand_multilaurent(rng, vars);
            MultiLaurent prod = r * MultiLaurent::linear_diff(x11, x21);
            CHECK(prod.exact_divide_linear({{x11, x21}}) == r);
            MultiLaurent prod2 =
                r * MultiLaurent::linear_diff(x11, x12) * MultiLaurent::linear_diff(x12, x21);
            CHECK(prod2.exact_divide_linear({{x11, x12}, {x12, x21}}) == r);
        }
    }
}

TEST_CASE("degree vector utilities") {
    DegreeVector d({2, 1});
    CHECK(d.rank() == 3);
    CHECK(d.total() == 3);
    CHECK(canonical_vars(d) == std::vector<ColorVar>{{1, 1}, {1, 2}, {2, 1}});
    CHECK((d + DegreeVector({0, 2})) == DegreeVector({2, 3}));
    CHECK_THROWS_AS(DegreeVector({-1}), std::invalid_argument);
    CHECK_THROWS_AS(d + DegreeVector({1}), std::invalid_argument);
}

TEST_CASE("homogeneous degree and ordering of printed terms") {
    MultiLaurent p{std::vector<ColorVar>{x11, x21}};
    p.add_term({1, 1}, RatV(1));
    p.add_term({2, 0}, RatV(1));
    CHECK(p.homogeneous_degree() == 2);
    p.add_term({0, 3}, RatV(1));
    CHECK_FALSE(p.homogeneous_degree().has_value());
    auto ts = p.sorted_terms();
    CHECK(ts.front().first == MultiLaurent::Exps{1, 1});
    CHECK(ts.back().first == MultiLaurent::Exps{0, 3});
}
