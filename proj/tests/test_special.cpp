#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qshuffle/specialize.hpp"
#include "support.hpp"

using namespace qshuffle;
using testsupport::Rng;

TEST_CASE("enumerate_plans") {
    auto only = enumerate_plans(DegreeVector({2}));
    REQUIRE(only.size() == 1);
    CHECK(only[0].d == std::map<Root, int>{{{1, 1}, 2}});

    auto two = enumerate_plans(DegreeVector({1, 1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].d == std::map<Root, int>{{{1, 1}, 1}, {{2, 2}, 1}});
    CHECK(two[1].d == std::map<Root, int>{{{1, 2}, 1}});

    auto mixed = enumerate_plans(DegreeVector({2, 1}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].d == std::map<Root, int>{{{1, 1}, 2}, {{2, 2}, 1}});
    CHECK(mixed[1].d == std::map<Root, int>{{{1, 1}, 1}, {{1, 2}, 1}});

    CHECK(mixed[1].required_power() == 1);
    CHECK(enumerate_plans(DegreeVector({1, 0, 1})).size() == 1); // only simple roots fit
}

TEST_CASE("specialize") {
    // full-interval collapse of the bracket generator
    for (int r = -1; r <= 2; ++r) {
        auto et = e_tilde(3, Decomposition({1, 2}, {r, 0}));
        SpecializationPlan plan{{{{1, 2}, 1}}};
        auto sp = specialize(et, plan);
        REQUIRE(sp.terms().size() == 1);
        // (v - v^{-1})(1 - v^2) v^{-(r+1)} y^{r+1}
        LaurentV expect =
            (LaurentV::v_minus_vinv() * (LaurentV(1) - LaurentV::v_pow(2))).shifted(-(r + 1));
        CHECK(sp.terms().begin()->first == std::vector<int>{r + 1});
        CHECK(sp.terms().begin()->second == expect);
    }

    // single simple-root line is a plain renaming with the v^{-color} scale
    auto e = gen_e(3, 1, 4);
    auto sp = specialize(e, SpecializationPlan{{{{1, 1}, 1}}});
    REQUIRE(sp.terms().size() == 1);
    CHECK(sp.terms().begin()->second == LaurentV::v_pow(-4));

    CHECK_THROWS_AS(specialize(e, SpecializationPlan{{{{2, 2}, 1}}}), std::invalid_argument);
}

TEST_CASE("specialize is independent of the splitting and symmetric in copies") {
    Rng rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        auto F = star(star(gen_e(3, 1, testsupport::rand_int(rng, -1, 1)),
                           gen_e(3, 2, testsupport::rand_int(rng, -1, 1))),
                      star(gen_e(3, 1, testsupport::rand_int(rng, -1, 1)),
                           gen_e(3, 2, testsupport::rand_int(rng, -1, 1))));
        for (const auto& plan : enumerate_plans(F.degree)) {
            auto canonical = specialize(F, plan);
            CHECK(canonical.symmetric_in_copies());

            // alternative assignment: reverse the copy order within each color
            std::map<ColorVar, YVar> alt;
            std::vector<int> next(F.rank, 0);
            std::vector<std::vector<YVar>> per_color(F.rank);
            for (const auto& [beta, mult] : plan.d)
                for (int s = 1; s <= mult; ++s)
                    for (int k = beta.j; k <= beta.i; ++k) per_color[k].push_back({beta, s});
            for (int k = 1; k < F.rank; ++k) std::reverse(per_color[k].begin(), per_color[k].end());
            for (int k = 1; k < F.rank; ++k)
                for (size_t r = 0; r < per_color[k].size(); ++r)
                    alt[{k, static_cast<int>(r) + 1}] = per_color[k][r];
            CHECK(specialize_with_splitting(F, plan, alt) == canonical);
        }
    }
}

TEST_CASE("is_good examples") {
    // squared and cubed divided powers are integral
    CHECK(is_good(divided_power(gen_e(2, 1, 0), 2)).good);
    CHECK(is_good(divided_power(gen_e(2, 1, 0), 3)).good);

    // numerator x_{1,1} in degree (1,1) collapses to v^{-1} y, not divisible
    auto bad = is_good(ShuffleElement(3, DegreeVector({1, 1}), MultiLaurent::variable({1, 1})));
    CHECK_FALSE(bad.good);
    REQUIRE(bad.plan.has_value());
    CHECK(bad.plan->d == std::map<Root, int>{{{1, 2}, 1}});
    CHECK(bad.required_power == 1);
    REQUIRE(bad.failing_coefficient.has_value());
    CHECK(*bad.failing_coefficient == LaurentV::v_pow(-1));

    // the bracket generator itself is fine: (1 - v^2) = -v (v - v^{-1})
    for (int r = -2; r <= 2; ++r) CHECK(is_good(e_root(3, {1, 2}, r)).good);

    // a v-denominator in a coefficient disqualifies immediately
    ShuffleElement frac(2, DegreeVector({1}),
                        MultiLaurent::variable({1, 1}, 1, RatV(LaurentV(1), LaurentV::v_minus_vinv())));
    auto cert = is_good(frac);
    CHECK_FALSE(cert.good);
    CHECK(cert.bad_coefficient.has_value());
}

TEST_CASE("divided powers of higher roots are good, and goodness survives star") {
    ElementCache cache(3);
    std::vector<ShuffleElement> goods;
    for (const Root& beta : positive_roots(3))
        for (int k = 1; k <= 2; ++k)
            for (int r = -2; r <= 2; ++r) {
                const auto& el = cache.divided_root_power(beta, r, k);
                CHECK(is_good(el).good);
                if (el.degree.total() <= 2) goods.push_back(el);
            }
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const auto& a = goods[testsupport::rand_int(rng, 0, static_cast<int>(goods.size()) - 1)];
        const auto& b = goods[testsupport::rand_int(rng, 0, static_cast<int>(goods.size()) - 1)];
        CHECK(is_good(star(a, b)).good);
    }
}
