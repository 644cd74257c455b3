#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace nmda;

TEST_CASE("run enumeration") {
    Nmda f7 = fixtures::automaton("fig7_nda");
    auto runs = oracle::enumerate_runs(f7, {0, 0});
    std::vector<Rational> values;
    for (const auto& r : runs)
        values.push_back(r.value);
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<Rational>{Rational(11, 2), 6, Rational(13, 2)});

    CHECK(oracle::enumerate_runs(fixtures::automaton("fig5_b"), {0, 0, 0}).size() == 1);

    Nmda f2 = fixtures::automaton("fig2");
    auto ab = oracle::enumerate_runs(f2, {0, 1});
    CHECK(ab.size() == 2);
    CHECK(oracle::word_value(f2, {0, 1}) == word_value(f2, {0, 1}));
    for (const auto& r : ab)
        CHECK(walk_value(f2, r.run) == r.value);

    CHECK_THROWS_AS(oracle::enumerate_runs(f7, Word(13, 0)), Error);
}

TEST_CASE("word enumeration") {
    CHECK(oracle::all_words(2, 0, 2).size() == 7);
    CHECK(oracle::all_words(2, 1, 5).size() == 62);
}

TEST_CASE("lasso approximation") {
    Nmda f3 = fixtures::automaton("fig3");
    auto i = oracle::lasso_value_approx(f3, {{}, {1}}, Rational(1, 100));
    CHECK(i.contains(Rational(1, 2)));
    CHECK(i.upper - i.lower < Rational(2, 100));
    Nmda z = fixtures::automaton("fig5_a");
    z.transitions[0].weight = 0;
    CHECK(oracle::lasso_value_approx(finalize(z), {{}, {0}}, Rational(1, 10)).contains(0));
    CHECK_THROWS_AS(oracle::lasso_value_approx(f3, {{}, {1}}, 0), Error);

    std::mt19937 rng(91);
    for (int k = 0; k < 100; ++k) {
        Nmda a = testing::random_integral(rng, 3);
        auto w = testing::random_lasso(rng);
        CHECK(oracle::lasso_value_approx(a, w, Rational(1, 1000)).contains(lasso_value(a, w)));
    }
}

TEST_CASE("brute-force games") {
    Dpg g;
    g.num_vertices = 1;
    g.edges = {{0, 0, 1, Rational(1, 2)}};
    g = validate_dpg(g);
    CHECK(oracle::brute_dpg(g) == std::vector<Rational>{2});
    g.edges.push_back({0, 0, 0, Rational(1, 2)});
    g = validate_dpg(g);
    CHECK(oracle::brute_dpg(g) == std::vector<Rational>{0});
    CHECK_THROWS_AS(oracle::brute_dpg(g, 1), Error);
}

TEST_CASE("finite nonemptiness fixed point") {
    Nmda loop = fixtures::automaton("fig5_a");
    CHECK_FALSE(oracle::delta_fixpoint_nonempty(loop, -1));
    CHECK(oracle::delta_fixpoint_nonempty(loop, 1));
    CHECK_FALSE(oracle::delta_fixpoint_nonempty(loop, Rational(1, 2)));
}
