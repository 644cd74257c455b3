#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmda;
using testing::repeat;

TEST_CASE("walk values") {
    Nmda f2 = fixtures::automaton("fig2");
    // q0 -a-> q0 -a-> q1 -b-> q2
    Run r1{0, {0, 5, 6}};
    CHECK(walk_value(f2, r1) == Rational(3, 2));
    CHECK(walk_value(f2, Run{0, {}}) == 0);
    CHECK(walk_value(f2, Run{0, {7}}) == Rational(3, 2));
    CHECK_THROWS_AS(walk_value(f2, Run{0, {6}}), Error);
}

TEST_CASE("word values") {
    Nmda f7 = fixtures::automaton("fig7_nda"), f3 = fixtures::automaton("fig3");
    CHECK(word_value(f7, {0}) == 4);
    CHECK(word_value(f7, {0, 0}) == Rational(11, 2));
    CHECK(word_value(f3, {0}) == Rational(1, 2));
    CHECK(word_value(f3, {}) == 0);
    CHECK(word_value(fixtures::automaton("fig2"), {}) == 0);
    CHECK_THROWS_AS(word_value(f7, {1}), Error);
}

TEST_CASE("costs and gaps") {
    Nmda f7 = fixtures::automaton("fig7_nda");
    CHECK(*cost(f7, 1, {0}) == 5);
    CHECK(*cost(f7, 1, {0, 0}) == Rational(11, 2));
    CHECK(*gap(f7, 1, {0}) == 2);
    CHECK(*gap(f7, 0, {0}) == 0);
    CHECK(*gap(f7, 0, {0, 0, 0}) == 10);
    Nmda f11 = fixtures::automaton("fig11");
    CHECK_FALSE(cost(f11, 2, {0}).has_value());
    CHECK_FALSE(gap(f11, 2, {0}).has_value());
}

TEST_CASE("accumulated discount") {
    CHECK(accumulated_discount(fixtures::automaton("fig7_nda"), {0, 0, 0}) == 8);
    CHECK(accumulated_discount(fixtures::automaton("fig7_nda"), {}) == 1);
    CHECK(accumulated_discount(fixtures::automaton("fig9"), {0, 1}) == 6);
    CHECK_THROWS_AS(accumulated_discount(fixtures::automaton("fig2"), {0}), Error);
}

TEST_CASE("value bound") {
    CHECK(value_bound(fixtures::automaton("fig3")) == 4);
    CHECK(value_bound(fixtures::automaton("fig5_b")) == 4);
    Nmda z = fixtures::automaton("fig5_a");
    z.transitions[0].weight = 0;
    CHECK(value_bound(finalize(z)) == 0);
}

TEST_CASE("lasso values") {
    Nmda f3 = fixtures::automaton("fig3");
    CHECK(lasso_value(f3, {repeat(0, 3), {1}}) == Rational(15, 16));
    CHECK(lasso_value(f3, {{}, {1}}) == Rational(1, 2));
    CHECK(lasso_value(f3, {{}, {0}}) == 1);
    CHECK(lasso_value(fixtures::automaton("fig5_a"), {{}, {0}}) == 2);
    CHECK(lasso_value(fixtures::automaton("fig5_b"), {{}, {0}}) == 2);
}

TEST_CASE("gap and game routes agree on tidy integral automata") {
    std::mt19937 rng(21);
    for (int i = 0; i < 40; ++i) {
        Nmda a = testing::random_tidy(rng, testing::random_transducer(rng));
        for (int k = 0; k < 5; ++k) {
            auto w = testing::random_lasso(rng);
            CHECK(lasso_value_by_gaps(a, w) == lasso_value_by_game(a, w));
        }
    }
}
