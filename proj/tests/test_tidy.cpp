#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmda;

TEST_CASE("tidiness") {
    Nmda f2 = fixtures::automaton("fig2");
    auto r = is_tidy(f2);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(format_word(f2.alphabet, *r.witness) == "a");
    CHECK_THROWS_AS(require_tidy(f2), Error);
    CHECK_FALSE(is_tidy(fixtures::automaton("fig3")).holds);
    for (const char* n : {"fig7_nda", "fig8", "fig9", "fig10_nda", "fig14_nmda", "fig4_a", "fig7_dmda"})
        CHECK(is_tidy(fixtures::automaton(n)).holds);
}

TEST_CASE("compliance") {
    CHECK(is_compliant(fixtures::automaton("fig14_nmda"), fixtures::transducer("fig14_transducer")).holds);
    CHECK(is_compliant(fixtures::automaton("fig9"), fixtures::transducer("fig13_transducer")).holds);
    Nmda f8 = fixtures::automaton("fig8");
    auto r = is_compliant(f8, time_oriented(f8.alphabet, {2}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(format_word(f8.alphabet, *r.witness) == "a");
    CHECK(is_compliant(f8, letter_oriented(f8.alphabet, {3, 2})).holds);
}

TEST_CASE("choice transducer of a tidy automaton") {
    auto t7 = choice_transducer_of(fixtures::automaton("fig7_nda"));
    CHECK(t7.num_states() == 1);
    CHECK(t7.output_of(0, 0) == 2);

    auto t8 = choice_transducer_of(fixtures::automaton("fig8"));
    CHECK(t8.num_states() == 1);
    CHECK(t8.output_of(0, 0) == 3);
    CHECK(t8.output_of(0, 1) == 2);

    auto t9 = choice_transducer_of(fixtures::automaton("fig9"));
    CHECK(t9.num_states() == 2);
    CHECK(is_compliant(fixtures::automaton("fig9"), t9).holds);

    CHECK_THROWS_AS(choice_transducer_of(fixtures::automaton("fig2")), Error);

    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        auto t = testing::random_transducer(rng);
        Nmda a = testing::random_tidy(rng, t);
        auto th = choice_transducer_of(a);
        CHECK(is_compliant(a, th).holds);
        CHECK(th.num_states() <= t.num_states());
    }
}
