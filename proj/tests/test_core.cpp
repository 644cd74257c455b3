#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmda;

TEST_CASE("rationals parse and render canonically") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(to_string(Extended{}) == "inf");
}

TEST_CASE("words and lassos") {
    std::vector<std::string> ab{"a", "b"};
    CHECK(parse_word(ab, "abba") == Word{0, 1, 1, 0});
    CHECK(parse_word(ab, "a,b") == Word{0, 1});
    CHECK(format_word(ab, {0, 1}) == "ab");
    auto w = parse_lasso(ab, "a:ab");
    CHECK(w.prefix == Word{0});
    CHECK(w.cycle == Word{0, 1});
    CHECK(format_lasso(ab, w) == "a:ab");
    CHECK_THROWS_AS(parse_lasso(ab, "a:"), Error);
    CHECK_THROWS_AS(parse_word(ab, "c"), Error);
    std::vector<std::string> long_names{"inc_x", "halt"};
    CHECK(format_word(long_names, {0, 1}) == "inc_x halt");
    CHECK(parse_word(long_names, "inc_x halt") == Word{0, 1});
}

TEST_CASE("validate") {
    Nmda f2 = fixtures::automaton("fig2");
    CHECK(f2.transitions.size() == 8);
    CHECK(f2.num_states() == 3);

    RawAutomaton raw;
    raw.alphabet = {"a", "b"};
    raw.states = {"p"};
    raw.initial = {"p"};
    raw.transitions = {{"p", "a", "p", 1, 2}};
    try {
        validate(raw);
        FAIL("incomplete automaton accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Validation);
        CHECK(std::string(e.what()).find("IncompleteAutomaton(p,b)") != std::string::npos);
    }
    raw.transitions.push_back({"p", "b", "p", 1, 1});
    try {
        validate(raw);
        FAIL("discount 1 accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("DiscountNotGreaterThanOne") != std::string::npos);
    }
    raw.transitions.back().discount = 3;
    raw.initial = {};
    CHECK_THROWS_AS(validate(raw), Error);
    raw.initial = {"r"};
    CHECK_THROWS_AS(validate(raw), Error);
    raw.initial = {"p"};
    Nmda ok = validate(raw);
    CHECK(ok.deterministic());
    CHECK_NOTHROW(as_dmda(ok));
    CHECK_THROWS_AS(as_dmda(f2), Error);
}

TEST_CASE("integrality and weight statistics") {
    Nmda f2 = fixtures::automaton("fig2"), f7 = fixtures::automaton("fig7_nda");
    CHECK(is_integral(f2));
    CHECK(is_integral(fixtures::automaton("fig8")));
    CHECK(weight_denominator(f7) == 1);
    CHECK(weight_denominator(f2) == 4);
    CHECK(max_weight_difference(f7) == 4);
    CHECK(max_weight_difference(f2) == Rational(7, 4));
    CHECK(max_weight_difference(fixtures::automaton("fig5_a")) == 0);

    Nmda half = fixtures::automaton("fig5_a");
    half.transitions[0].discount = Rational(3, 2);
    half = finalize(half);
    CHECK_FALSE(is_integral(half));
    CHECK_THROWS_AS(require_integral(half), Error);
}

TEST_CASE("finalize canonicalizes hand-built rationals") {
    Nmda a = fixtures::automaton("fig5_a");
    a.transitions[0].weight = Rational(2, 4);
    a = finalize(a);
    CHECK(a.transitions[0].weight == Rational(1, 2));
    CHECK(to_string(a.transitions[0].weight) == "1/2");
}

TEST_CASE("reachable states") {
    auto r = reachable_states(fixtures::automaton("fig11"));
    CHECK(std::count(r.begin(), r.end(), true) == 3);
}
