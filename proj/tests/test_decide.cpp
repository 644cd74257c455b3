#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmda;

namespace {

std::string shown(const Nmda& a, const Verdict& v) {
    if (!v.witness)
        return "";
    if (const auto* u = std::get_if<Word>(&*v.witness))
        return format_word(a.alphabet, *u);
    return format_lasso(a.alphabet, std::get<LassoWord>(*v.witness));
}

Nfa nfa(const std::string& text) { return io::parse_nfa(text); }

const char* universal_nfa = R"(NFA
alphabet: a b
states: n0
initial: n0
accepting: n0
t: n0 a n0
t: n0 b n0
)";

const char* only_a = R"(NFA
alphabet: a b
states: n0 n1
initial: n0
accepting: n1
t: n0 a n1
)";

}  // namespace

TEST_CASE("nonemptiness on the fixtures") {
    Nmda f2 = fixtures::automaton("fig2");
    auto le = nonempty(f2, 1, Relation::LE, WordMode::Infinite);
    CHECK(le.holds);
    CHECK(shown(f2, le) == "a:a");
    CHECK(value_of(f2, *le.witness) == 1);
    CHECK_FALSE(nonempty(f2, 1, Relation::LT, WordMode::Infinite).holds);

    Nmda loop = fixtures::automaton("fig5_a");
    CHECK_FALSE(nonempty(loop, -1, Relation::LE, WordMode::Finite).holds);
    auto fin = nonempty(loop, 1, Relation::LE, WordMode::Finite);
    CHECK(fin.holds);
    CHECK(shown(loop, fin) == "a");
    CHECK_FALSE(nonempty(loop, 1, Relation::LT, WordMode::Finite).holds);
    CHECK(nonempty(loop, 2, Relation::LE, WordMode::Infinite).holds);
    CHECK_FALSE(nonempty(loop, 2, Relation::LT, WordMode::Infinite).holds);

    CHECK_THROWS_AS(nonempty(loop, 0, Relation::GT, WordMode::Finite), Error);
}

TEST_CASE("random nonemptiness against bounded oracles") {
    std::mt19937 rng(71);
    auto words = oracle::all_words(2, 1, 6);
    for (int i = 0; i < 60; ++i) {
        Nmda a = testing::random_integral(rng, 3);
        Rational nu(std::uniform_int_distribution<int>(-4, 4)(rng), 4);
        nu.canonicalize();
        for (Relation rel : {Relation::LT, Relation::LE}) {
            auto f = nonempty(a, nu, rel, WordMode::Finite);
            if (f.holds) {
                REQUIRE(f.witness);
                CHECK(compare(value_of(a, *f.witness), rel, nu));
            } else {
                for (const auto& u : words)
                    CHECK_FALSE(compare(oracle::word_value(a, u), rel, nu));
            }
            auto inf = nonempty(a, nu, rel, WordMode::Infinite);
            if (inf.holds) {
                REQUIRE(inf.witness);
                CHECK(compare(value_of(a, *inf.witness), rel, nu));
            } else {
                for (int k = 0; k < 10; ++k) {
                    auto w = testing::random_lasso(rng);
                    CHECK_FALSE(compare(lasso_value(a, w), rel, nu));
                }
            }
        }
    }
}

TEST_CASE("containment") {
    Nmda f9 = fixtures::automaton("fig9");
    auto th = choice_transducer_of(f9);
    for (WordMode m : {WordMode::Finite, WordMode::Infinite}) {
        CHECK(contain(f9, f9, Relation::GE, m).holds);
        CHECK_FALSE(contain(f9, f9, Relation::GT, m).holds);
        CHECK(contain(add(f9, const_automaton(th, 1)), f9, Relation::GT, m).holds);
    }
    Nmda f7 = fixtures::automaton("fig7_nda");
    auto c = contain(const_automaton(choice_transducer_of(f7), 1), f7, Relation::GT, WordMode::Finite);
    CHECK_FALSE(c.holds);
    CHECK(shown(f7, c) == "a");
    CHECK_THROWS_AS(contain(f9, f9, Relation::LT, WordMode::Finite), Error);
    CHECK_THROWS_AS(contain(fixtures::automaton("fig4_a"), fixtures::automaton("fig4_b"), Relation::GE,
                            WordMode::Finite),
                    Error);
}

TEST_CASE("equivalence") {
    Nmda f10 = fixtures::automaton("fig10_nda");
    for (WordMode m : {WordMode::Finite, WordMode::Infinite})
        CHECK(equivalent(f10, determinize(f10), m).holds);
    Nmda a = fixtures::automaton("fig5_a"), b = fixtures::automaton("fig5_b");
    CHECK(equivalent(a, b, WordMode::Infinite).holds);
    auto fin = equivalent(a, b, WordMode::Finite);
    CHECK_FALSE(fin.holds);
    CHECK(shown(a, fin) == "a");
    CHECK(value_of(a, *fin.witness) == 1);
    CHECK(value_of(b, *fin.witness) == 2);
    auto up = add(f10, const_automaton(choice_transducer_of(f10), 1));
    auto ne = equivalent(f10, up, WordMode::Infinite);
    CHECK_FALSE(ne.holds);
    CHECK(value_of(f10, *ne.witness) != value_of(up, *ne.witness));
}

TEST_CASE("universality") {
    Nmda f8 = fixtures::automaton("fig8");
    CHECK(value_bound(f8) <= 5);
    CHECK(universal(f8, 5, Relation::LT, WordMode::Finite).holds);
    auto one = const_automaton(time_oriented({"a", "b"}, {2}), 1);
    for (WordMode m : {WordMode::Finite, WordMode::Infinite}) {
        CHECK(universal(one, 1, Relation::LE, m).holds);
        auto lt = universal(one, 1, Relation::LT, m);
        CHECK_FALSE(lt.holds);
        CHECK(lt.witness);
    }
    auto g = hardness_gadget(nfa(universal_nfa), GadgetKind::EqFinite);
    CHECK(universal(g, 0, Relation::LE, WordMode::Finite).holds);
    auto g2 = hardness_gadget(nfa(only_a), GadgetKind::EqFinite);
    auto v = universal(g2, 0, Relation::LE, WordMode::Finite);
    CHECK_FALSE(v.holds);
    CHECK(value_of(g2, *v.witness) > 0);
}

TEST_CASE("exact value") {
    Nmda f3 = fixtures::automaton("fig3");
    CHECK(lasso_value(f3, {{}, {1}}) == Rational(1, 2));
    try {
        exact_value(f3, Rational(1, 2), WordMode::Infinite);
        FAIL("non-tidy input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotTidy);
    }
    auto zero = const_automaton(time_oriented({"a"}, {2}), 0);
    for (WordMode m : {WordMode::Finite, WordMode::Infinite}) {
        CHECK_FALSE(exact_value(zero, 1, m).holds);
        CHECK(exact_value(zero, 0, m).holds);
    }
    auto g = hardness_gadget(nfa(only_a), GadgetKind::ExactFinite);
    auto v = exact_value(g, Rational(-1, 2), WordMode::Finite);
    CHECK(v.holds);
    CHECK(shown(g, v) == "a");
    CHECK(word_value(g, {0}) == Rational(-1, 2));

    Nmda f9 = fixtures::automaton("fig9");
    auto e = exact_value(f9, Rational(1, 2), WordMode::Infinite);
    if (e.holds)
        CHECK(value_of(f9, *e.witness) == Rational(1, 2));
}

TEST_CASE("deterministic containment agrees with the general procedure") {
    auto th = time_oriented({"a", "b"}, {2, 3});
    CHECK(dmda_contain(const_automaton(th, 2), const_automaton(th, 1), Relation::GT, WordMode::Infinite).holds);
    Dmda d = fixtures::dmda("fig10_dmda");
    CHECK(dmda_contain(d, d, Relation::GE, WordMode::Finite).holds);
    std::mt19937 rng(81);
    for (int i = 0; i < 50; ++i) {
        auto t = testing::random_transducer(rng);
        Dmda a = determinize(testing::random_tidy(rng, t)), b = determinize(testing::random_tidy(rng, t));
        for (Relation rel : {Relation::GT, Relation::GE})
            for (WordMode m : {WordMode::Finite, WordMode::Infinite}) {
                auto x = dmda_contain(a, b, rel, m), y = contain(a, b, rel, m);
                CHECK(x.holds == y.holds);
                if (!x.holds) {
                    REQUIRE(x.witness);
                    CHECK_FALSE(compare(value_of(a, *x.witness), rel, value_of(b, *x.witness)));
                }
            }
    }
}
