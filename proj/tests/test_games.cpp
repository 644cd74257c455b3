#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace nmda;

namespace {

Dpg loops(std::vector<std::pair<Rational, Rational>> edges) {
    Dpg g;
    g.num_vertices = 1;
    for (auto& [w, d] : edges)
        g.edges.push_back({0, 0, w, d});
    return validate_dpg(g);
}

}  // namespace

TEST_CASE("games from automata") {
    Dpg g = from_nmda(fixtures::automaton("fig2"));
    CHECK(g.num_vertices == 3);
    CHECK(g.edges.size() == 8);
    Dpg one = from_nmda(fixtures::automaton("fig5_a"));
    CHECK(one.edges.size() == 1);
    CHECK(one.edges[0].discount == Rational(1, 2));
    CHECK(one.edges[0].label == 0);
    // two a-transitions q0 -> q1 -> ... stay distinct edges
    Dpg f7 = from_nmda(fixtures::automaton("fig7_nda"));
    CHECK(f7.out[0].size() == 2);
}

TEST_CASE("validate_dpg") {
    Dpg g;
    g.num_vertices = 2;
    g.edges.push_back({0, 1, 0, Rational(1, 2)});
    CHECK_THROWS_AS(validate_dpg(g), Error);
    g.edges.push_back({1, 0, 0, Rational(1)});
    CHECK_THROWS_AS(validate_dpg(g), Error);
}

TEST_CASE("solving games") {
    CHECK(solve_min_dpg(loops({{1, Rational(1, 2)}})).value == std::vector<Rational>{2});
    CHECK(solve_min_dpg(loops({{1, Rational(1, 2)}, {0, Rational(1, 2)}})).value == std::vector<Rational>{0});

    // Values frozen from the positional-policy enumeration oracle.
    Dpg f2 = from_nmda(fixtures::automaton("fig2"));
    auto s2 = solve_min_dpg(f2);
    CHECK(s2.value == oracle::brute_dpg(f2));
    CHECK(s2.value == std::vector<Rational>{1, 1, Rational(1, 2)});
    CHECK(bellman_residual(f2, s2.value) == 0);

    Dpg f3 = from_nmda(fixtures::automaton("fig3"));
    auto s3 = solve_min_dpg(f3);
    CHECK(s3.value == oracle::brute_dpg(f3));
    CHECK(s3.value[0] == Rational(1, 2));
    CHECK(s3.value[2] == 0);
}

TEST_CASE("policies") {
    Dpg g = loops({{1, Rational(1, 2)}, {-1, Rational(1, 3)}});
    CHECK(evaluate_policy(g, {0}) == std::vector<Rational>{2});
    CHECK(evaluate_policy(g, {1}) == std::vector<Rational>{Rational(-3, 2)});
    auto s = solve_min_dpg(g);
    CHECK(s.policy == Policy{1});
    CHECK(bellman_residual(g, {2}) == Rational(7, 3));
}

TEST_CASE("exact simplex") {
    LinearProgram p;
    p.num_vars = 1;
    p.objective = {1};
    p.add_constraint({1}, 4);
    auto r = lp_maximize(p);
    REQUIRE(r.status == LpResult::Optimal);
    CHECK(r.x == std::vector<Rational>{4});

    LinearProgram q;
    q.num_vars = 1;
    q.objective = {1};
    q.add_constraint({1}, -1);
    CHECK(lp_maximize(q).status == LpResult::Infeasible);

    // one-state loop (1, 2) with threshold -1
    LinearProgram d;
    d.num_vars = 1;
    d.objective = {1};
    d.add_constraint({1}, 4);
    d.add_constraint({-1}, 2);
    auto rd = lp_maximize(d);
    REQUIRE(rd.status == LpResult::Optimal);
    CHECK(rd.x == std::vector<Rational>{4});

    LinearProgram u;
    u.num_vars = 2;
    u.objective = {1, 1};
    u.add_constraint({1, -1}, 1);
    CHECK(lp_maximize(u).status == LpResult::Unbounded);

    LinearProgram two;
    two.num_vars = 2;
    two.objective = {3, 2};
    two.add_constraint({1, 1}, 4);
    two.add_constraint({1, 3}, 6);
    two.add_constraint({1, 0}, 3);
    auto rt = lp_maximize(two);
    REQUIRE(rt.status == LpResult::Optimal);
    CHECK(rt.value == 11);
    CHECK(rt.x == std::vector<Rational>{3, 1});
}

TEST_CASE("random games against the oracle") {
    std::mt19937 rng(61);
    for (int i = 0; i < 50; ++i) {
        Dpg g = testing::random_dpg(rng);
        auto s = solve_min_dpg(g);
        CHECK(s.value == oracle::brute_dpg(g));
        CHECK(bellman_residual(g, s.value) == 0);
        CHECK(evaluate_policy(g, s.policy) == s.value);
    }
}
