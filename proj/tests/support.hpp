#pragma once

#include "nmda/nmda.hpp"

#include <random>

namespace testing {

using namespace nmda;

inline Rational quarter(std::mt19937& rng, int k = 8) {
    Rational r(std::uniform_int_distribution<int>(-k, k)(rng), 4);
    r.canonicalize();
    return r;
}

// Two-state transducer over {a, b} with outputs in {2, 3}.
inline ChoiceTransducer random_transducer(std::mt19937& rng, int states = 2) {
    ChoiceTransducer t;
    t.alphabet = {"a", "b"};
    for (int s = 0; s < states; ++s)
        t.states.push_back("s" + std::to_string(s));
    std::uniform_int_distribution<int> st(0, states - 1), out(2, 3);
    for (int i = 0; i < states * 2; ++i) {
        t.next.push_back(st(rng));
        t.output.push_back(out(rng));
    }
    return validate_transducer(t);
}

// Complete automaton whose states carry transducer states; every transition
// follows the transducer, so the result is tidy and complies with t.
inline Nmda random_tidy(std::mt19937& rng, const ChoiceTransducer& t, int max_states = 4) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        int n = std::uniform_int_distribution<int>(1, max_states)(rng);
        std::vector<int> label(n);
        for (auto& l : label)
            l = std::uniform_int_distribution<int>(0, t.num_states() - 1)(rng);
        label[0] = t.initial;
        auto with = [&](int s) {
            std::vector<int> v;
            for (int q = 0; q < n; ++q)
                if (label[q] == s)
                    v.push_back(q);
            return v;
        };
        bool ok = true;
        for (int q = 0; q < n && ok; ++q)
            for (int a = 0; a < 2 && ok; ++a)
                ok = !with(t.next_of(label[q], a)).empty();
        if (!ok)
            continue;
        Nmda m;
        m.alphabet = t.alphabet;
        for (int q = 0; q < n; ++q)
            m.states.push_back("q" + std::to_string(q));
        for (int q : with(t.initial))
            if (q == 0 || coin(rng))
                m.initial.push_back(q);
        for (int q = 0; q < n; ++q)
            for (int a = 0; a < 2; ++a) {
                auto dsts = with(t.next_of(label[q], a));
                int k = 1 + coin(rng);
                for (int i = 0; i < k; ++i) {
                    int d = dsts[std::uniform_int_distribution<int>(0, int(dsts.size()) - 1)(rng)];
                    m.transitions.push_back({q, a, d, quarter(rng), Rational(t.output_of(label[q], a))});
                }
            }
        return finalize(m);
    }
}

// Complete automaton with integral discounts in {2, 3} and no tidiness promise.
inline Nmda random_integral(std::mt19937& rng, int max_states = 4) {
    std::uniform_int_distribution<int> coin(0, 1), disc(2, 3);
    int n = std::uniform_int_distribution<int>(1, max_states)(rng);
    std::uniform_int_distribution<int> st(0, n - 1);
    Nmda m;
    m.alphabet = {"a", "b"};
    for (int q = 0; q < n; ++q)
        m.states.push_back("q" + std::to_string(q));
    m.initial.push_back(0);
    if (n > 1 && coin(rng))
        m.initial.push_back(st(rng));
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < 2; ++a) {
            int k = 1 + coin(rng);
            for (int i = 0; i < k; ++i)
                m.transitions.push_back({q, a, st(rng), quarter(rng), Rational(disc(rng))});
        }
    return finalize(m);
}

inline Dpg random_dpg(std::mt19937& rng, int max_vertices = 5, int max_out = 3) {
    int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    std::uniform_int_distribution<int> st(0, n - 1), deg(1, max_out), w(-6, 6), den(2, 4);
    Dpg g;
    g.num_vertices = n;
    for (int v = 0; v < n; ++v) {
        int k = deg(rng);
        for (int i = 0; i < k; ++i)
            g.edges.push_back({v, st(rng), Rational(w(rng), 2), Rational(1, den(rng))});
    }
    return validate_dpg(g);
}

inline Nfa random_nfa(std::mt19937& rng, int max_states = 4) {
    std::uniform_int_distribution<int> coin(0, 1);
    int n = std::uniform_int_distribution<int>(1, max_states)(rng);
    Nfa a;
    a.alphabet = {"a", "b"};
    for (int q = 0; q < n; ++q) {
        a.states.push_back("n" + std::to_string(q));
        a.accepting.push_back(coin(rng));
    }
    a.initial.push_back(0);
    for (int q = 0; q < n; ++q)
        for (int l = 0; l < 2; ++l)
            for (int d = 0; d < n; ++d)
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                    a.transitions.push_back({q, l, d});
    return validate_nfa(a);
}

inline LassoWord random_lasso(std::mt19937& rng, int letters = 2, int max_prefix = 3, int max_cycle = 3) {
    std::uniform_int_distribution<int> l(0, letters - 1);
    LassoWord w;
    int p = std::uniform_int_distribution<int>(0, max_prefix)(rng);
    int c = std::uniform_int_distribution<int>(1, max_cycle)(rng);
    for (int i = 0; i < p; ++i)
        w.prefix.push_back(l(rng));
    for (int i = 0; i < c; ++i)
        w.cycle.push_back(l(rng));
    return w;
}

inline Word repeat(int letter, int n) { return Word(std::size_t(n), letter); }

inline Rational power(const Rational& b, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i)
        r *= b;
    return r;
}

}  // namespace testing
