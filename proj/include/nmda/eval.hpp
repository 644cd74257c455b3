#pragma once

#include "core.hpp"
#include "determinize.hpp"
#include "games.hpp"
#include "tidy.hpp"

#include <unordered_map>

namespace nmda {

inline void check_word(const Nmda& a, const Word& u) {
    for (int l : u)
        if (l < 0 || l >= a.num_letters())
            throw Error(Errc::AlphabetMismatch, "letter index out of range");
}

inline Rational walk_value(const Nmda& a, const Run& r) {
    if (r.start < 0 || r.start >= a.num_states())
        throw Error(Errc::InvalidWalk, "unknown start state");
    Rational value = 0, scale = 1;
    int at = r.start;
    for (int ti : r.transitions) {
        if (ti < 0 || ti >= int(a.transitions.size()))
            throw Error(Errc::InvalidWalk, "unknown transition");
        const auto& t = a.transitions[ti];
        if (t.src != at)
            throw Error(Errc::InvalidWalk, "transitions do not chain");
        value += t.weight / scale;
        scale *= t.discount;
        at = t.dst;
    }
    return value;
}

// cost(q, u) for every q at once. Runs are merged per (state, accumulated
// discount); in a tidy automaton that is one entry per state.
inline std::vector<Extended> costs(const Nmda& a, const Word& u) {
    check_word(a, u);
    struct Entry {
        Rational value;
        Rational rho;
    };
    std::vector<std::vector<Entry>> frontier(a.states.size());
    for (int q : a.initial)
        frontier[q].push_back({0, 1});
    for (int l : u) {
        std::vector<std::vector<Entry>> nxt(a.states.size());
        for (int q = 0; q < a.num_states(); ++q)
            for (const auto& e : frontier[q])
                for (int ti : a.out(q, l)) {
                    const auto& t = a.transitions[ti];
                    nxt[t.dst].push_back({e.value + t.weight / e.rho, e.rho * t.discount});
                }
        for (auto& v : nxt) {
            std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) {
                return x.rho < y.rho || (x.rho == y.rho && x.value < y.value);
            });
            std::vector<Entry> kept;
            for (auto& e : v)
                if (kept.empty() || kept.back().rho != e.rho)
                    kept.push_back(std::move(e));
            v = std::move(kept);
        }
        frontier = std::move(nxt);
    }
    std::vector<Extended> out(a.states.size());
    for (int q = 0; q < a.num_states(); ++q)
        for (const auto& e : frontier[q])
            out[q] = ext_min(out[q], Extended(e.value));
    return out;
}

inline Extended cost(const Nmda& a, int q, const Word& u) { return costs(a, u).at(q); }

inline Rational word_value(const Nmda& a, const Word& u) {
    if (u.empty())
        return 0;
    Extended best;
    for (const auto& c : costs(a, u))
        best = ext_min(best, c);
    return *best;
}

// Product of the step factors along u; every run must agree on each step.
inline Rational accumulated_discount(const Nmda& a, const Word& u) {
    check_word(a, u);
    std::vector<bool> cur(a.states.size(), false);
    for (int q : a.initial)
        cur[q] = true;
    Rational rho = 1;
    for (int l : u) {
        std::vector<bool> nxt(a.states.size(), false);
        std::optional<Rational> step;
        for (int q = 0; q < a.num_states(); ++q) {
            if (!cur[q])
                continue;
            for (int ti : a.out(q, l)) {
                const auto& t = a.transitions[ti];
                if (step && *step != t.discount)
                    throw Error(Errc::NotTidy, "runs disagree on a discount factor");
                step = t.discount;
                nxt[t.dst] = true;
            }
        }
        rho *= *step;
        cur = std::move(nxt);
    }
    return rho;
}

inline Extended gap(const Nmda& a, int q, const Word& u) {
    Rational rho = accumulated_discount(a, u);
    auto c = costs(a, u);
    if (!c.at(q))
        return std::nullopt;
    Extended best;
    for (const auto& x : c)
        best = ext_min(best, x);
    return Rational(rho * (*c[q] - *best));
}

inline Rational value_bound(const Nmda& a) {
    Rational m = 0;
    std::optional<Rational> lambda;
    for (const auto& t : a.transitions) {
        if (abs(t.weight) > m)
            m = abs(t.weight);
        if (!lambda || t.discount < *lambda)
            lambda = t.discount;
    }
    if (!lambda)
        return 0;
    return m * *lambda / (*lambda - 1);
}

// Infinite-word value through the gap configurations: at cycle boundaries the
// configuration eventually repeats, after which the segment recurs with
// ratio 1/Pi.
inline Rational lasso_value_by_gaps(const Nmda& a, const LassoWord& w) {
    check_word(a, w.prefix);
    check_word(a, w.cycle);
    if (w.cycle.empty())
        throw Error(Errc::Parse, "lasso cycle must be nonempty");
    DetContext ctx = make_context(a);
    GapConfig c = initial_config(ctx);
    Rational value = 0, scale = 1;
    auto feed = [&](int l) {
        DetStep st = det_step(ctx, c, l);
        value += st.weight / scale;
        scale *= st.discount;
        c = std::move(st.config);
    };
    for (int l : w.prefix)
        feed(l);
    std::unordered_map<std::string, std::pair<Rational, Rational>> seen;
    for (;;) {
        auto [it, fresh] = seen.emplace(config_key(c), std::make_pair(value, scale));
        if (!fresh) {
            const auto& [v1, s1] = it->second;
            Rational pi = scale / s1;
            return v1 + (value - v1) * pi / (pi - 1);
        }
        for (int l : w.cycle)
            feed(l);
    }
}

// Infinite-word value as the solution of the one-player game on the product
// of the automaton with the lasso's position counter. Works for any NMDA.
inline Rational lasso_value_by_game(const Nmda& a, const LassoWord& w) {
    check_word(a, w.prefix);
    check_word(a, w.cycle);
    if (w.cycle.empty())
        throw Error(Errc::Parse, "lasso cycle must be nonempty");
    Word letters = w.prefix;
    letters.insert(letters.end(), w.cycle.begin(), w.cycle.end());
    int len = int(letters.size()), p = int(w.prefix.size());
    Dpg g;
    g.num_vertices = a.num_states() * len;
    for (int q = 0; q < a.num_states(); ++q)
        for (int i = 0; i < len; ++i) {
            int nexti = i + 1 == len ? p : i + 1;
            for (int ti : a.out(q, letters[i])) {
                const auto& t = a.transitions[ti];
                g.edges.push_back({q * len + i, t.dst * len + nexti, t.weight, 1 / t.discount, t.letter});
            }
        }
    g.build();
    auto sol = solve_min_dpg(g);
    Extended best;
    for (int q : a.initial)
        best = ext_min(best, Extended(sol.value[q * len]));
    return *best;
}

// Gap path for tidy integral automata, game path otherwise.
inline Rational lasso_value(const Nmda& a, const LassoWord& w) {
    if (is_integral(a) && is_tidy(a).holds)
        return lasso_value_by_gaps(a, w);
    return lasso_value_by_game(a, w);
}

}  // namespace nmda
