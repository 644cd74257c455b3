#pragma once

// Brute-force reference implementations sharing no code with the engines.

#include "core.hpp"
#include "games.hpp"

#include <functional>
#include <map>

namespace nmda::oracle {

struct RunValue {
    Run run;
    Rational value;
};

// Every run of `a` on `u` together with its value.
inline std::vector<RunValue> enumerate_runs(const Nmda& a, const Word& u, std::size_t max_len = 12) {
    if (u.size() > max_len)
        throw Error(Errc::BudgetExceeded, "word longer than the enumeration guard");
    for (int l : u)
        if (l < 0 || l >= a.num_letters())
            throw Error(Errc::AlphabetMismatch, "letter index out of range");
    std::vector<RunValue> out;
    std::vector<int> path;
    std::function<void(int, std::size_t, Rational, Rational)> go = [&](int q, std::size_t i, Rational v,
                                                                      Rational disc) {
        if (i == u.size()) {
            out.push_back({Run{0, path}, v});
            return;
        }
        for (std::size_t ti = 0; ti < a.transitions.size(); ++ti) {
            const auto& t = a.transitions[ti];
            if (t.src != q || t.letter != u[i])
                continue;
            path.push_back(int(ti));
            go(t.dst, i + 1, v + t.weight / disc, disc * t.discount);
            path.pop_back();
        }
    };
    for (int q : a.initial) {
        std::size_t first = out.size();
        go(q, 0, Rational(0), Rational(1));
        for (std::size_t i = first; i < out.size(); ++i)
            out[i].run.start = q;
    }
    return out;
}

// Minimum over enumerated runs; the empty word values 0.
inline Rational word_value(const Nmda& a, const Word& u) {
    if (u.empty())
        return 0;
    auto runs = enumerate_runs(a, u);
    Rational best = runs.at(0).value;
    for (const auto& r : runs)
        if (r.value < best)
            best = r.value;
    return best;
}

// All words over `letters` letters with length in [min_len, max_len].
inline std::vector<Word> all_words(int letters, int min_len, int max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (int len = 0; len <= max_len; ++len) {
        if (len >= min_len)
            out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int l = 0; l < letters; ++l) {
                Word v = w;
                v.push_back(l);
                next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return out;
}

struct Interval {
    Rational lower;
    Rational upper;
    bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

// Unrolls the lasso until the tail bound drops below eps; the interval is
// centred at the best prefix value.
inline Interval lasso_value_approx(const Nmda& a, const LassoWord& w, const Rational& eps) {
    if (eps <= 0)
        throw Error(Errc::Validation, "eps must be positive");
    if (w.cycle.empty())
        throw Error(Errc::Parse, "lasso cycle must be nonempty");
    Rational big = 0, lambda = 0;
    for (const auto& t : a.transitions) {
        Rational m = t.weight < 0 ? Rational(-t.weight) : t.weight;
        if (m > big)
            big = m;
        if (lambda == 0 || t.discount < lambda)
            lambda = t.discount;
    }
    Rational bound = big * lambda / (lambda - 1);
    // (state, accumulated discount) -> best prefix value
    std::map<std::pair<int, Rational>, Rational> cur;
    for (int q : a.initial)
        cur[{q, Rational(1)}] = 0;
    Rational tail = bound;
    std::size_t i = 0;
    while (tail >= eps) {
        int letter = i < w.prefix.size() ? w.prefix[i] : w.cycle[(i - w.prefix.size()) % w.cycle.size()];
        std::map<std::pair<int, Rational>, Rational> next;
        for (const auto& [key, v] : cur)
            for (const auto& t : a.transitions) {
                if (t.src != key.first || t.letter != letter)
                    continue;
                Rational nv = v + t.weight / key.second;
                std::pair<int, Rational> nk{t.dst, key.second * t.discount};
                auto it = next.find(nk);
                if (it == next.end() || nv < it->second)
                    next[nk] = nv;
            }
        cur = std::move(next);
        tail /= lambda;
        ++i;
    }
    Rational best = cur.begin()->second;
    for (const auto& kv : cur)
        if (kv.second < best)
            best = kv.second;
    return {best - tail, best + tail};
}

// Minimum over all positional policies, each evaluated by walking until a
// vertex repeats.
inline std::vector<Rational> brute_dpg(const Dpg& g, std::size_t max_policies = 1000000) {
    int n = g.num_vertices;
    std::vector<std::vector<int>> choices(n);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        choices[g.edges[i].src].push_back(int(i));
    std::size_t total = 1;
    for (const auto& c : choices) {
        if (c.empty())
            throw Error(Errc::Validation, "vertex without outgoing edge");
        total *= c.size();
        if (total > max_policies)
            throw Error(Errc::BudgetExceeded, "too many positional policies");
    }
    std::vector<std::optional<Rational>> best(n);
    std::vector<std::size_t> pick(n, 0);
    for (std::size_t p = 0; p < total; ++p) {
        for (int s = 0; s < n; ++s) {
            std::vector<int> seen_at(n, -1);
            std::vector<const DpgEdge*> walk;
            int v = s;
            while (seen_at[v] < 0) {
                seen_at[v] = int(walk.size());
                walk.push_back(&g.edges[choices[v][pick[v]]]);
                v = walk.back()->dst;
            }
            int k = seen_at[v];
            Rational cyc = 0, cyc_disc = 1;
            for (std::size_t i = k; i < walk.size(); ++i) {
                cyc += cyc_disc * walk[i]->weight;
                cyc_disc *= walk[i]->discount;
            }
            Rational val = cyc / (1 - cyc_disc);
            for (int i = k - 1; i >= 0; --i)
                val = walk[i]->weight + walk[i]->discount * val;
            if (!best[s] || val < *best[s])
                best[s] = val;
        }
        for (int v = 0; v < n; ++v) {
            if (++pick[v] < choices[v].size())
                break;
            pick[v] = 0;
        }
    }
    std::vector<Rational> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = *best[v];
    return out;
}

// Finite-word nonemptiness for threshold nu with non-strict inequality:
// Delta(q) = min over runs ending in q of rho(run) * (value(run) - nu),
// iterated downward until some entry reaches 0 or nothing changes.
inline bool delta_fixpoint_nonempty(const Nmda& a, const Rational& nu) {
    std::vector<std::optional<Rational>> delta(a.states.size());
    auto lower = [&](int q, const Rational& d) {
        if (!delta[q] || d < *delta[q]) {
            delta[q] = d;
            return true;
        }
        return false;
    };
    for (const auto& t : a.transitions)
        if (std::find(a.initial.begin(), a.initial.end(), t.src) != a.initial.end())
            lower(t.dst, t.discount * (t.weight - nu));
    for (;;) {
        for (const auto& d : delta)
            if (d && *d <= 0)
                return true;
        auto prev = delta;
        bool changed = false;
        for (const auto& t : a.transitions)
            if (prev[t.src])
                changed = lower(t.dst, t.discount * (*prev[t.src] + t.weight)) || changed;
        if (!changed)
            return false;
    }
}

}  // namespace nmda::oracle
