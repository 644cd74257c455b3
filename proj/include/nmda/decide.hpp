#pragma once

#include "algebra.hpp"
#include "core.hpp"
#include "determinize.hpp"
#include "eval.hpp"
#include "games.hpp"

#include <map>
#include <set>
#include <variant>

namespace nmda {

enum class Relation { LT, LE, GT, GE };
enum class WordMode { Finite, Infinite };

using Witness = std::variant<Word, LassoWord>;

struct Verdict {
    bool holds = false;
    std::optional<Witness> witness;
    std::size_t configurations = 0;
};

inline const char* relation_name(Relation r) {
    switch (r) {
    case Relation::LT: return "lt";
    case Relation::LE: return "le";
    case Relation::GT: return "gt";
    case Relation::GE: return "ge";
    }
    return "?";
}

inline bool compare(const Rational& x, Relation r, const Rational& y) {
    switch (r) {
    case Relation::LT: return x < y;
    case Relation::LE: return x <= y;
    case Relation::GT: return x > y;
    case Relation::GE: return x >= y;
    }
    return false;
}

inline Rational value_of(const Nmda& a, const Witness& w) {
    if (const auto* u = std::get_if<Word>(&w))
        return word_value(a, *u);
    return lasso_value(a, std::get<LassoWord>(w));
}

namespace detail {

inline void require_rel(Relation r, bool lower) {
    bool ok = lower ? (r == Relation::LT || r == Relation::LE) : (r == Relation::GT || r == Relation::GE);
    if (!ok)
        throw Error(Errc::Validation, std::string("relation '") + relation_name(r) + "' not allowed here");
}

// Follows `pol` from `v` until a vertex repeats; letters before the first
// occurrence of the repeated vertex form the prefix.
inline LassoWord policy_lasso(const Dpg& g, const Policy& pol, int v) {
    std::map<int, int> at;
    Word letters;
    while (!at.count(v)) {
        at[v] = int(letters.size());
        const auto& e = g.edges[pol[v]];
        letters.push_back(e.label);
        v = e.dst;
    }
    int k = at[v];
    return {Word(letters.begin(), letters.begin() + k), Word(letters.begin() + k, letters.end())};
}

inline Verdict nonempty_infinite(const Nmda& a, const Rational& nu, Relation rel) {
    Dpg g = from_nmda(a);
    auto sol = solve_min_dpg(g);
    int best = a.initial.front();
    for (int q : a.initial)
        if (sol.value[q] < sol.value[best])
            best = q;
    Verdict v;
    v.holds = compare(sol.value[best], rel, nu);
    v.configurations = std::size_t(g.num_vertices);
    if (v.holds)
        v.witness = policy_lasso(g, sol.policy, best);
    return v;
}

// The automaton's states, one copy per initial state without the end edge,
// and a zero sink entered on an extra end edge from every original state.
inline Verdict nonempty_finite_lt(const Nmda& a, const Rational& nu) {
    int n = a.num_states();
    int k = int(a.initial.size());
    int sink = n + k;
    Dpg g;
    g.num_vertices = n + k + 1;
    for (const auto& t : a.transitions)
        g.edges.push_back({t.src, t.dst, t.weight, 1 / t.discount, t.letter});
    for (int i = 0; i < k; ++i)
        for (const auto& t : a.transitions)
            if (t.src == a.initial[i])
                g.edges.push_back({n + i, t.dst, t.weight, 1 / t.discount, t.letter});
    Rational half(1, 2);
    for (int q = 0; q < n; ++q)
        g.edges.push_back({q, sink, Rational(0), half, -1});
    g.edges.push_back({sink, sink, Rational(0), half, -1});
    g.build();
    auto sol = solve_min_dpg(g);
    int best = n;
    for (int i = 0; i < k; ++i)
        if (sol.value[n + i] < sol.value[best])
            best = n + i;
    Verdict v;
    v.configurations = std::size_t(g.num_vertices);
    v.holds = sol.value[best] < nu;
    if (!v.holds)
        return v;
    Word u;
    Rational value = 0, scale = 1;
    int at = best;
    for (;;) {
        const auto& e = g.edges[sol.policy[at]];
        if (e.dst == sink)
            break;
        u.push_back(e.label);
        value += e.weight * scale;
        scale *= e.discount;
        at = e.dst;
        if (value < nu)
            break;
    }
    v.witness = u;
    return v;
}

inline Rational max_abs_weight(const Nmda& a) {
    Rational g = 0;
    for (const auto& t : a.transitions)
        if (abs(t.weight) > g)
            g = abs(t.weight);
    return g;
}

// Shortest u with some run valued <= nu: BFS over (state, D) where
// D = rho(u) * (run value - nu). Once D >= 2 max|weight| it never decreases.
inline std::optional<Word> finite_le_witness(const Nmda& a, const Rational& nu) {
    Rational cap = 2 * max_abs_weight(a);
    std::map<std::pair<int, Rational>, int> id;
    std::vector<std::pair<int, Rational>> nodes;
    std::vector<std::pair<int, int>> parent;
    auto visit = [&](int q, const Rational& d, int from, int letter) -> std::optional<Word> {
        if (d <= 0) {
            // roots are entered by a letter, so every node contributes one
            Word w{letter};
            for (int n = from; n >= 0; n = parent[n].first)
                w.push_back(parent[n].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        if (d >= cap)
            return std::nullopt;
        auto [it, fresh] = id.emplace(std::make_pair(q, d), int(nodes.size()));
        if (fresh) {
            nodes.push_back({q, d});
            parent.push_back({from, letter});
        }
        return std::nullopt;
    };
    for (int q : a.initial)
        for (int s = 0; s < a.num_letters(); ++s)
            for (int ti : a.out(q, s)) {
                const auto& t = a.transitions[ti];
                if (auto w = visit(t.dst, t.discount * (t.weight - nu), -1, s))
                    return w;
            }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [q, d] = nodes[i];
        for (int s = 0; s < a.num_letters(); ++s)
            for (int ti : a.out(q, s)) {
                const auto& t = a.transitions[ti];
                if (auto w = visit(t.dst, t.discount * (d + t.weight), int(i), s))
                    return w;
            }
    }
    return std::nullopt;
}

inline Verdict nonempty_finite_le(const Nmda& a, const Rational& nu) {
    require_integral(a);
    auto reach = reachable_states(a);
    std::vector<int> var(a.states.size(), -1);
    int nv = 0;
    for (const auto& t : a.transitions)
        if (reach[t.src] && var[t.dst] < 0)
            var[t.dst] = nv++;
    LinearProgram lp;
    lp.num_vars = nv;
    lp.objective.assign(nv, Rational(1));
    for (const auto& t : a.transitions) {
        if (!reach[t.src])
            continue;
        if (a.is_initial(t.src)) {
            std::vector<Rational> row(nv, Rational(0));
            row[var[t.dst]] = 1;
            lp.add_constraint(row, t.discount * (t.weight - nu));
        }
        if (var[t.src] >= 0) {
            std::vector<Rational> row(nv, Rational(0));
            row[var[t.dst]] += 1;
            row[var[t.src]] -= t.discount;
            lp.add_constraint(row, t.discount * t.weight);
        }
    }
    auto res = lp_maximize(lp);
    Verdict v;
    v.configurations = std::size_t(nv);
    if (res.status == LpResult::Infeasible)
        v.holds = true;
    else if (res.status == LpResult::Optimal)
        v.holds = std::any_of(res.x.begin(), res.x.end(), [](const Rational& x) { return x == 0; });
    else
        throw std::logic_error("nonemptiness LP unbounded");
    if (v.holds) {
        auto w = finite_le_witness(a, nu);
        if (!w)
            throw std::logic_error("nonemptiness LP and witness search disagree");
        v.witness = *w;
    }
    return v;
}

// Iterative Tarjan; marks configurations lying on some cycle.
inline std::vector<bool> on_cycle(const ConfigGraph& g) {
    int n = int(g.configs.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on_stack(n, false), cyc(n, false);
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        int next_letter;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.next_letter < g.letters) {
                int w = g.next(f.v, f.next_letter++);
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            int v = f.v;
            call.pop_back();
            if (!call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<int> members;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = ncomp;
                    members.push_back(w);
                } while (w != v);
                bool cyclic = members.size() > 1;
                if (!cyclic)
                    for (int s = 0; s < g.letters; ++s)
                        cyclic = cyclic || g.next(v, s) == v;
                for (int m : members)
                    cyc[m] = cyclic;
                ++ncomp;
            }
        }
    }
    return cyc;
}

// Shortest nonempty word leading from c back to c.
inline Word cycle_through(const ConfigGraph& g, int c) {
    std::map<int, std::pair<int, int>> parent;  // node -> (prev, letter)
    std::vector<int> queue{c};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int s = 0; s < g.letters; ++s) {
            int w = g.next(v, s);
            if (w == c) {
                Word out{s};
                for (int x = v; x != c; x = parent[x].first)
                    out.push_back(parent[x].second);
                std::reverse(out.begin(), out.end());
                return out;
            }
            if (!parent.count(w)) {
                parent[w] = {v, s};
                queue.push_back(w);
            }
        }
    }
    throw std::logic_error("configuration is not on a cycle");
}

// Path to c, then letter 0 repeatedly until a configuration repeats.
inline LassoWord close_with_first_letter(const ConfigGraph& g, int c) {
    Word letters = g.path_to(c);
    std::map<int, int> at;
    while (!at.count(c)) {
        at[c] = int(letters.size());
        letters.push_back(0);
        c = g.next(c, 0);
    }
    int k = at[c];
    return {Word(letters.begin(), letters.begin() + k), Word(letters.begin() + k, letters.end())};
}

template <class Pred>
inline std::optional<Word> first_finite(const ConfigGraph& g, Pred pred) {
    for (std::size_t i = 0; i < g.configs.size(); ++i)
        for (int s = 0; s < g.letters; ++s)
            if (pred(g.configs[g.next(int(i), s)])) {
                Word w = g.path_to(int(i));
                w.push_back(s);
                return w;
            }
    return std::nullopt;
}

template <class Pred>
inline std::optional<LassoWord> first_cyclic(const ConfigGraph& g, Pred pred) {
    auto cyc = on_cycle(g);
    for (std::size_t i = 0; i < g.configs.size(); ++i)
        if (cyc[i] && pred(g.configs[i]))
            return LassoWord{g.path_to(int(i)), cycle_through(g, int(i))};
    return std::nullopt;
}

struct Split {
    std::size_t n;  // states [0, n) belong to the left automaton
    bool left_any(const GapConfig& c, bool (*p)(const Extended&)) const {
        for (std::size_t i = 0; i < n; ++i)
            if (p(c[i]))
                return true;
        return false;
    }
    bool right_any(const GapConfig& c, bool (*p)(const Extended&)) const {
        for (std::size_t i = n; i < c.size(); ++i)
            if (p(c[i]))
                return true;
        return false;
    }
    bool right_all(const GapConfig& c, bool (*p)(const Extended&)) const {
        for (std::size_t i = n; i < c.size(); ++i)
            if (!p(c[i]))
                return false;
        return true;
    }
};

inline bool is_zero(const Extended& g) { return g && *g == 0; }
inline bool is_positive(const Extended& g) { return !g || *g > 0; }
inline bool is_finite(const Extended& g) { return bool(g); }
inline bool is_infinite(const Extended& g) { return !g; }

}  // namespace detail

inline Verdict nonempty(const Nmda& a, const Rational& nu, Relation rel, WordMode mode) {
    detail::require_rel(rel, true);
    if (mode == WordMode::Infinite)
        return detail::nonempty_infinite(a, nu, rel);
    if (rel == Relation::LT)
        return detail::nonempty_finite_lt(a, nu);
    return detail::nonempty_finite_le(a, nu);
}

// Holds iff a(w) rel b(w) for every nonempty finite (or infinite) word w.
inline Verdict contain(const Nmda& a, const Nmda& b, Relation rel, WordMode mode, const SearchOptions& opt = {}) {
    detail::require_rel(rel, false);
    require_same_choice(a, b);
    Nmda c = union_of(a, b);
    DetContext ctx = make_context(c);
    ConfigGraph g = explore(ctx, opt);
    detail::Split sp{a.states.size()};
    Verdict v;
    v.configurations = g.configs.size();
    if (mode == WordMode::Finite) {
        std::optional<Word> w;
        if (rel == Relation::GT)
            w = detail::first_finite(g, [&](const GapConfig& x) { return sp.left_any(x, detail::is_zero); });
        else
            w = detail::first_finite(g, [&](const GapConfig& x) {
                return sp.left_any(x, detail::is_zero) && sp.right_all(x, detail::is_positive);
            });
        v.holds = !w;
        if (w)
            v.witness = *w;
        return v;
    }
    std::optional<LassoWord> w;
    if (rel == Relation::GT) {
        w = detail::first_cyclic(g, [&](const GapConfig& x) { return sp.left_any(x, detail::is_finite); });
    } else {
        for (std::size_t i = 0; i < g.configs.size() && !w; ++i) {
            const auto& x = g.configs[i];
            if (sp.left_any(x, detail::is_zero) && sp.right_all(x, detail::is_infinite))
                w = detail::close_with_first_letter(g, int(i));
        }
    }
    v.holds = !w;
    if (w)
        v.witness = *w;
    return v;
}

inline Verdict equivalent(const Nmda& a, const Nmda& b, WordMode mode, const SearchOptions& opt = {}) {
    Verdict v = contain(a, b, Relation::GE, mode, opt);
    if (!v.holds)
        return v;
    Verdict u = contain(b, a, Relation::GE, mode, opt);
    u.configurations += v.configurations;
    return u;
}

// Holds iff a(w) rel nu for every word w.
inline Verdict universal(const Nmda& a, const Rational& nu, Relation rel, WordMode mode,
                         const SearchOptions& opt = {}) {
    detail::require_rel(rel, true);
    Dmda k = const_automaton(choice_transducer_of(a), nu);
    return contain(k, a, rel == Relation::LT ? Relation::GT : Relation::GE, mode, opt);
}

// Holds iff a(w) = nu for some word w.
inline Verdict exact_value(const Nmda& a, const Rational& nu, WordMode mode, const SearchOptions& opt = {}) {
    Dmda k = const_automaton(choice_transducer_of(a), nu);
    Nmda c = union_of(a, k);
    DetContext ctx = make_context(c);
    ConfigGraph g = explore(ctx, opt);
    detail::Split sp{a.states.size()};
    Verdict v;
    v.configurations = g.configs.size();
    if (mode == WordMode::Finite) {
        auto w = detail::first_finite(g, [&](const GapConfig& x) {
            return sp.left_any(x, detail::is_zero) && sp.right_any(x, detail::is_zero);
        });
        v.holds = bool(w);
        if (w)
            v.witness = *w;
        return v;
    }
    auto w = detail::first_cyclic(g, [&](const GapConfig& x) {
        return sp.left_any(x, detail::is_finite) && sp.right_any(x, detail::is_finite);
    });
    v.holds = bool(w);
    if (w)
        v.witness = *w;
    return v;
}

// Containment of deterministic automata through a - b and nonemptiness.
inline Verdict dmda_contain(const Dmda& a, const Dmda& b, Relation rel, WordMode mode) {
    detail::require_rel(rel, false);
    if (!a.deterministic() || !b.deterministic())
        throw Error(Errc::NotDeterministic, "dmda_contain expects deterministic automata");
    Nmda c = subtract(a, b);
    Verdict v = nonempty(c, Rational(0), rel == Relation::GT ? Relation::LE : Relation::LT, mode);
    v.holds = !v.holds;
    return v;
}

}  // namespace nmda
