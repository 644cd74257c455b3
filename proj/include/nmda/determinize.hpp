#pragma once

#include "core.hpp"
#include "tidy.hpp"

#include <atomic>
#include <deque>
#include <unordered_map>

namespace nmda {

// Per-state recoverable gap; nullopt is the unrecoverable gap.
using GapConfig = std::vector<Extended>;

struct DetContext {
    const Nmda* source = nullptr;
    Rational T;
    Rational two_t;
    Integer d;
};

inline DetContext make_context(const Nmda& a) {
    require_integral(a);
    require_tidy(a);
    DetContext ctx;
    ctx.source = &a;
    ctx.T = max_weight_difference(a);
    ctx.two_t = 2 * ctx.T;
    ctx.d = weight_denominator(a);
    return ctx;
}

// The context keeps a pointer to its automaton.
DetContext make_context(Nmda&&) = delete;

inline GapConfig initial_config(const DetContext& ctx) {
    const Nmda& a = *ctx.source;
    GapConfig c(a.states.size(), std::nullopt);
    for (int q : a.initial)
        c[q] = Rational(0);
    return c;
}

struct DetStep {
    GapConfig config;
    Rational weight;
    Rational discount;
};

inline DetStep det_step(const DetContext& ctx, const GapConfig& c, int letter) {
    const Nmda& a = *ctx.source;
    std::vector<Extended> cost(a.states.size(), std::nullopt);
    std::optional<Rational> rho;
    for (int j = 0; j < a.num_states(); ++j) {
        if (!c[j])
            continue;
        for (int ti : a.out(j, letter)) {
            const auto& t = a.transitions[ti];
            if (!rho)
                rho = t.discount;
            else if (*rho != t.discount)
                throw Error(Errc::NotTidy, "two discount factors leave one configuration");
            cost[t.dst] = ext_min(cost[t.dst], Extended(Rational(*c[j] + t.weight)));
        }
    }
    if (!rho)
        throw Error(Errc::NoDiscountDefined, "no transition leaves a finite-gap state");
    Extended best;
    for (const auto& x : cost)
        best = ext_min(best, x);
    DetStep step;
    step.weight = *best;
    step.discount = *rho;
    step.config.assign(a.states.size(), std::nullopt);
    for (int h = 0; h < a.num_states(); ++h) {
        if (!cost[h])
            continue;
        Rational x = *rho * (*cost[h] - *best);
        if (x <= ctx.two_t)
            step.config[h] = x;
    }
    return step;
}

inline std::string config_key(const GapConfig& c) {
    std::string k;
    for (const auto& g : c) {
        k += g ? to_string(*g) : std::string("inf");
        k += ',';
    }
    return k;
}

// "(0,inf)"-style display name.
inline std::string config_name(const GapConfig& c) {
    std::string k = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            k += ',';
        k += c[i] ? to_string(*c[i]) : std::string("inf");
    }
    return k + ")";
}

struct SearchOptions {
    std::size_t budget = 0;  // maximal number of configurations; 0 means unbounded
    const std::atomic<bool>* cancel = nullptr;
};

inline void check_search(const SearchOptions& opt, std::size_t count) {
    if (opt.budget && count > opt.budget)
        throw Error(Errc::BudgetExceeded, "configuration budget of " + std::to_string(opt.budget) + " exceeded");
    if (opt.cancel && opt.cancel->load())
        throw Error(Errc::BudgetExceeded, "search cancelled");
}

// Reachable configuration graph in breadth-first order.
struct ConfigGraph {
    std::vector<GapConfig> configs;
    std::vector<int> succ;  // configs.size() * |alphabet|
    std::vector<Rational> weight;
    std::vector<Rational> discount;
    std::vector<std::pair<int, int>> parent;  // (config, letter); (-1,-1) for the root
    int letters = 0;

    int next(int c, int a) const { return succ[std::size_t(c) * letters + a]; }
    Word path_to(int c) const { return detail::trace_back(parent, c); }
};

inline ConfigGraph explore(const DetContext& ctx, const SearchOptions& opt = {}) {
    const Nmda& a = *ctx.source;
    ConfigGraph g;
    g.letters = a.num_letters();
    std::unordered_map<std::string, int> id;
    auto intern = [&](GapConfig c, int from, int letter) {
        auto [it, fresh] = id.emplace(config_key(c), int(g.configs.size()));
        if (fresh) {
            g.configs.push_back(std::move(c));
            g.parent.push_back({from, letter});
            check_search(opt, g.configs.size());
        }
        return it->second;
    };
    intern(initial_config(ctx), -1, -1);
    for (std::size_t i = 0; i < g.configs.size(); ++i) {
        for (int s = 0; s < g.letters; ++s) {
            DetStep st = det_step(ctx, g.configs[i], s);
            int j = intern(std::move(st.config), int(i), s);
            g.succ.push_back(j);
            g.weight.push_back(st.weight);
            g.discount.push_back(st.discount);
        }
    }
    return g;
}

struct Determinization {
    Dmda dmda;
    std::vector<GapConfig> configs;
};

inline Determinization determinize_with_configs(const Nmda& a, const SearchOptions& opt = {}) {
    DetContext ctx = make_context(a);
    ConfigGraph g = explore(ctx, opt);
    Nmda d;
    d.alphabet = a.alphabet;
    for (const auto& c : g.configs)
        d.states.push_back(config_name(c));
    d.initial = {0};
    for (std::size_t i = 0; i < g.configs.size(); ++i)
        for (int s = 0; s < g.letters; ++s) {
            std::size_t e = i * g.letters + s;
            d.transitions.push_back({int(i), s, g.succ[e], g.weight[e], g.discount[e]});
        }
    return {as_dmda(finalize(std::move(d))), std::move(g.configs)};
}

inline Dmda determinize(const Nmda& a, const SearchOptions& opt = {}) {
    return determinize_with_configs(a, opt).dmda;
}

// The transducer reading the determinized automaton's discount factors,
// collapsed to a minimal Mealy machine.
inline ChoiceTransducer choice_transducer_of(const Nmda& a) {
    Dmda d = determinize(a);
    ChoiceTransducer t;
    t.alphabet = d.alphabet;
    t.states = d.states;
    t.initial = d.initial.front();
    int L = d.num_letters();
    t.next.assign(d.states.size() * L, 0);
    t.output.assign(d.states.size() * L, 2);
    for (int q = 0; q < d.num_states(); ++q)
        for (int s = 0; s < L; ++s) {
            const auto& tr = d.step(q, s);
            t.next[std::size_t(q) * L + s] = tr.dst;
            t.output[std::size_t(q) * L + s] = int(tr.discount.get_num().get_si());
        }
    return minimize_transducer(t);
}

// Structural isomorphism of the reachable parts, pairing states from the
// initial ones; weights and discounts must match exactly.
inline bool isomorphic(const Dmda& x, const Dmda& y) {
    if (x.alphabet != y.alphabet)
        return false;
    std::vector<int> fwd(x.states.size(), -1), bwd(y.states.size(), -1);
    std::deque<std::pair<int, int>> queue{{x.initial.front(), y.initial.front()}};
    fwd[x.initial.front()] = y.initial.front();
    bwd[y.initial.front()] = x.initial.front();
    std::size_t paired = 1;
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        for (int s = 0; s < x.num_letters(); ++s) {
            const auto& t1 = x.step(p, s);
            const auto& t2 = y.step(q, s);
            if (t1.weight != t2.weight || t1.discount != t2.discount)
                return false;
            if (fwd[t1.dst] < 0 && bwd[t2.dst] < 0) {
                fwd[t1.dst] = t2.dst;
                bwd[t2.dst] = t1.dst;
                ++paired;
                queue.push_back({t1.dst, t2.dst});
            } else if (fwd[t1.dst] != t2.dst || bwd[t2.dst] != t1.dst) {
                return false;
            }
        }
    }
    auto rx = reachable_states(x), ry = reachable_states(y);
    return paired == std::size_t(std::count(rx.begin(), rx.end(), true)) &&
           paired == std::size_t(std::count(ry.begin(), ry.end(), true));
}

}  // namespace nmda
