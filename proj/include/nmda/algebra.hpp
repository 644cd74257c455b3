#pragma once

#include "core.hpp"
#include "determinize.hpp"
#include "tidy.hpp"

#include <deque>
#include <map>

namespace nmda {

inline Nmda scale(const Nmda& a, const Rational& m) {
    if (m < 0)
        throw Error(Errc::NegativeScalar, "scale factor must be non-negative; use negate");
    Nmda r = a;
    for (auto& t : r.transitions)
        t.weight *= m;
    return finalize(std::move(r));
}

inline Dmda negate(const Nmda& a) {
    Dmda d = determinize(a);
    for (auto& t : d.transitions)
        t.weight = -t.weight;
    return as_dmda(finalize(std::move(d)));
}

// Synchronized product scan: every reachable pair of same-letter transitions
// must agree on the discount factor.
inline TidyResult same_choice_function(const Nmda& a, const Nmda& b) {
    require_same_alphabet(a.alphabet, b.alphabet);
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> nodes, parent;
    std::deque<int> queue;
    auto visit = [&](int p, int q, int from, int letter) {
        auto [it, fresh] = id.emplace(std::make_pair(p, q), int(nodes.size()));
        if (!fresh)
            return;
        nodes.push_back({p, q});
        parent.push_back({from, letter});
        queue.push_back(it->second);
    };
    for (int p : a.initial)
        for (int q : b.initial)
            visit(p, q, -1, -1);
    while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        auto [p, q] = nodes[n];
        for (int s = 0; s < a.num_letters(); ++s) {
            for (int t1 : a.out(p, s))
                for (int t2 : b.out(q, s))
                    if (a.transitions[t1].discount != b.transitions[t2].discount) {
                        Word w = detail::trace_back(parent, n);
                        w.push_back(s);
                        return {false, w};
                    }
            for (int t1 : a.out(p, s))
                for (int t2 : b.out(q, s))
                    visit(a.transitions[t1].dst, b.transitions[t2].dst, n, s);
        }
    }
    return {true, std::nullopt};
}

inline void require_same_choice(const Nmda& a, const Nmda& b) {
    auto r = same_choice_function(a, b);
    if (!r.holds)
        throw Error(Errc::IncompatibleChoiceFunctions, "automata disagree on a discount factor", r.witness);
}

// Reachable part of the product, weights summed.
inline Nmda add(const Nmda& a, const Nmda& b) {
    require_same_choice(a, b);
    Nmda r;
    r.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> nodes;
    auto intern = [&](int p, int q) {
        auto [it, fresh] = id.emplace(std::make_pair(p, q), int(nodes.size()));
        if (fresh) {
            nodes.push_back({p, q});
            r.states.push_back("<" + a.states[p] + "," + b.states[q] + ">");
        }
        return it->second;
    };
    for (int p : a.initial)
        for (int q : b.initial)
            r.initial.push_back(intern(p, q));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, q] = nodes[i];
        for (int s = 0; s < a.num_letters(); ++s)
            for (int t1 : a.out(p, s))
                for (int t2 : b.out(q, s)) {
                    const auto& x = a.transitions[t1];
                    const auto& y = b.transitions[t2];
                    int dst = intern(x.dst, y.dst);
                    r.transitions.push_back({int(i), s, dst, x.weight + y.weight, x.discount});
                }
    }
    return finalize(std::move(r));
}

inline Nmda subtract(const Nmda& a, const Nmda& b) {
    require_same_choice(a, b);
    return add(a, negate(b));
}

// Disjoint union, states prefixed by "a." and "b.".
inline Nmda union_of(const Nmda& a, const Nmda& b) {
    require_same_alphabet(a.alphabet, b.alphabet);
    Nmda r;
    r.alphabet = a.alphabet;
    int n = a.num_states();
    for (const auto& s : a.states)
        r.states.push_back("a." + s);
    for (const auto& s : b.states)
        r.states.push_back("b." + s);
    r.initial = a.initial;
    for (int q : b.initial)
        r.initial.push_back(q + n);
    r.transitions = a.transitions;
    for (auto t : b.transitions) {
        t.src += n;
        t.dst += n;
        r.transitions.push_back(std::move(t));
    }
    return finalize(std::move(r));
}

inline Nmda min_union(const Nmda& a, const Nmda& b) {
    require_same_choice(a, b);
    return union_of(a, b);
}

namespace detail {

// Pairwise-gap determinization of the union of two DMDAs sharing a choice
// function: states <q1, q2, g1, g2>, a dead run keeps state -1 and gap inf.
inline Dmda min_of_dmdas(const Dmda& x, const Dmda& y) {
    Rational lo, hi;
    bool first = true;
    for (const auto* m : {&x, &y})
        for (const auto& t : m->transitions) {
            if (first || t.weight < lo)
                lo = t.weight;
            if (first || t.weight > hi)
                hi = t.weight;
            first = false;
        }
    Rational two_t = 2 * (hi - lo);
    struct Node {
        int q1, q2;
        Extended g1, g2;
    };
    std::vector<Node> nodes;
    std::map<std::string, int> id;
    Nmda r;
    r.alphabet = x.alphabet;
    auto intern = [&](const Node& nd) {
        std::string key = std::to_string(nd.q1) + "," + std::to_string(nd.q2) + "," + to_string(nd.g1) + "," +
                          to_string(nd.g2);
        auto [it, fresh] = id.emplace(key, int(nodes.size()));
        if (fresh) {
            nodes.push_back(nd);
            std::string n1 = nd.q1 >= 0 ? x.states[nd.q1] : "-";
            std::string n2 = nd.q2 >= 0 ? y.states[nd.q2] : "-";
            r.states.push_back("<" + n1 + "," + n2 + "," + to_string(nd.g1) + "," + to_string(nd.g2) + ">");
        }
        return it->second;
    };
    r.initial.push_back(intern({x.initial.front(), y.initial.front(), Rational(0), Rational(0)}));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int s = 0; s < x.num_letters(); ++s) {
            Node nd = nodes[i];
            Extended c1, c2;
            Rational rho;
            if (nd.g1) {
                const auto& t = x.step(nd.q1, s);
                c1 = Rational(*nd.g1 + t.weight);
                rho = t.discount;
                nd.q1 = t.dst;
            }
            if (nd.g2) {
                const auto& t = y.step(nd.q2, s);
                c2 = Rational(*nd.g2 + t.weight);
                if (!nd.g1)
                    rho = t.discount;
                nd.q2 = t.dst;
            }
            Rational w = *ext_min(c1, c2);
            auto gap_of = [&](const Extended& c) -> Extended {
                if (!c)
                    return std::nullopt;
                Rational g = rho * (*c - w);
                if (g > two_t)
                    return std::nullopt;
                return g;
            };
            nd.g1 = gap_of(c1);
            nd.g2 = gap_of(c2);
            if (!nd.g1)
                nd.q1 = -1;
            if (!nd.g2)
                nd.q2 = -1;
            int dst = intern(nd);
            r.transitions.push_back({int(i), s, dst, w, rho});
        }
    }
    return as_dmda(finalize(std::move(r)));
}

inline Dmda negated_weights(Dmda d) {
    for (auto& t : d.transitions)
        t.weight = -t.weight;
    return as_dmda(finalize(std::move(d)));
}

}  // namespace detail

// max(a, b) = -min(-a, -b), the inner min by pairwise-gap determinization.
inline Dmda max(const Nmda& a, const Nmda& b) {
    require_same_choice(a, b);
    Dmda na = negate(a), nb = negate(b);
    return detail::negated_weights(detail::min_of_dmdas(na, nb));
}

// Reference path: determinize the union of the negations, then negate.
inline Dmda max_by_double_determinization(const Nmda& a, const Nmda& b) {
    require_same_choice(a, b);
    return negate(union_of(negate(a), negate(b)));
}

// Duplicates the transducer's initial state: the first step weighs nu, all
// later steps weigh 0.
inline Dmda const_automaton(const ChoiceTransducer& t, const Rational& nu) {
    Nmda r;
    r.alphabet = t.alphabet;
    r.states.push_back("init");
    for (const auto& s : t.states)
        r.states.push_back("t." + s);
    r.initial = {0};
    for (int s = 0; s < t.num_letters(); ++s)
        r.transitions.push_back({0, s, t.next_of(t.initial, s) + 1, nu, t.output_of(t.initial, s)});
    for (int q = 0; q < t.num_states(); ++q)
        for (int s = 0; s < t.num_letters(); ++s)
            r.transitions.push_back({q + 1, s, t.next_of(q, s) + 1, Rational(0), t.output_of(q, s)});
    return as_dmda(finalize(std::move(r)));
}

}  // namespace nmda
