#pragma once

#include "core.hpp"

#include <deque>
#include <map>
#include <optional>
#include <utility>

namespace nmda {

struct TidyResult {
    bool holds = true;
    std::optional<Word> witness;
};

namespace detail {

// Rebuilds the word leading to node `n` from BFS parent links.
inline Word trace_back(const std::vector<std::pair<int, int>>& parent, int n) {
    Word w;
    while (parent[n].first >= 0) {
        w.push_back(parent[n].second);
        n = parent[n].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace detail

// Self-product reachability: the automaton is tidy iff no reachable pair of
// states has two same-letter transitions with different discount factors.
inline TidyResult is_tidy(const Nmda& a) {
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> nodes;
    std::vector<std::pair<int, int>> parent;
    std::deque<int> queue;
    auto visit = [&](int p, int q, int from, int letter) {
        if (p > q)
            std::swap(p, q);
        auto [it, fresh] = id.emplace(std::make_pair(p, q), int(nodes.size()));
        if (!fresh)
            return;
        nodes.push_back({p, q});
        parent.push_back({from, letter});
        queue.push_back(it->second);
    };
    for (int p : a.initial)
        for (int q : a.initial)
            visit(p, q, -1, -1);
    while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        auto [p, q] = nodes[n];
        for (int s = 0; s < a.num_letters(); ++s) {
            for (int t1 : a.out(p, s))
                for (int t2 : a.out(q, s))
                    if (a.transitions[t1].discount != a.transitions[t2].discount) {
                        Word w = detail::trace_back(parent, n);
                        w.push_back(s);
                        return {false, w};
                    }
            for (int t1 : a.out(p, s))
                for (int t2 : a.out(q, s))
                    visit(a.transitions[t1].dst, a.transitions[t2].dst, n, s);
        }
    }
    return {true, std::nullopt};
}

inline void require_tidy(const Nmda& a) {
    auto r = is_tidy(a);
    if (!r.holds)
        throw Error(Errc::NotTidy, "runs disagree on a discount factor", r.witness);
}

// Product with the transducer; every reachable transition must carry the
// factor the transducer emits at that point.
inline TidyResult is_compliant(const Nmda& a, const ChoiceTransducer& t) {
    require_same_alphabet(a.alphabet, t.alphabet);
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> nodes;
    std::vector<std::pair<int, int>> parent;
    std::deque<int> queue;
    auto visit = [&](int q, int s, int from, int letter) {
        auto [it, fresh] = id.emplace(std::make_pair(q, s), int(nodes.size()));
        if (!fresh)
            return;
        nodes.push_back({q, s});
        parent.push_back({from, letter});
        queue.push_back(it->second);
    };
    for (int q : a.initial)
        visit(q, t.initial, -1, -1);
    while (!queue.empty()) {
        int n = queue.front();
        queue.pop_front();
        auto [q, s] = nodes[n];
        for (int l = 0; l < a.num_letters(); ++l) {
            Rational expected = t.output_of(s, l);
            for (int ti : a.out(q, l))
                if (a.transitions[ti].discount != expected) {
                    Word w = detail::trace_back(parent, n);
                    w.push_back(l);
                    return {false, w};
                }
            for (int ti : a.out(q, l))
                visit(a.transitions[ti].dst, t.next_of(s, l), n, l);
        }
    }
    return {true, std::nullopt};
}

// Partition refinement over (output, next-block) rows, restricted to the
// reachable part. Blocks are numbered by first reachable occurrence.
inline ChoiceTransducer minimize_transducer(const ChoiceTransducer& t) {
    int L = t.num_letters();
    std::vector<int> order;
    std::vector<bool> seen(t.num_states(), false);
    std::deque<int> queue{t.initial};
    seen[t.initial] = true;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (int l = 0; l < L; ++l) {
            int n = t.next_of(q, l);
            if (!seen[n]) {
                seen[n] = true;
                queue.push_back(n);
            }
        }
    }
    std::vector<int> block(t.num_states(), 0);
    std::size_t blocks = 1;
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> nb(t.num_states(), 0);
        for (int q : order) {
            std::vector<int> row{block[q]};
            for (int l = 0; l < L; ++l) {
                row.push_back(t.output_of(q, l));
                row.push_back(block[t.next_of(q, l)]);
            }
            nb[q] = sig.emplace(row, int(sig.size())).first->second;
        }
        block = nb;
        if (sig.size() == blocks)
            break;
        blocks = sig.size();
    }
    // Renumber blocks in BFS order so the initial block is 0.
    std::map<int, int> renum;
    for (int q : order)
        renum.emplace(block[q], int(renum.size()));
    ChoiceTransducer m;
    m.alphabet = t.alphabet;
    int n = int(renum.size());
    m.initial = 0;
    m.next.assign(std::size_t(n) * L, 0);
    m.output.assign(std::size_t(n) * L, 2);
    for (int i = 0; i < n; ++i)
        m.states.push_back("s" + std::to_string(i));
    for (int q : order) {
        int b = renum[block[q]];
        for (int l = 0; l < L; ++l) {
            m.next[std::size_t(b) * L + l] = renum[block[t.next_of(q, l)]];
            m.output[std::size_t(b) * L + l] = t.output_of(q, l);
        }
    }
    return m;
}

}  // namespace nmda
