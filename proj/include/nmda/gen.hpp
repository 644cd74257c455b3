#pragma once

#include "core.hpp"

#include <functional>
#include <map>

namespace nmda {

// ---------------------------------------------------------------- NFA embeddings

namespace detail {

// States of the embedding: p0, q_hole, then the NFA's states.
inline Nmda nfa_skeleton(const Nfa& n, int lambda,
                         const std::function<Rational(bool from_p0, bool src_acc, bool dst_acc)>& weight) {
    Nmda a;
    a.alphabet = n.alphabet;
    a.states = {"p0", "q_hole"};
    for (const auto& s : n.states)
        a.states.push_back(s);
    a.initial = {0};
    Rational rho(lambda);
    auto acc = [&](int q) { return q >= 2 && n.accepting[q - 2]; };
    auto add = [&](int src, int letter, int dst) {
        a.transitions.push_back({src, letter, dst, weight(src == 0, acc(src), acc(dst)), rho});
    };
    for (const auto& t : n.transitions)
        add(t.src + 2, t.letter, t.dst + 2);
    for (const auto& t : n.transitions)
        if (std::find(n.initial.begin(), n.initial.end(), t.src) != n.initial.end())
            add(0, t.letter, t.dst + 2);
    for (int q = 0; q < a.num_states(); ++q)
        for (int s = 0; s < a.num_letters(); ++s)
            add(q, s, 1);
    return a;
}

}  // namespace detail

// Value -1/lambda^|u| on accepted words, +1/lambda^|u| otherwise.
inline Nmda nfa_to_nda(const Nfa& nfa, int lambda) {
    if (lambda < 2)
        throw Error(Errc::Validation, "lambda must be at least 2");
    Nfa n = validate_nfa(nfa);
    Rational l(lambda);
    auto w = [&](bool from_p0, bool src_acc, bool dst_acc) -> Rational {
        if (from_p0)
            return dst_acc ? Rational(-1 / l) : Rational(1 / l);
        if (src_acc)
            return dst_acc ? Rational((l - 1) / l) : Rational((l + 1) / l);
        return dst_acc ? Rational(-(l + 1) / l) : Rational(-(l - 1) / l);
    };
    return finalize(detail::nfa_skeleton(n, lambda, w));
}

enum class GadgetKind { EqFinite, EqInfinite, ExactFinite };

inline Nmda hardness_gadget(const Nfa& nfa, GadgetKind kind) {
    Nfa n = validate_nfa(nfa);
    Rational half(1, 2);
    if (kind == GadgetKind::ExactFinite) {
        auto w = [&](bool, bool src_acc, bool dst_acc) -> Rational {
            if (!src_acc)
                return dst_acc ? Rational(-half) : Rational(0);
            return dst_acc ? half : Rational(1);
        };
        return finalize(detail::nfa_skeleton(n, 2, w));
    }
    auto w = [&](bool from_p0, bool src_acc, bool dst_acc) -> Rational {
        if (from_p0 || src_acc)
            return dst_acc ? Rational(0) : half;
        return dst_acc ? Rational(-1) : Rational(-half);
    };
    Nmda a = detail::nfa_skeleton(n, 2, w);
    if (kind == GadgetKind::EqInfinite) {
        int hash = a.num_letters();
        a.alphabet.push_back("#");
        int inf = a.num_states();
        a.states.push_back("q_inf");
        for (int q = 0; q < inf; ++q)
            a.transitions.push_back({q, hash, inf, Rational(0), Rational(2)});
        for (int s = 0; s <= hash; ++s)
            a.transitions.push_back({inf, s, inf, Rational(0), Rational(2)});
    }
    return finalize(std::move(a));
}

// ---------------------------------------------------------------- transducers

inline ChoiceTransducer letter_oriented(const std::vector<std::string>& alphabet, const std::vector<int>& factor) {
    ChoiceTransducer t;
    t.alphabet = alphabet;
    t.states = {"s0"};
    t.initial = 0;
    t.next.assign(alphabet.size(), 0);
    t.output = factor;
    return validate_transducer(std::move(t));
}

inline ChoiceTransducer time_oriented(const std::vector<std::string>& alphabet, const std::vector<int>& period) {
    if (period.empty())
        throw Error(Errc::Validation, "period must be nonempty");
    ChoiceTransducer t;
    t.alphabet = alphabet;
    t.initial = 0;
    int k = int(period.size());
    for (int i = 0; i < k; ++i) {
        t.states.push_back("s" + std::to_string(i));
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
            t.next.push_back((i + 1) % k);
            t.output.push_back(period[i]);
        }
    }
    return validate_transducer(std::move(t));
}

// ---------------------------------------------------------------- counter machines

struct Command {
    enum Kind { Inc, Dec, Goto, Jz, Halt } kind = Halt;
    int counter = 0;  // 0 = x, 1 = y
    int target = 0;   // 1-based; Goto target, Jz zero-branch
    int other = 0;    // Jz positive-branch
};

struct CounterMachine {
    std::vector<Command> commands;  // location i+1 is commands[i]
    int size() const { return int(commands.size()); }
};

inline const char* counter_name(int c) { return c == 0 ? "x" : "y"; }

inline void validate_machine(const CounterMachine& m) {
    std::vector<std::string> diag;
    int n = m.size();
    if (n == 0)
        diag.push_back("EmptySet: no commands");
    auto in_range = [&](int k) { return k >= 1 && k <= n; };
    for (int i = 0; i < n; ++i) {
        const auto& c = m.commands[i];
        if (c.counter < 0 || c.counter > 1)
            diag.push_back("unknown counter at l" + std::to_string(i + 1));
        if ((c.kind == Command::Goto || c.kind == Command::Jz) && !in_range(c.target))
            diag.push_back("jump target out of range at l" + std::to_string(i + 1));
        if (c.kind == Command::Jz && !in_range(c.other))
            diag.push_back("jump target out of range at l" + std::to_string(i + 1));
        if ((c.kind == Command::Inc || c.kind == Command::Dec) && i + 1 >= n)
            diag.push_back("l" + std::to_string(i + 1) + " falls off the end");
    }
    detail::throw_if(diag);
    for (int i = 0; i < n; ++i) {
        if (m.commands[i].kind != Command::Dec)
            continue;
        int loc = i + 1;
        const Command* g = i > 0 ? &m.commands[i - 1] : nullptr;
        if (!g || g->kind != Command::Jz || g->counter != m.commands[i].counter || g->target != loc - 1 ||
            g->other != loc)
            diag.push_back("dec at l" + std::to_string(loc) + " is not guarded by jz " +
                           counter_name(m.commands[i].counter) + " l" + std::to_string(loc - 1) + " l" +
                           std::to_string(loc));
        for (int j = 0; j < n; ++j) {
            if (j == i - 1)
                continue;
            const auto& c = m.commands[j];
            bool jumps = (c.kind == Command::Goto && c.target == loc) ||
                         (c.kind == Command::Jz && (c.target == loc || c.other == loc));
            if (jumps)
                diag.push_back("l" + std::to_string(j + 1) + " jumps directly to the dec at l" + std::to_string(loc));
        }
    }
    detail::throw_if(diag);
}

// Letter layout: inc x, dec x, inc y, dec y, goto l_k, (goto l_k, x=0),
// (goto l_k, y=0), (goto l_k, x>0), (goto l_k, y>0), halt.
struct CmAlphabet {
    int n = 0;
    int inc(int c) const { return 2 * c; }
    int dec(int c) const { return 2 * c + 1; }
    int go(int k) const { return 4 + (k - 1); }
    int zero(int k, int c) const { return 4 + n * (1 + c) + (k - 1); }
    int positive(int k, int c) const { return 4 + n * (3 + c) + (k - 1); }
    int halt() const { return 4 + 5 * n; }
    int size() const { return 5 + 5 * n; }
    bool is_incdec(int l) const { return l < 4; }
    bool is_goto(int l) const { return l >= 4 && l < halt(); }

    std::vector<std::string> names() const {
        std::vector<std::string> v{"inc_x", "dec_x", "inc_y", "dec_y"};
        for (int k = 1; k <= n; ++k)
            v.push_back("goto_l" + std::to_string(k));
        for (int c = 0; c < 2; ++c)
            for (int k = 1; k <= n; ++k)
                v.push_back("goto_l" + std::to_string(k) + "_" + counter_name(c) + "=0");
        for (int c = 0; c < 2; ++c)
            for (int k = 1; k <= n; ++k)
                v.push_back("goto_l" + std::to_string(k) + "_" + counter_name(c) + ">0");
        v.push_back("halt");
        return v;
    }
};

struct SimulationResult {
    Word trace;
    bool halted = false;
    long x = 0, y = 0;
};

// Runs the machine from l1 with zero counters, recording the command trace.
inline SimulationResult simulate(const CounterMachine& m, std::size_t max_steps = 100000) {
    validate_machine(m);
    CmAlphabet al{m.size()};
    SimulationResult r;
    long ctr[2] = {0, 0};
    int loc = 1;
    for (std::size_t step = 0; step < max_steps; ++step) {
        const auto& c = m.commands[loc - 1];
        switch (c.kind) {
        case Command::Inc:
            ++ctr[c.counter];
            r.trace.push_back(al.inc(c.counter));
            ++loc;
            break;
        case Command::Dec:
            --ctr[c.counter];
            r.trace.push_back(al.dec(c.counter));
            ++loc;
            break;
        case Command::Goto:
            r.trace.push_back(al.go(c.target));
            loc = c.target;
            break;
        case Command::Jz:
            if (ctr[c.counter] == 0) {
                r.trace.push_back(al.zero(c.target, c.counter));
                loc = c.target;
            } else {
                r.trace.push_back(al.positive(c.other, c.counter));
                loc = c.other;
            }
            break;
        case Command::Halt:
            r.trace.push_back(al.halt());
            r.halted = true;
            r.x = ctr[0];
            r.y = ctr[1];
            return r;
        }
    }
    r.x = ctr[0];
    r.y = ctr[1];
    return r;
}

struct Reduction {
    Dmda a;
    Nmda b;
    std::vector<std::string> alphabet;
};

namespace detail {

struct CmBuilder {
    CmAlphabet al;
    Nmda b;

    int state(const std::string& name) {
        b.states.push_back(name);
        return b.num_states() - 1;
    }
    void edge(int src, int letter, int dst, const Rational& w, int rho) {
        b.transitions.push_back({src, letter, dst, w, Rational(rho)});
    }
    static Rational gain(int rho) { return Rational(rho - 1, rho); }
    static int primal(int l) {
        static const int f[4] = {5, 4, 7, 6};
        return l < 4 ? f[l] : 15;
    }
    static int dual(int l) {
        static const int f[4] = {4, 5, 6, 7};
        return l < 4 ? f[l] : 15;
    }
    void primal_edge(int src, int l, int dst) { edge(src, l, dst, gain(primal(l)), primal(l)); }
    void dual_edge(int src, int l, int dst) { edge(src, l, dst, gain(dual(l)), dual(l)); }
    void goto_loops(int q) {
        for (int l = 4; l < al.halt(); ++l)
            primal_edge(q, l, q);
    }
    void halt_to(int q, int dst) { edge(q, al.halt(), dst, Rational(15, 16), 16); }
    void sink(int q) {
        for (int l = 0; l < al.size(); ++l)
            edge(q, l, q, Rational(0), 2);
    }
};

}  // namespace detail

inline Reduction counter_machine_reduction(const CounterMachine& m) {
    validate_machine(m);
    int n = m.size();
    detail::CmBuilder g;
    g.al.n = n;
    const auto& al = g.al;
    auto names = al.names();
    g.b.alphabet = names;

    Nmda a;
    a.alphabet = names;
    a.states = {"q_A", "q_A_h"};
    a.initial = {0};
    for (int l = 0; l < al.halt(); ++l)
        a.transitions.push_back({0, l, 0, detail::CmBuilder::gain(g.primal(l)), Rational(g.primal(l))});
    a.transitions.push_back({0, al.halt(), 1, Rational(14, 15), Rational(15)});
    for (int l = 0; l < al.size(); ++l)
        a.transitions.push_back({1, l, 1, Rational(0), Rational(2)});

    int freeze = g.state("q_freeze");
    int halt = g.state("q_halt");
    g.sink(freeze);
    g.sink(halt);
    auto& init = g.b.initial;

    // Halt checker.
    int hc = g.state("q_HC");
    int last = g.state("q_last");
    init.push_back(hc);
    for (int l = 0; l < al.halt(); ++l) {
        g.primal_edge(hc, l, hc);
        g.edge(hc, l, last, Rational(0), 2);
    }
    g.halt_to(hc, halt);
    for (int l = 0; l < al.size(); ++l)
        g.edge(last, l, freeze, Rational(2), 2);

    // Negative-counters checkers.
    for (int c = 0; c < 2; ++c) {
        int q = g.state(std::string("q_NC_") + counter_name(c));
        init.push_back(q);
        for (int l = 0; l < al.halt(); ++l) {
            if (l == al.inc(c))
                g.edge(q, l, q, detail::CmBuilder::gain(c == 0 ? 10 : 14), c == 0 ? 10 : 14);
            else if (l == al.dec(c))
                g.edge(q, l, q, detail::CmBuilder::gain(c == 0 ? 2 : 3), c == 0 ? 2 : 3);
            else
                g.primal_edge(q, l, q);
        }
        g.halt_to(q, halt);
    }

    // Positive-counters checker.
    int bc = g.state("q_BC");
    init.push_back(bc);
    for (int l = 0; l < al.halt(); ++l)
        g.dual_edge(bc, l, bc);
    g.halt_to(bc, halt);

    // Command checker.
    std::vector<int> loc(n + 1);
    for (int k = 1; k <= n; ++k)
        loc[k] = g.state("q_" + std::to_string(k));
    init.push_back(loc[1]);
    for (int j = 1; j <= n; ++j) {
        const auto& cmd = m.commands[j - 1];
        std::map<int, int> move;  // letter -> location
        switch (cmd.kind) {
        case Command::Inc: move[al.inc(cmd.counter)] = j + 1; break;
        case Command::Dec: move[al.dec(cmd.counter)] = j + 1; break;
        case Command::Goto: move[al.go(cmd.target)] = cmd.target; break;
        case Command::Jz:
            move[al.zero(cmd.target, cmd.counter)] = cmd.target;
            move[al.positive(cmd.other, cmd.counter)] = cmd.other;
            break;
        case Command::Halt: break;
        }
        for (int l = 0; l < al.size(); ++l) {
            if (move.count(l))
                g.primal_edge(loc[j], l, loc[move[l]]);
            else if (l == al.halt() && cmd.kind == Command::Halt)
                g.halt_to(loc[j], halt);
            else
                g.edge(loc[j], l, freeze, Rational(0), 2);
        }
    }

    // Zero-jump checkers.
    for (int c = 0; c < 2; ++c) {
        int q0 = g.state(std::string("q_ZC_") + counter_name(c));
        int q1 = g.state(std::string("q_Z_") + counter_name(c));
        init.push_back(q0);
        for (int l = 0; l < 4; ++l) {
            if (l == al.inc(c) || l == al.dec(c))
                g.dual_edge(q0, l, q0);
            else
                g.primal_edge(q0, l, q0);
            g.primal_edge(q1, l, q1);
        }
        g.goto_loops(q0);
        g.goto_loops(q1);
        for (int k = 1; k <= n; ++k)
            g.primal_edge(q0, al.zero(k, c), q1);
        g.halt_to(q0, halt);
        g.halt_to(q1, halt);
    }

    // Positive-jump checkers.
    for (int c = 0; c < 2; ++c) {
        int q0 = g.state(std::string("q_PC0_") + counter_name(c));
        int q1 = g.state(std::string("q_PC1_") + counter_name(c));
        int q2 = g.state(std::string("q_PC2_") + counter_name(c));
        init.push_back(q0);
        for (int l = 0; l < 4; ++l) {
            if (l == al.inc(c))
                g.dual_edge(q0, l, q1);
            else
                g.primal_edge(q0, l, q0);
            g.primal_edge(q1, l, q1);
            if (l == al.inc(c) || l == al.dec(c))
                g.dual_edge(q2, l, q2);
            else
                g.primal_edge(q2, l, q2);
        }
        g.goto_loops(q0);
        g.goto_loops(q1);
        g.goto_loops(q2);
        for (int k = 1; k <= n; ++k) {
            g.edge(q0, al.positive(k, c), freeze, Rational(0), 2);
            g.primal_edge(q1, al.positive(k, c), q2);
        }
        g.halt_to(q0, halt);
        g.edge(q1, al.halt(), freeze, Rational(1), 2);
        g.halt_to(q2, halt);
    }

    return {as_dmda(finalize(std::move(a))), finalize(std::move(g.b)), names};
}

// Single-letter edits of a word over an alphabet of `letters` letters.
inline std::vector<Word> deletions(const Word& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word v = w;
        v.erase(v.begin() + i);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Word> substitutions(const Word& w, int letters) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (int l = 0; l < letters; ++l)
            if (l != w[i]) {
                Word v = w;
                v[i] = l;
                out.push_back(std::move(v));
            }
    return out;
}

inline std::vector<Word> insertions(const Word& w, int letters) {
    std::vector<Word> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (int l = 0; l < letters; ++l) {
            Word v = w;
            v.insert(v.begin() + i, l);
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace nmda
