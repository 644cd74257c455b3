#pragma once

#include "core.hpp"

namespace nmda {

struct DpgEdge {
    int src;
    int dst;
    Rational weight;
    Rational discount;  // in (0,1)
    int label = -1;     // originating letter, when built from an automaton
};

struct Dpg {
    int num_vertices = 0;
    std::vector<DpgEdge> edges;
    std::vector<std::vector<int>> out;

    void build() {
        out.assign(num_vertices, {});
        for (std::size_t i = 0; i < edges.size(); ++i)
            out[edges[i].src].push_back(int(i));
    }
};

inline Dpg validate_dpg(Dpg g) {
    std::vector<std::string> diag;
    for (auto& e : g.edges) {
        e.weight.canonicalize();
        e.discount.canonicalize();
        if (e.src < 0 || e.src >= g.num_vertices || e.dst < 0 || e.dst >= g.num_vertices)
            diag.push_back("edge endpoint out of range");
        else if (e.discount <= 0 || e.discount >= 1)
            diag.push_back("edge discount outside (0,1)");
    }
    detail::throw_if(diag);
    g.build();
    for (int v = 0; v < g.num_vertices; ++v)
        if (g.out[v].empty())
            diag.push_back("vertex " + std::to_string(v) + " has no outgoing edge");
    detail::throw_if(diag);
    return g;
}

// Vertex i is state i; edge i is transition i.
inline Dpg from_nmda(const Nmda& a) {
    Dpg g;
    g.num_vertices = a.num_states();
    for (const auto& t : a.transitions)
        g.edges.push_back({t.src, t.dst, t.weight, 1 / t.discount, t.letter});
    g.build();
    return g;
}

using Policy = std::vector<int>;  // vertex -> edge index

// Exact value of every vertex under a positional policy.
inline std::vector<Rational> evaluate_policy(const Dpg& g, const Policy& pol) {
    int n = g.num_vertices;
    std::vector<Rational> val(n);
    std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        if (state[s])
            continue;
        path.clear();
        int v = s;
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = g.edges[pol[v]].dst;
        }
        std::size_t stop = path.size();
        if (state[v] == 1) {
            // v closes a cycle: path[k..] with path[k] == v.
            std::size_t k = std::find(path.begin(), path.end(), v) - path.begin();
            Rational acc = 0, prod = 1;
            for (std::size_t i = k; i < path.size(); ++i) {
                const auto& e = g.edges[pol[path[i]]];
                acc += prod * e.weight;
                prod *= e.discount;
            }
            val[v] = acc / (1 - prod);
            state[v] = 2;
            for (std::size_t i = path.size(); i-- > k + 1;) {
                const auto& e = g.edges[pol[path[i]]];
                val[path[i]] = e.weight + e.discount * val[e.dst];
                state[path[i]] = 2;
            }
            stop = k;
        }
        for (std::size_t i = stop; i-- > 0;) {
            const auto& e = g.edges[pol[path[i]]];
            val[path[i]] = e.weight + e.discount * val[e.dst];
            state[path[i]] = 2;
        }
    }
    return val;
}

struct DpgSolution {
    std::vector<Rational> value;
    Policy policy;
    std::size_t iterations = 0;
};

// Policy iteration for the minimizing player; each improving vertex switches
// to its lowest-index strictly improving edge.
inline DpgSolution solve_min_dpg(const Dpg& g) {
    DpgSolution sol;
    sol.policy.resize(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v)
        sol.policy[v] = g.out[v].front();
    for (;;) {
        ++sol.iterations;
        sol.value = evaluate_policy(g, sol.policy);
        bool changed = false;
        for (int v = 0; v < g.num_vertices; ++v)
            for (int ei : g.out[v]) {
                const auto& e = g.edges[ei];
                if (e.weight + e.discount * sol.value[e.dst] < sol.value[v]) {
                    sol.policy[v] = ei;
                    changed = true;
                    break;
                }
            }
        if (!changed)
            return sol;
    }
}

// max_v |s(v) - min_e (w_e + d_e s(dst_e))|
inline Rational bellman_residual(const Dpg& g, const std::vector<Rational>& s) {
    Rational worst = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        std::optional<Rational> best;
        for (int ei : g.out[v]) {
            const auto& e = g.edges[ei];
            Rational c = e.weight + e.discount * s[e.dst];
            if (!best || c < *best)
                best = c;
        }
        Rational r = abs(s[v] - *best);
        if (r > worst)
            worst = r;
    }
    return worst;
}

// ---------------------------------------------------------------- simplex

// maximize objective . x  subject to  rows[i] . x <= rhs[i],  x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    void add_constraint(std::vector<Rational> row, Rational b) {
        row.resize(num_vars);
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

struct LpResult {
    enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
    std::vector<Rational> x;
    Rational value;
};

namespace detail {

struct Tableau {
    std::vector<std::vector<Rational>> t;  // m rows, cols + 1 (last column is rhs)
    std::vector<int> basis;
    int cols = 0;

    void pivot(int r, int c) {
        Rational p = t[r][c];
        for (auto& x : t[r])
            x /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (int(i) == r || t[i][c] == 0)
                continue;
            Rational f = t[i][c];
            for (int j = 0; j <= cols; ++j)
                t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; columns with allowed[j] == false never enter.
    bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        int m = int(t.size());
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (!allowed[j])
                    continue;
                Rational rc = cost[j];
                for (int i = 0; i < m; ++i)
                    rc -= cost[basis[i]] * t[i][j];
                if (rc > 0)
                    enter = j;
            }
            if (enter < 0)
                return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0)
                    continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

// Two-phase simplex over exact rationals.
inline LpResult lp_maximize(const LinearProgram& p) {
    int n = p.num_vars, m = int(p.rows.size());
    // Columns: x (n), slack (m), artificial (one per negative rhs row).
    std::vector<int> art_row;
    for (int i = 0; i < m; ++i)
        if (p.rhs[i] < 0)
            art_row.push_back(i);
    int cols = n + m + int(art_row.size());
    detail::Tableau tb;
    tb.cols = cols;
    tb.t.assign(m, std::vector<Rational>(cols + 1, Rational(0)));
    tb.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        Rational sign = p.rhs[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j)
            tb.t[i][j] = sign * p.rows[i][j];
        tb.t[i][n + i] = sign;
        tb.t[i][cols] = sign * p.rhs[i];
        if (sign > 0)
            tb.basis[i] = n + i;
    }
    for (std::size_t k = 0; k < art_row.size(); ++k) {
        tb.t[art_row[k]][n + m + int(k)] = 1;
        tb.basis[art_row[k]] = n + m + int(k);
    }
    LpResult res;
    std::vector<bool> allowed(cols, true);
    if (!art_row.empty()) {
        std::vector<Rational> c1(cols, Rational(0));
        for (std::size_t k = 0; k < art_row.size(); ++k)
            c1[n + m + k] = -1;
        tb.maximize(c1, allowed);
        Rational infeas = 0;
        for (int i = 0; i < m; ++i)
            if (tb.basis[i] >= n + m)
                infeas += tb.t[i][cols];
        if (infeas > 0) {
            res.status = LpResult::Infeasible;
            return res;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (int i = 0; i < int(tb.t.size()); ++i) {
            if (tb.basis[i] < n + m)
                continue;
            int c = -1;
            for (int j = 0; j < n + m && c < 0; ++j)
                if (tb.t[i][j] != 0)
                    c = j;
            if (c >= 0) {
                tb.pivot(i, c);
            } else {
                tb.t.erase(tb.t.begin() + i);
                tb.basis.erase(tb.basis.begin() + i);
                --i;
            }
        }
        for (int j = n + m; j < cols; ++j)
            allowed[j] = false;
    }
    std::vector<Rational> c2(cols, Rational(0));
    for (int j = 0; j < n; ++j)
        c2[j] = j < int(p.objective.size()) ? p.objective[j] : Rational(0);
    if (!tb.maximize(c2, allowed)) {
        res.status = LpResult::Unbounded;
        return res;
    }
    res.status = LpResult::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tb.t.size(); ++i)
        if (tb.basis[i] < n)
            res.x[tb.basis[i]] = tb.t[i][cols];
    res.value = 0;
    for (int j = 0; j < n; ++j)
        res.value += c2[j] * res.x[j];
    return res;
}

}  // namespace nmda
