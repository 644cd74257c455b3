#include "nmda/nmda.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

using namespace nmda;
using json = nlohmann::ordered_json;

namespace {

int exit_code(Errc c) {
    switch (c) {
    case Errc::Parse: return 2;
    case Errc::BudgetExceeded: return 4;
    default: return 3;
    }
}

Nmda load_automaton(const std::string& path) {
    io::Document d = io::load(path);
    if (d.kind != io::Kind::NMDA && d.kind != io::Kind::DMDA)
        throw Error(Errc::Validation, path + ": expected NMDA or DMDA");
    return std::get<Nmda>(d.body);
}

ChoiceTransducer load_transducer(const std::string& path) {
    io::Document d = io::load(path);
    if (d.kind != io::Kind::TRANSDUCER)
        throw Error(Errc::Validation, path + ": expected TRANSDUCER");
    return std::get<ChoiceTransducer>(d.body);
}

Nfa load_nfa(const std::string& path) {
    io::Document d = io::load(path);
    if (d.kind != io::Kind::NFA)
        throw Error(Errc::Validation, path + ": expected NFA");
    return std::get<Nfa>(d.body);
}

json witness_json(const std::vector<std::string>& alphabet, const std::optional<Witness>& w) {
    if (!w)
        return nullptr;
    if (const auto* u = std::get_if<Word>(&*w))
        return format_word(alphabet, *u);
    return format_lasso(alphabet, std::get<LassoWord>(*w));
}

Relation parse_relation(const std::string& s) {
    if (s == "lt")
        return Relation::LT;
    if (s == "le")
        return Relation::LE;
    if (s == "gt")
        return Relation::GT;
    if (s == "ge")
        return Relation::GE;
    throw Error(Errc::Parse, "unknown relation '" + s + "'");
}

WordMode parse_mode(const std::string& s) {
    if (s == "finite")
        return WordMode::Finite;
    if (s == "infinite")
        return WordMode::Infinite;
    throw Error(Errc::Parse, "unknown word mode '" + s + "'");
}

GadgetKind parse_gadget(const std::string& s) {
    if (s == "eq_finite")
        return GadgetKind::EqFinite;
    if (s == "eq_infinite")
        return GadgetKind::EqInfinite;
    if (s == "exact_finite")
        return GadgetKind::ExactFinite;
    throw Error(Errc::Parse, "unknown gadget kind '" + s + "'");
}

json verdict_json(const std::vector<std::string>& alphabet, const Verdict& v) {
    json j;
    j["holds"] = v.holds;
    j["witness"] = witness_json(alphabet, v.witness);
    j["stats"] = {{"configurations", v.configurations}};
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tidy discounted-sum automata toolkit"};
    app.require_subcommand(1);

    std::string file, file2, word, lasso, threshold = "0", rel, mode = "finite", factor, kind, name;
    std::string state;
    std::size_t budget = 0;
    int lambda = 2;

    auto* eval = app.add_subcommand("eval", "value of a finite word or lasso");
    eval->add_option("file", file)->required();
    auto* word_opt = eval->add_option("--word", word, "finite word");
    auto* lasso_opt = eval->add_option("--lasso", lasso, "lasso prefix:cycle");
    eval->add_option("--gap", state, "also report gap(state, word)");
    word_opt->excludes(lasso_opt);

    auto* tidy = app.add_subcommand("tidy", "tidiness check");
    tidy->add_option("file", file)->required();

    auto* comp = app.add_subcommand("compliance", "compliance with a transducer");
    comp->add_option("file", file)->required();
    comp->add_option("transducer", file2)->required();

    auto* tof = app.add_subcommand("transducer-of", "choice-function transducer of a tidy automaton");
    tof->add_option("file", file)->required();

    auto* det = app.add_subcommand("determinize", "determinize a tidy integral automaton");
    det->add_option("file", file)->required();
    det->add_option("--budget", budget, "maximal number of configurations");

    auto* op = app.add_subcommand("op", "algebraic operations");
    op->require_subcommand(1);
    auto* op_scale = op->add_subcommand("scale", "multiply weights by a non-negative factor");
    op_scale->add_option("file", file)->required();
    op_scale->add_option("--factor", factor)->required();
    auto* op_neg = op->add_subcommand("negate", "negation");
    op_neg->add_option("file", file)->required();
    std::vector<CLI::App*> binary;
    for (const char* n : {"add", "sub", "min", "max"}) {
        auto* s = op->add_subcommand(n, std::string(n) + " of two automata");
        s->add_option("a", file)->required();
        s->add_option("b", file2)->required();
        binary.push_back(s);
    }
    auto* op_const = op->add_subcommand("const", "constant automaton over a transducer");
    op_const->add_option("transducer", file)->required();
    op_const->add_option("--threshold", threshold)->required();

    auto* decide = app.add_subcommand("decide", "decision problems");
    decide->require_subcommand(1);
    auto* d_ne = decide->add_subcommand("nonempty", "exists w with a(w) rel threshold");
    auto* d_contain = decide->add_subcommand("contain", "a(w) rel b(w) for all w");
    auto* d_equiv = decide->add_subcommand("equiv", "a(w) = b(w) for all w");
    auto* d_univ = decide->add_subcommand("universal", "a(w) rel threshold for all w");
    auto* d_exact = decide->add_subcommand("exact", "exists w with a(w) = threshold");
    for (auto* s : {d_ne, d_contain, d_equiv, d_univ, d_exact}) {
        s->add_option("a", file)->required();
        s->add_option("--mode", mode)->check(CLI::IsMember({"finite", "infinite"}));
        s->add_option("--budget", budget);
    }
    for (auto* s : {d_contain, d_equiv})
        s->add_option("b", file2)->required();
    for (auto* s : {d_ne, d_univ, d_exact})
        s->add_option("--threshold", threshold);
    for (auto* s : {d_ne, d_univ, d_contain})
        s->add_option("--rel", rel)->required()->check(CLI::IsMember({"lt", "le", "gt", "ge"}));

    auto* gen = app.add_subcommand("gen", "generators");
    gen->require_subcommand(1);
    auto* g_nfa = gen->add_subcommand("nfa2nda", "NFA embedding");
    g_nfa->add_option("nfa", file)->required();
    g_nfa->add_option("--lambda", lambda);
    auto* g_gadget = gen->add_subcommand("gadget", "hardness gadget");
    g_gadget->add_option("nfa", file)->required();
    g_gadget->add_option("--kind", kind)->required();
    auto* g_cm = gen->add_subcommand("cm-reduce", "counter-machine reduction");
    g_cm->add_option("machine", file)->required();
    auto* g_fix = gen->add_subcommand("fixture", "named example automata");
    g_fix->add_option("name", name);

    auto* orc = app.add_subcommand("oracle", "reference implementations");
    orc->require_subcommand(1);
    auto* o_runs = orc->add_subcommand("runs", "enumerate runs on a word");
    o_runs->add_option("file", file)->required();
    o_runs->add_option("--word", word)->required();
    auto* o_dpg = orc->add_subcommand("dpg", "brute-force game values of an automaton's graph");
    o_dpg->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    json out;
    try {
        SearchOptions opt;
        opt.budget = budget;
        if (eval->parsed()) {
            Nmda a = load_automaton(file);
            if (!lasso.empty()) {
                out["value"] = to_string(lasso_value(a, parse_lasso(a.alphabet, lasso)));
            } else {
                Word u = parse_word(a.alphabet, word);
                out["value"] = to_string(word_value(a, u));
                if (!state.empty()) {
                    int q = find_index(a.states, state);
                    if (q < 0)
                        throw Error(Errc::Validation, "UnknownState(" + state + ")");
                    out["gap"] = to_string(gap(a, q, u));
                }
            }
        } else if (tidy->parsed()) {
            Nmda a = load_automaton(file);
            auto r = is_tidy(a);
            out["tidy"] = r.holds;
            out["witness"] = r.witness ? json(format_word(a.alphabet, *r.witness)) : json(nullptr);
        } else if (comp->parsed()) {
            Nmda a = load_automaton(file);
            auto r = is_compliant(a, load_transducer(file2));
            out["compliant"] = r.holds;
            out["witness"] = r.witness ? json(format_word(a.alphabet, *r.witness)) : json(nullptr);
        } else if (tof->parsed()) {
            auto t = choice_transducer_of(load_automaton(file));
            out["transducer"] = io::to_text(t);
            out["stats"] = {{"states", t.num_states()}};
        } else if (det->parsed()) {
            auto d = determinize(load_automaton(file), opt);
            out["automaton"] = io::to_text(d);
            out["stats"] = {{"configurations", d.num_states()}};
        } else if (op->parsed()) {
            Nmda r;
            if (op_scale->parsed())
                r = scale(load_automaton(file), parse_rational(factor));
            else if (op_neg->parsed())
                r = negate(load_automaton(file));
            else if (op_const->parsed())
                r = const_automaton(load_transducer(file), parse_rational(threshold));
            else {
                Nmda a = load_automaton(file), b = load_automaton(file2);
                if (binary[0]->parsed())
                    r = add(a, b);
                else if (binary[1]->parsed())
                    r = subtract(a, b);
                else if (binary[2]->parsed())
                    r = min_union(a, b);
                else
                    r = max(a, b);
            }
            out["automaton"] = io::to_text(r);
            out["stats"] = {{"states", r.num_states()}};
        } else if (decide->parsed()) {
            Nmda a = load_automaton(file);
            WordMode m = parse_mode(mode);
            Rational nu = parse_rational(threshold);
            Verdict v;
            if (d_ne->parsed())
                v = nonempty(a, nu, parse_relation(rel), m);
            else if (d_contain->parsed())
                v = contain(a, load_automaton(file2), parse_relation(rel), m, opt);
            else if (d_equiv->parsed())
                v = equivalent(a, load_automaton(file2), m, opt);
            else if (d_univ->parsed())
                v = universal(a, nu, parse_relation(rel), m, opt);
            else
                v = exact_value(a, nu, m, opt);
            out = verdict_json(a.alphabet, v);
        } else if (gen->parsed()) {
            if (g_nfa->parsed()) {
                out["automaton"] = io::to_text(nfa_to_nda(load_nfa(file), lambda));
            } else if (g_gadget->parsed()) {
                out["automaton"] = io::to_text(hardness_gadget(load_nfa(file), parse_gadget(kind)));
            } else if (g_cm->parsed()) {
                io::Document d = io::load(file);
                if (d.kind != io::Kind::CM)
                    throw Error(Errc::Validation, file + ": expected CM");
                const auto& m = std::get<CounterMachine>(d.body);
                auto red = counter_machine_reduction(m);
                auto sim = simulate(m);
                out["A"] = io::to_text(red.a);
                out["B"] = io::to_text(red.b);
                out["trace"] = format_word(red.alphabet, sim.trace);
                out["halted"] = sim.halted;
            } else if (name.empty()) {
                out["fixtures"] = fixtures::names();
            } else {
                out["name"] = name;
                out["text"] = fixtures::source(name);
            }
        } else if (orc->parsed()) {
            Nmda a = load_automaton(file);
            if (o_runs->parsed()) {
                Word u = parse_word(a.alphabet, word);
                json runs = json::array();
                for (const auto& r : oracle::enumerate_runs(a, u)) {
                    json states = json::array({a.states[r.run.start]});
                    for (int t : r.run.transitions)
                        states.push_back(a.states[a.transitions[t].dst]);
                    runs.push_back({{"states", states}, {"value", to_string(r.value)}});
                }
                out["runs"] = runs;
                out["value"] = to_string(oracle::word_value(a, u));
            } else {
                auto vals = oracle::brute_dpg(from_nmda(a));
                json m = json::object();
                for (int q = 0; q < a.num_states(); ++q)
                    m[a.states[q]] = to_string(vals[q]);
                out["values"] = m;
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        json err = {{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return exit_code(e.code());
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!out.contains("stats"))
        out["stats"] = json::object();
    out["stats"]["elapsed_ms"] = ms;
    std::cout << out.dump(2) << "\n";
    return 0;
}
