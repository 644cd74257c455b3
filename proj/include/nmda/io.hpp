#pragma once

#include "core.hpp"
#include "gen.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

namespace nmda::io {

enum class Kind { NMDA, DMDA, TRANSDUCER, NFA, CM };

inline const char* kind_name(Kind k) {
    switch (k) {
    case Kind::NMDA: return "NMDA";
    case Kind::DMDA: return "DMDA";
    case Kind::TRANSDUCER: return "TRANSDUCER";
    case Kind::NFA: return "NFA";
    case Kind::CM: return "CM";
    }
    return "?";
}

struct Document {
    Kind kind = Kind::NMDA;
    std::variant<Nmda, ChoiceTransducer, Nfa, CounterMachine> body;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& msg) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct Line {
    std::size_t number;
    std::string key;  // text before ':'; empty for the header
    std::vector<std::string> fields;
};

// A token starting with '#' opens a comment, except a lone "#" used as a
// name: on a transition line only the letter field may be "#", on list lines
// any token after the key may be.
inline std::vector<Line> lines_of(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#')
            continue;
        Line l{n, "", {}};
        auto colon = raw.find(':');
        std::string body = raw;
        if (!out.empty() || colon != std::string::npos) {
            if (colon == std::string::npos)
                fail(n, "expected 'key: value'");
            auto key = split(raw.substr(0, colon));
            if (key.size() != 1)
                fail(n, "expected a single key before ':'");
            l.key = key[0];
            body = raw.substr(colon + 1);
        }
        for (const auto& tok : split(body)) {
            if (tok[0] == '#') {
                bool name = tok == "#" && (l.key == "t" ? l.fields.size() == 1 : l.key == "alphabet");
                if (!name)
                    break;
            }
            l.fields.push_back(tok);
        }
        out.push_back(std::move(l));
    }
    return out;
}

inline Rational rational_at(const Line& l, std::size_t i) {
    try {
        return parse_rational(l.fields.at(i));
    } catch (const Error& e) {
        fail(l.number, e.what());
    }
}

inline int location(const Line& l, const std::string& tok) {
    std::string s = tok;
    if (!s.empty() && (s[0] == 'l' || s[0] == 'L'))
        s.erase(0, 1);
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
        fail(l.number, "bad location '" + tok + "'");
    return std::stoi(s);
}

inline int counter(const Line& l, const std::string& tok) {
    if (tok == "x")
        return 0;
    if (tok == "y")
        return 1;
    fail(l.number, "bad counter '" + tok + "'");
}

}  // namespace detail

inline Document parse(const std::string& text) {
    auto lines = detail::lines_of(text);
    if (lines.empty())
        throw Error(Errc::Parse, "empty document");
    const auto& head = lines.front();
    if (!head.key.empty() || head.fields.size() != 1)
        detail::fail(head.number, "expected a kind header");
    Document doc;
    const std::string& k = head.fields[0];
    if (k == "NMDA")
        doc.kind = Kind::NMDA;
    else if (k == "DMDA")
        doc.kind = Kind::DMDA;
    else if (k == "TRANSDUCER")
        doc.kind = Kind::TRANSDUCER;
    else if (k == "NFA")
        doc.kind = Kind::NFA;
    else if (k == "CM")
        doc.kind = Kind::CM;
    else
        detail::fail(head.number, "unknown kind '" + k + "'");

    if (doc.kind == Kind::CM) {
        CounterMachine m;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto& l = lines[i];
            int idx = detail::location(l, l.key);
            if (idx != m.size() + 1)
                detail::fail(l.number, "locations must be numbered 1, 2, ... in order");
            const auto& f = l.fields;
            Command c;
            if (f.size() == 2 && f[0] == "inc")
                c = {Command::Inc, detail::counter(l, f[1]), 0, 0};
            else if (f.size() == 2 && f[0] == "dec")
                c = {Command::Dec, detail::counter(l, f[1]), 0, 0};
            else if (f.size() == 2 && f[0] == "goto")
                c = {Command::Goto, 0, detail::location(l, f[1]), 0};
            else if (f.size() == 4 && f[0] == "jz")
                c = {Command::Jz, detail::counter(l, f[1]), detail::location(l, f[2]), detail::location(l, f[3])};
            else if (f.size() == 1 && f[0] == "halt")
                c = {Command::Halt, 0, 0, 0};
            else
                detail::fail(l.number, "bad command");
            m.commands.push_back(c);
        }
        validate_machine(m);
        doc.body = std::move(m);
        return doc;
    }

    std::vector<std::string> alphabet, states, initial, accepting;
    std::vector<detail::Line> trans;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.key == "alphabet")
            alphabet = l.fields;
        else if (l.key == "states")
            states = l.fields;
        else if (l.key == "initial")
            initial = l.fields;
        else if (l.key == "accepting" && doc.kind == Kind::NFA)
            accepting = l.fields;
        else if (l.key == "t")
            trans.push_back(l);
        else
            detail::fail(l.number, "unknown key '" + l.key + "'");
    }

    if (doc.kind == Kind::NMDA || doc.kind == Kind::DMDA) {
        RawAutomaton raw{alphabet, states, initial, {}};
        for (const auto& l : trans) {
            if (l.fields.size() != 5)
                detail::fail(l.number, "expected 't: src letter dst weight discount'");
            raw.transitions.push_back({l.fields[0], l.fields[1], l.fields[2], detail::rational_at(l, 3),
                                       detail::rational_at(l, 4)});
        }
        Nmda a = validate(raw);
        if (doc.kind == Kind::DMDA)
            a = as_dmda(a);
        doc.body = std::move(a);
        return doc;
    }

    if (doc.kind == Kind::TRANSDUCER) {
        if (initial.size() != 1)
            throw Error(Errc::Validation, "a transducer has exactly one initial state");
        ChoiceTransducer t;
        t.alphabet = alphabet;
        t.states = states;
        std::size_t cells = states.size() * alphabet.size();
        t.next.assign(cells, -1);
        t.output.assign(cells, 0);
        std::vector<std::string> diag;
        int init = find_index(states, initial[0]);
        if (init < 0)
            diag.push_back("UnknownState(" + initial[0] + ")");
        t.initial = std::max(init, 0);
        for (const auto& l : trans) {
            if (l.fields.size() != 4)
                detail::fail(l.number, "expected 't: src letter dst output'");
            int s = find_index(states, l.fields[0]), d = find_index(states, l.fields[2]);
            int a = find_index(alphabet, l.fields[1]);
            Rational out = detail::rational_at(l, 3);
            if (s < 0 || d < 0 || a < 0) {
                diag.push_back("unknown name at line " + std::to_string(l.number));
                continue;
            }
            if (!is_integer(out))
                diag.push_back("transducer output must be an integer at line " + std::to_string(l.number));
            std::size_t cell = std::size_t(s) * alphabet.size() + a;
            if (t.next[cell] >= 0)
                diag.push_back("transducer is not deterministic at line " + std::to_string(l.number));
            t.next[cell] = d;
            t.output[cell] = int(out.get_num().get_si());
        }
        for (std::size_t c = 0; c < cells; ++c)
            if (t.next[c] < 0)
                diag.push_back("IncompleteTransducer(" + states[c / alphabet.size()] + "," +
                               alphabet[c % alphabet.size()] + ")");
        nmda::detail::throw_if(diag);
        doc.body = validate_transducer(std::move(t));
        return doc;
    }

    Nfa n;
    n.alphabet = alphabet;
    n.states = states;
    n.accepting.assign(states.size(), false);
    std::vector<std::string> diag;
    for (const auto& s : initial) {
        int q = find_index(states, s);
        if (q < 0)
            diag.push_back("UnknownState(" + s + ")");
        else
            n.initial.push_back(q);
    }
    for (const auto& s : accepting) {
        int q = find_index(states, s);
        if (q < 0)
            diag.push_back("UnknownState(" + s + ")");
        else
            n.accepting[q] = true;
    }
    for (const auto& l : trans) {
        if (l.fields.size() != 3)
            detail::fail(l.number, "expected 't: src letter dst'");
        int s = find_index(states, l.fields[0]), d = find_index(states, l.fields[2]);
        int a = find_index(alphabet, l.fields[1]);
        if (s < 0 || d < 0 || a < 0)
            diag.push_back("unknown name at line " + std::to_string(l.number));
        else
            n.transitions.push_back({s, a, d});
    }
    nmda::detail::throw_if(diag);
    doc.body = validate_nfa(std::move(n));
    return doc;
}

inline Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Parse, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

inline Nmda parse_nmda(const std::string& text) {
    Document d = parse(text);
    if (d.kind != Kind::NMDA && d.kind != Kind::DMDA)
        throw Error(Errc::Validation, std::string("expected an automaton, got ") + kind_name(d.kind));
    return std::get<Nmda>(d.body);
}

inline ChoiceTransducer parse_transducer(const std::string& text) {
    Document d = parse(text);
    if (d.kind != Kind::TRANSDUCER)
        throw Error(Errc::Validation, std::string("expected a transducer, got ") + kind_name(d.kind));
    return std::get<ChoiceTransducer>(d.body);
}

inline Nfa parse_nfa(const std::string& text) {
    Document d = parse(text);
    if (d.kind != Kind::NFA)
        throw Error(Errc::Validation, std::string("expected an NFA, got ") + kind_name(d.kind));
    return std::get<Nfa>(d.body);
}

inline CounterMachine parse_machine(const std::string& text) {
    Document d = parse(text);
    if (d.kind != Kind::CM)
        throw Error(Errc::Validation, std::string("expected a counter machine, got ") + kind_name(d.kind));
    return std::get<CounterMachine>(d.body);
}

namespace detail {

inline std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace detail

inline std::string to_text(const Nmda& a) {
    std::ostringstream out;
    out << (a.deterministic() ? "DMDA" : "NMDA") << "\n";
    out << "alphabet: " << detail::join(a.alphabet) << "\n";
    out << "states: " << detail::join(a.states) << "\n";
    std::vector<std::string> init;
    for (int q : a.initial)
        init.push_back(a.states[q]);
    out << "initial: " << detail::join(init) << "\n";
    for (const auto& t : a.transitions)
        out << "t: " << a.states[t.src] << " " << a.alphabet[t.letter] << " " << a.states[t.dst] << " "
            << to_string(t.weight) << " " << to_string(t.discount) << "\n";
    return out.str();
}

inline std::string to_text(const ChoiceTransducer& t) {
    std::ostringstream out;
    out << "TRANSDUCER\n";
    out << "alphabet: " << detail::join(t.alphabet) << "\n";
    out << "states: " << detail::join(t.states) << "\n";
    out << "initial: " << t.states[t.initial] << "\n";
    for (int q = 0; q < t.num_states(); ++q)
        for (int a = 0; a < t.num_letters(); ++a)
            out << "t: " << t.states[q] << " " << t.alphabet[a] << " " << t.states[t.next_of(q, a)] << " "
                << t.output_of(q, a) << "\n";
    return out.str();
}

inline std::string to_text(const Nfa& n) {
    std::ostringstream out;
    out << "NFA\n";
    out << "alphabet: " << detail::join(n.alphabet) << "\n";
    out << "states: " << detail::join(n.states) << "\n";
    std::vector<std::string> init, acc;
    for (int q : n.initial)
        init.push_back(n.states[q]);
    for (std::size_t q = 0; q < n.states.size(); ++q)
        if (n.accepting[q])
            acc.push_back(n.states[q]);
    out << "initial: " << detail::join(init) << "\n";
    out << "accepting: " << detail::join(acc) << "\n";
    for (const auto& t : n.transitions)
        out << "t: " << n.states[t.src] << " " << n.alphabet[t.letter] << " " << n.states[t.dst] << "\n";
    return out.str();
}

inline std::string to_text(const CounterMachine& m) {
    std::ostringstream out;
    out << "CM\n";
    for (int i = 0; i < m.size(); ++i) {
        const auto& c = m.commands[i];
        out << i + 1 << ": ";
        switch (c.kind) {
        case Command::Inc: out << "inc " << counter_name(c.counter); break;
        case Command::Dec: out << "dec " << counter_name(c.counter); break;
        case Command::Goto: out << "goto " << c.target; break;
        case Command::Jz: out << "jz " << counter_name(c.counter) << " " << c.target << " " << c.other; break;
        case Command::Halt: out << "halt"; break;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace nmda::io
