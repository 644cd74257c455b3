#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nmda {

using Rational = mpq_class;
using Integer = mpz_class;

// nullopt stands for +infinity.
using Extended = std::optional<Rational>;

using Word = std::vector<int>;

enum class Errc {
    Parse,
    Validation,
    NotTidy,
    NotIntegral,
    NotDeterministic,
    IncompatibleChoiceFunctions,
    AlphabetMismatch,
    InvalidWalk,
    NegativeScalar,
    NoDiscountDefined,
    BudgetExceeded,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::Parse: return "ParseError";
    case Errc::Validation: return "ValidationError";
    case Errc::NotTidy: return "NotTidy";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::NotDeterministic: return "NotDeterministic";
    case Errc::IncompatibleChoiceFunctions: return "IncompatibleChoiceFunctions";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::InvalidWalk: return "InvalidWalk";
    case Errc::NegativeScalar: return "NegativeScalar";
    case Errc::NoDiscountDefined: return "NoDiscountDefined";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<Word> witness = std::nullopt)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code), witness_(std::move(witness)) {}

    Errc code() const { return code_; }
    const std::optional<Word>& witness() const { return witness_; }

private:
    Errc code_;
    std::optional<Word> witness_;
};

// ---------------------------------------------------------------- rationals

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Extended& x) {
    return x ? to_string(*x) : std::string("inf");
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto bad = [&] { return Error(Errc::Parse, "not a rational: '" + text + "'"); };
    if (s.empty())
        throw bad();
    auto slash = s.find('/');
    auto digits = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+'))
            ++i;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw bad();
    if (num[0] == '+')
        num = num.substr(1);
    Integer n(num), d(den);
    if (d == 0)
        throw bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Extended ext_add(const Extended& a, const Rational& b) {
    if (!a)
        return std::nullopt;
    return Rational(*a + b);
}

inline bool ext_less(const Extended& a, const Extended& b) {
    if (!a)
        return false;
    if (!b)
        return true;
    return *a < *b;
}

inline Extended ext_min(const Extended& a, const Extended& b) { return ext_less(b, a) ? b : a; }

// ---------------------------------------------------------------- words

struct LassoWord {
    Word prefix;
    Word cycle;

    bool operator==(const LassoWord&) const = default;
};

inline bool single_char_letters(const std::vector<std::string>& alphabet) {
    return std::all_of(alphabet.begin(), alphabet.end(),
                       [](const std::string& l) { return l.size() == 1; });
}

inline std::string format_word(const std::vector<std::string>& alphabet, const Word& w) {
    bool compact = single_char_letters(alphabet);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i)
            out += ' ';
        out += alphabet.at(w[i]);
    }
    return out;
}

inline std::string format_lasso(const std::vector<std::string>& alphabet, const LassoWord& w) {
    return format_word(alphabet, w.prefix) + ":" + format_word(alphabet, w.cycle);
}

inline int find_index(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : int(it - names.begin());
}

// Letters are separated by spaces or commas; without separators each
// character is a letter when the alphabet allows it.
inline Word parse_word(const std::vector<std::string>& alphabet, const std::string& text) {
    std::vector<std::string> tokens;
    if (text.find_first_of(" ,") != std::string::npos) {
        std::string cur;
        for (char ch : text) {
            if (ch == ' ' || ch == ',') {
                if (!cur.empty())
                    tokens.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty())
            tokens.push_back(cur);
    } else if (find_index(alphabet, text) >= 0) {
        tokens.push_back(text);
    } else {
        for (char ch : text)
            tokens.emplace_back(1, ch);
    }
    Word w;
    for (const auto& t : tokens) {
        int i = find_index(alphabet, t);
        if (i < 0)
            throw Error(Errc::Parse, "unknown letter '" + t + "'");
        w.push_back(i);
    }
    return w;
}

inline LassoWord parse_lasso(const std::vector<std::string>& alphabet, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(Errc::Parse, "lasso must be written prefix:cycle");
    LassoWord w{parse_word(alphabet, text.substr(0, colon)), parse_word(alphabet, text.substr(colon + 1))};
    if (w.cycle.empty())
        throw Error(Errc::Parse, "lasso cycle must be nonempty");
    return w;
}

// ---------------------------------------------------------------- automata

struct Transition {
    int src;
    int letter;
    int dst;
    Rational weight;
    Rational discount;
};

struct Run {
    int start = 0;
    std::vector<int> transitions;
};

class Nmda {
public:
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<int> initial;
    std::vector<Transition> transitions;

    int num_states() const { return int(states.size()); }
    int num_letters() const { return int(alphabet.size()); }

    const std::vector<int>& out(int q, int a) const { return out_[std::size_t(q) * alphabet.size() + a]; }

    bool is_initial(int q) const { return std::find(initial.begin(), initial.end(), q) != initial.end(); }

    void build_index() {
        out_.assign(states.size() * alphabet.size(), {});
        for (std::size_t i = 0; i < transitions.size(); ++i) {
            const auto& t = transitions[i];
            out_[std::size_t(t.src) * alphabet.size() + t.letter].push_back(int(i));
        }
    }

    bool deterministic() const {
        if (initial.size() != 1)
            return false;
        for (const auto& v : out_)
            if (v.size() != 1)
                return false;
        return true;
    }

private:
    std::vector<std::vector<int>> out_;
};

class Dmda : public Nmda {
public:
    // Successor transition of the unique run.
    const Transition& step(int q, int a) const { return transitions[out(q, a).front()]; }
};

struct ChoiceTransducer {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    int initial = 0;
    std::vector<int> next;    // indexed q * |alphabet| + letter
    std::vector<int> output;  // same indexing

    int num_states() const { return int(states.size()); }
    int num_letters() const { return int(alphabet.size()); }
    int next_of(int q, int a) const { return next[std::size_t(q) * alphabet.size() + a]; }
    int output_of(int q, int a) const { return output[std::size_t(q) * alphabet.size() + a]; }
};

struct NfaTransition {
    int src;
    int letter;
    int dst;
};

struct Nfa {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<int> initial;
    std::vector<NfaTransition> transitions;
    std::vector<bool> accepting;

    bool accepts(const Word& w) const {
        std::vector<bool> cur(states.size(), false);
        for (int q : initial)
            cur[q] = true;
        for (int a : w) {
            std::vector<bool> nxt(states.size(), false);
            for (const auto& t : transitions)
                if (t.letter == a && cur[t.src])
                    nxt[t.dst] = true;
            cur = nxt;
        }
        for (std::size_t q = 0; q < states.size(); ++q)
            if (cur[q] && accepting[q])
                return true;
        return false;
    }
};

// Name-based description, as read from text before validation.
struct RawTransition {
    std::string src;
    std::string letter;
    std::string dst;
    Rational weight;
    Rational discount;
};

struct RawAutomaton {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<std::string> initial;
    std::vector<RawTransition> transitions;
};

namespace detail {

inline void check_names(const std::vector<std::string>& names, const char* what,
                        std::vector<std::string>& diag) {
    if (names.empty())
        diag.push_back(std::string("EmptySet: no ") + what);
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            diag.push_back(std::string("Duplicate: ") + what + " '" + sorted[i] + "'");
}

inline void throw_if(const std::vector<std::string>& diag) {
    if (diag.empty())
        return;
    std::string msg;
    for (const auto& d : diag)
        msg += (msg.empty() ? "" : "; ") + d;
    throw Error(Errc::Validation, msg);
}

inline void check_structure(const Nmda& a, std::vector<std::string>& diag) {
    if (a.initial.empty())
        diag.push_back("EmptyInitialSet");
    for (std::size_t i = 0; i < a.transitions.size(); ++i)
        if (a.transitions[i].discount <= 1)
            diag.push_back("DiscountNotGreaterThanOne(t" + std::to_string(i) + ": " +
                           a.states[a.transitions[i].src] + " " + a.alphabet[a.transitions[i].letter] + " " +
                           a.states[a.transitions[i].dst] + ", discount " + to_string(a.transitions[i].discount) + ")");
    for (int q = 0; q < a.num_states(); ++q)
        for (int s = 0; s < a.num_letters(); ++s)
            if (a.out(q, s).empty())
                diag.push_back("IncompleteAutomaton(" + a.states[q] + "," + a.alphabet[s] + ")");
}

}  // namespace detail

// Checks every invariant of an index-based automaton and builds its index.
inline Nmda finalize(Nmda a) {
    std::vector<std::string> diag;
    detail::check_names(a.alphabet, "letter", diag);
    detail::check_names(a.states, "state", diag);
    for (const auto& t : a.transitions)
        if (t.src < 0 || t.src >= a.num_states() || t.dst < 0 || t.dst >= a.num_states() || t.letter < 0 ||
            t.letter >= a.num_letters())
            diag.push_back("transition index out of range");
    detail::throw_if(diag);
    for (auto& t : a.transitions) {
        t.weight.canonicalize();
        t.discount.canonicalize();
    }
    std::sort(a.initial.begin(), a.initial.end());
    a.initial.erase(std::unique(a.initial.begin(), a.initial.end()), a.initial.end());
    a.build_index();
    detail::check_structure(a, diag);
    detail::throw_if(diag);
    return a;
}

inline Nmda validate(const RawAutomaton& raw) {
    std::vector<std::string> diag;
    detail::check_names(raw.alphabet, "letter", diag);
    detail::check_names(raw.states, "state", diag);
    Nmda a;
    a.alphabet = raw.alphabet;
    a.states = raw.states;
    for (const auto& name : raw.initial) {
        int q = find_index(raw.states, name);
        if (q < 0)
            diag.push_back("UnknownState(" + name + ")");
        else
            a.initial.push_back(q);
    }
    for (const auto& t : raw.transitions) {
        int s = find_index(raw.states, t.src), d = find_index(raw.states, t.dst);
        int l = find_index(raw.alphabet, t.letter);
        if (s < 0)
            diag.push_back("UnknownState(" + t.src + ")");
        if (d < 0)
            diag.push_back("UnknownState(" + t.dst + ")");
        if (l < 0)
            diag.push_back("UnknownLetter(" + t.letter + ")");
        if (s >= 0 && d >= 0 && l >= 0) {
            a.transitions.push_back({s, l, d, t.weight, t.discount});
            a.transitions.back().weight.canonicalize();
            a.transitions.back().discount.canonicalize();
        }
    }
    detail::throw_if(diag);
    std::sort(a.initial.begin(), a.initial.end());
    a.initial.erase(std::unique(a.initial.begin(), a.initial.end()), a.initial.end());
    a.build_index();
    detail::check_structure(a, diag);
    detail::throw_if(diag);
    return a;
}

inline Dmda as_dmda(const Nmda& a) {
    if (!a.deterministic())
        throw Error(Errc::NotDeterministic, "automaton has more than one initial state or transition per (state, letter)");
    Dmda d;
    static_cast<Nmda&>(d) = a;
    return d;
}

inline ChoiceTransducer validate_transducer(ChoiceTransducer t) {
    std::vector<std::string> diag;
    detail::check_names(t.alphabet, "letter", diag);
    detail::check_names(t.states, "state", diag);
    std::size_t cells = t.states.size() * t.alphabet.size();
    if (t.next.size() != cells || t.output.size() != cells)
        diag.push_back("transducer map is not total");
    if (t.initial < 0 || t.initial >= t.num_states())
        diag.push_back("transducer initial state out of range");
    for (std::size_t i = 0; i < std::min(cells, t.next.size()); ++i) {
        if (t.next[i] < 0 || t.next[i] >= t.num_states())
            diag.push_back("transducer map is not total");
        if (i < t.output.size() && t.output[i] < 2)
            diag.push_back("transducer output below 2");
    }
    detail::throw_if(diag);
    return t;
}

inline Nfa validate_nfa(Nfa n) {
    std::vector<std::string> diag;
    detail::check_names(n.alphabet, "letter", diag);
    detail::check_names(n.states, "state", diag);
    if (n.accepting.size() != n.states.size())
        n.accepting.resize(n.states.size(), false);
    for (const auto& t : n.transitions)
        if (t.src < 0 || t.src >= int(n.states.size()) || t.dst < 0 || t.dst >= int(n.states.size()) ||
            t.letter < 0 || t.letter >= int(n.alphabet.size()))
            diag.push_back("NFA transition index out of range");
    detail::throw_if(diag);
    return n;
}

inline void require_same_alphabet(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b)
        throw Error(Errc::AlphabetMismatch, "alphabets differ");
}

inline bool is_integral(const Nmda& a) {
    return std::all_of(a.transitions.begin(), a.transitions.end(),
                       [](const Transition& t) { return is_integer(t.discount); });
}

inline Integer weight_denominator(const Nmda& a) {
    Integer d = 1;
    for (const auto& t : a.transitions)
        d = lcm(d, Integer(t.weight.get_den()));
    return d;
}

inline Rational max_weight_difference(const Nmda& a) {
    if (a.transitions.empty())
        return 0;
    Rational lo = a.transitions[0].weight, hi = lo;
    for (const auto& t : a.transitions) {
        if (t.weight < lo)
            lo = t.weight;
        if (t.weight > hi)
            hi = t.weight;
    }
    return hi - lo;
}

inline void require_integral(const Nmda& a) {
    if (!is_integral(a))
        throw Error(Errc::NotIntegral, "a discount factor is not an integer");
}

// States reachable from the initial set.
inline std::vector<bool> reachable_states(const Nmda& a) {
    std::vector<bool> seen(a.states.size(), false);
    std::vector<int> stack(a.initial.begin(), a.initial.end());
    for (int q : stack)
        seen[q] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int s = 0; s < a.num_letters(); ++s)
            for (int ti : a.out(q, s)) {
                int d = a.transitions[ti].dst;
                if (!seen[d]) {
                    seen[d] = true;
                    stack.push_back(d);
                }
            }
    }
    return seen;
}

}  // namespace nmda
