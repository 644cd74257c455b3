#pragma once

// Named example automata, in the text format of io.hpp.

#include "io.hpp"

#include <map>

namespace nmda::fixtures {

inline const std::map<std::string, std::string>& sources() {
    static const std::map<std::string, std::string> s = {
        {"fig2", R"(NMDA
alphabet: a b
states: q0 q1 q2
initial: q0
t: q0 a q0 1 3
t: q1 a q1 1/2 2
t: q2 a q2 1/4 2
t: q2 b q2 1/4 2
t: q1 a q0 1 3
t: q0 a q1 1/2 2
t: q1 b q2 2 5
t: q0 b q2 3/2 4
)"},
        {"fig3", R"(NMDA
alphabet: a b c
states: q0 q1 q2
initial: q0 q1
t: q0 a q0 1/2 2
t: q0 b q2 1/2 2
t: q0 c q2 2 2
t: q1 a q1 2/3 3
t: q1 b q2 2 3
t: q1 c q2 4/3 3
t: q2 a q2 0 2
t: q2 b q2 0 2
t: q2 c q2 0 2
)"},
        {"fig4_a", R"(DMDA
alphabet: a b
states: p0 p1 p2
initial: p0
t: p0 a p1 1/2 2
t: p1 a p0 -1 2
t: p0 b p2 0 2
t: p1 b p2 0 2
t: p2 a p2 0 2
t: p2 b p2 0 2
)"},
        // q0 has no b-transition as drawn; it is completed into the sink q3.
        {"fig4_b", R"(DMDA
alphabet: a b
states: q0 q1 q2 q3
initial: q0
t: q0 a q1 0 3
t: q1 a q2 1/3 3
t: q2 a q1 -1 3
t: q0 b q3 0 3
t: q1 b q3 0 3
t: q2 b q3 0 3
t: q3 a q3 0 3
t: q3 b q3 0 3
)"},
        {"fig5_a", R"(DMDA
alphabet: a
states: p0
initial: p0
t: p0 a p0 1 2
)"},
        {"fig5_b", R"(DMDA
alphabet: a
states: q0 q1
initial: q0
t: q0 a q1 2 2
t: q1 a q1 0 2
)"},
        {"fig7_nda", R"(NMDA
alphabet: a
states: q1 q2
initial: q1
t: q1 a q2 5 2
t: q1 a q1 4 2
t: q2 a q2 1 2
)"},
        {"fig7_dmda", R"(DMDA
alphabet: a
states: (0,inf) (0,2) (2,0) (inf,0)
initial: (0,inf)
t: (0,inf) a (0,2) 4 2
t: (0,2) a (2,0) 3 2
t: (2,0) a (inf,0) 1 2
t: (inf,0) a (inf,0) 1 2
)"},
        {"fig8", R"(NMDA
alphabet: a b
states: q0 q1 q2
initial: q0
t: q0 a q2 1 3
t: q2 a q0 1/3 3
t: q2 b q1 3/4 2
t: q1 a q1 1 3
t: q1 b q1 1 2
t: q0 b q0 1 2
t: q0 a q1 4/5 3
t: q1 a q0 2/3 3
t: q2 a q2 1/2 3
)"},
        {"fig9", R"(NMDA
alphabet: a b
states: q0 q1 q2 q3 q4
initial: q0
t: q0 a q2 1 2
t: q2 a q0 1/3 3
t: q1 a q3 1/2 3
t: q3 a q1 2/3 2
t: q0 b q1 2/3 2
t: q1 b q0 1/4 3
t: q2 b q3 3/2 3
t: q3 b q2 3/4 2
t: q1 b q4 1 3
t: q4 a q1 1 2
t: q4 b q2 3/4 2
t: q2 a q4 1 3
)"},
        {"fig10_nda", R"(NMDA
alphabet: a b
states: q1 q2
initial: q1
t: q1 a q2 0 3
t: q1 b q2 0 2
t: q2 a q1 1 3
t: q2 b q1 1 2
t: q1 a q1 -1/3 3
t: q1 b q1 -1 2
t: q2 a q2 -2 3
)"},
        {"fig10_dmda", R"(DMDA
alphabet: a b
states: (0,inf) (0,1) (0,2) (2,0) (inf,0)
initial: (0,inf)
t: (0,inf) a (0,1) -1/3 3
t: (0,inf) b (0,2) -1 2
t: (0,1) a (2,0) -1 3
t: (0,1) b (0,2) -1 2
t: (0,2) a (0,1) -1/3 3
t: (0,2) b (0,2) -1 2
t: (2,0) a (inf,0) -2 3
t: (2,0) b (0,2) 1 2
t: (inf,0) a (inf,0) -2 3
t: (inf,0) b (0,inf) 1 2
)"},
        {"fig11", R"(NMDA
alphabet: a b
states: q0 q1 q2
initial: q0
t: q0 a q1 1/2 2
t: q1 a q1 -1/2 2
t: q1 b q1 0 3
t: q0 b q2 1/3 3
t: q2 a q2 0 2
t: q2 b q2 -2/3 3
)"},
        {"fig12", R"(NMDA
alphabet: a b
states: q0 q1 q2
initial: q0
t: q0 a q1 1/6 2
t: q0 b q1 0 2
t: q1 a q2 0 3
t: q1 b q2 0 3
t: q2 a q1 -5/6 2
t: q2 b q1 0 2
)"},
        {"fig13_transducer", R"(TRANSDUCER
alphabet: a b
states: s0 s1
initial: s0
t: s0 a s1 2
t: s0 b s1 2
t: s1 a s0 3
t: s1 b s0 3
)"},
        {"fig14_transducer", R"(TRANSDUCER
alphabet: a b
states: q0 q1
initial: q0
t: q0 a q0 2
t: q0 b q1 4
t: q1 a q1 3
t: q1 b q0 2
)"},
        {"fig14_nmda", R"(NMDA
alphabet: a b
states: p0 p1 p2 p3
initial: p0
t: p0 a p2 1 2
t: p2 a p0 1/2 2
t: p0 b p3 2 4
t: p1 a p1 1 2
t: p1 b p3 1/2 4
t: p3 b p1 2/3 2
t: p2 b p3 1 4
t: p0 a p1 3/2 2
t: p3 b p2 3/4 2
t: p3 a p3 1 3
)"},
        {"fig6_cm", R"(CM
1: inc x
2: inc x
3: jz x 3 4
4: dec x
5: jz x 6 3
6: halt
)"},
    };
    return s;
}

inline std::vector<std::string> names() {
    std::vector<std::string> v;
    for (const auto& kv : sources())
        v.push_back(kv.first);
    return v;
}

inline const std::string& source(const std::string& name) {
    auto it = sources().find(name);
    if (it == sources().end())
        throw Error(Errc::Validation, "unknown fixture '" + name + "'");
    return it->second;
}

inline io::Document load(const std::string& name) { return io::parse(source(name)); }
inline Nmda automaton(const std::string& name) { return io::parse_nmda(source(name)); }
inline Dmda dmda(const std::string& name) { return as_dmda(automaton(name)); }
inline ChoiceTransducer transducer(const std::string& name) { return io::parse_transducer(source(name)); }
inline CounterMachine machine(const std::string& name) { return io::parse_machine(source(name)); }

}  // namespace nmda::fixtures
