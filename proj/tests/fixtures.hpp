#pragma once

// Small automata used across the suites.

#include "core/automaton.hpp"

namespace wfa::fixtures {

// 1 state over {a}: value 2^k on a^k.
inline WeightedAutomaton doubling() {
    return WeightedAutomaton(1, {"a"}, {Matrix{{Rational(2)}}}, {Rational(1)}, {Rational(1)});
}

// Redundant 2-state presentation of the doubling series.
inline WeightedAutomaton doubling_redundant() {
    Matrix m = {{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};
    return WeightedAutomaton(2, {"a"}, {m}, {Rational(1, 2), Rational(1, 2)},
                             {Rational(1), Rational(1)});
}

// 1 state over {a}: value 3^k on a^k.
inline WeightedAutomaton tripling() {
    return WeightedAutomaton(1, {"a"}, {Matrix{{Rational(3)}}}, {Rational(1)}, {Rational(1)});
}

// 2 states over {a}: value k on a^k.
inline WeightedAutomaton counting() {
    Matrix m = {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    return WeightedAutomaton(2, {"a"}, {m}, {Rational(1), Rational(0)},
                             {Rational(0), Rational(1)});
}

// Constant 1 on every word over {a}.
inline WeightedAutomaton constant_one() {
    return WeightedAutomaton(1, {"a"}, {Matrix{{Rational(1)}}}, {Rational(1)}, {Rational(1)});
}

inline Word word_of(std::initializer_list<const char*> symbols) {
    Word w;
    for (const char* s : symbols)
        w.push_back(s);
    return w;
}

inline Word repeat(const Symbol& s, size_t count) {
    return Word(count, s);
}

} // namespace wfa::fixtures
