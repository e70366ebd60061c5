#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace wfa {

// Alphabet symbols are arbitrary tokens without whitespace, commas or quotes.
using Symbol = std::string;
using Word = std::vector<Symbol>;

bool is_valid_symbol(const Symbol& s);

// Automaton (n, alphabet, M, initial, final) assigning each word w the value
// initial * M(w) * final. With n = 0 the automaton denotes the zero series.
class WeightedAutomaton {
public:
    // The alphabet is sorted on construction; transition matrices are taken
    // in the order of the given alphabet and reordered along with it.
    WeightedAutomaton(size_t states,
                      std::vector<Symbol> alphabet,
                      std::vector<Matrix> transitions,
                      Vec initial,
                      Vec final_weights);

    static WeightedAutomaton zero(std::vector<Symbol> alphabet);

    size_t states() const { return states_; }
    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    const Matrix& transition(size_t symbol_index) const { return transitions_[symbol_index]; }
    const Matrix& transition(const Symbol& s) const;
    const Vec& initial() const { return initial_; }
    const Vec& final_weights() const { return final_; }

    // Index of s in the sorted alphabet; errors if s is not a letter.
    size_t symbol_index(const Symbol& s) const;
    bool has_symbol(const Symbol& s) const;

    friend bool operator==(const WeightedAutomaton& a, const WeightedAutomaton& b) = default;

private:
    size_t states_;
    std::vector<Symbol> alphabet_;
    std::vector<Matrix> transitions_;
    Vec initial_;
    Vec final_;
};

Rational evaluate(const WeightedAutomaton& a, const Word& w);

WeightedAutomaton sum(const WeightedAutomaton& a1, const WeightedAutomaton& a2);
WeightedAutomaton difference(const WeightedAutomaton& a1, const WeightedAutomaton& a2);
WeightedAutomaton hadamard(const WeightedAutomaton& a1, const WeightedAutomaton& a2);

} // namespace wfa
