#pragma once

#include <cstdint>
#include <utility>

#include "core/automaton.hpp"

namespace wfa {

// Seeded generation parameters for property tests. Generation is a pure
// function of the fields; the same generator yields the same automaton.
struct AutomatonGenerator {
    size_t max_states = 4;
    size_t alphabet_size = 2;
    long numerator_min = -3;
    long numerator_max = 3;
    long denominator_max = 2;
    std::uint64_t seed = 0;
};

WeightedAutomaton random_automaton(const AutomatonGenerator& gen);

// The automaton conjugated by an invertible matrix p:
// M'(a) = p M(a) p^-1, initial' = initial p^-1, final' = p final.
// Same semantics by construction.
WeightedAutomaton apply_base_change(const WeightedAutomaton& a, const Matrix& p);

// A random automaton and a random invertible base change of it; the pair is
// equivalent by construction.
std::pair<WeightedAutomaton, WeightedAutomaton>
plant_equivalent_pair(const AutomatonGenerator& gen);

// Draws matrices from the generator's entry pool until one is invertible.
Matrix random_invertible_matrix(const AutomatonGenerator& gen, size_t n);

} // namespace wfa
