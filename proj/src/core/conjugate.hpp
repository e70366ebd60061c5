#pragma once

#include "core/automaton.hpp"
#include "core/matrix.hpp"
#include "core/spaces.hpp"

namespace wfa {

// A conjugate automaton together with its base matrix. Forward base F has
// the forward-basis vectors as rows and satisfies F M(a) = M'(a) F; backward
// base B has the backward-basis vectors as columns and M(a) B = B M'(a).
struct Conjugate {
    WeightedAutomaton automaton;
    Matrix base;
    Direction direction;
};

// Invertible matrix q relating two minimal equivalent automata:
// initial1 = initial2 * q, q * final1 = final2, q * M1(a) = M2(a) * q.
struct ConjugacyWitness {
    Matrix q;
};

Conjugate forward_conjugate(const WeightedAutomaton& a);
Conjugate backward_conjugate(const WeightedAutomaton& a);

// Backward conjugate with a caller-supplied basis of the backward space.
Conjugate backward_conjugate_from(const WeightedAutomaton& a, const WordVectorBasis& basis);

// Backward conjugate of the forward conjugate; minimal and equivalent.
WeightedAutomaton minimize(const WeightedAutomaton& a);

// The mirrored composition order. Same minimal size; used for cross-checks.
WeightedAutomaton minimize_backward_first(const WeightedAutomaton& a);

// Requires both automata minimal (forward and backward dimensions equal to
// the state count) and equivalent; derives q from the rows of the forward
// matrices indexed by a1's forward-basis words.
ConjugacyWitness conjugacy_witness(const WeightedAutomaton& a1, const WeightedAutomaton& a2);

} // namespace wfa
