#pragma once

#include <utility>
#include <vector>

#include "core/automaton.hpp"
#include "core/echelon.hpp"

namespace wfa {

enum class Direction { Forward, Backward };

// Basis of the forward or backward space, with one witness word per vector:
// forward pairs satisfy v = initial * M(w), backward pairs v = M(w) * final.
// Pairs are listed in BFS discovery order, starting from the empty word.
struct WordVectorBasis {
    Direction direction;
    std::vector<std::pair<Word, Vec>> pairs;
    EchelonBasis echelon;

    size_t dimension() const { return pairs.size(); }

    std::vector<Word> words() const;
    std::vector<Vec> vectors() const;
};

// Worklist computation of a basis of span{initial * M(w)}. FIFO queue,
// children generated in alphabet order, membership via the echelon basis.
WordVectorBasis forward_basis(const WeightedAutomaton& a);

// Mirror computation of a basis of span{M(w) * final}. The extension step
// multiplies on the left, so the discovered word is prepended: w' = a w.
WordVectorBasis backward_basis(const WeightedAutomaton& a);

} // namespace wfa
