#pragma once

#include <cstdint>
#include <vector>

#include "core/automaton.hpp"
#include "core/decision.hpp"
#include "core/matrix.hpp"

namespace wfa {

// Finite sub-block of the infinite Hankel matrix: values[x][y] = s(x y).
struct HankelBlock {
    std::vector<Word> row_words;
    std::vector<Word> col_words;
    Matrix values;
};

// Words whose Hankel columns form a basis of the column space of H.
struct CompleteSet {
    std::vector<Word> words;
};

// Minimal automaton read off the Hankel matrix restricted to a complete set:
// initial = H[eps, C], final resolves H[., eps] against H[., C].
struct HankelAutomaton {
    WeightedAutomaton automaton;
    CompleteSet complete_set;
};

HankelBlock hankel_block(const WeightedAutomaton& a,
                         const std::vector<Word>& row_words,
                         const std::vector<Word>& col_words,
                         std::uint64_t budget = kDefaultOracleBudget);

// Conjugate pipeline: forward conjugate (forward-minimal), then the backward
// conjugate of that with the backward-basis words as the complete set C.
// The infinite Hankel matrix is never materialized.
HankelAutomaton hankel_automaton(const WeightedAutomaton& a);

// Rank of the Hankel matrix of the series = state count of the minimized
// automaton.
size_t series_rank(const WeightedAutomaton& a);

// All words of length <= max_len in length-lexicographic order.
std::vector<Word> words_up_to(const std::vector<Symbol>& alphabet, size_t max_len);

} // namespace wfa
