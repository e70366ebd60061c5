#pragma once

#include <cstddef>
#include <vector>

#include "core/automaton.hpp"
#include "core/matrix.hpp"

namespace wfa {

// Entry bit-growth makes the Kronecker accumulation expensive; refuse
// automata beyond this many states unless the caller raises the limit.
inline constexpr size_t kDefaultGramStateBudget = 64;

// E = F^T F where F stacks initial*M(w) over all words of length <= n-1.
// The row space of E equals the forward space.
struct GramMatrix {
    Matrix e;
};

// Computes E via the power sum of S = sum_a M(a) (x) M(a): the accumulator
// (initial (x) initial) S^k is kept as an n^2 vector, summed for
// k = 0..n-1, and reshaped. No matrix power of S is formed.
GramMatrix gram_matrix(const WeightedAutomaton& a,
                       size_t state_budget = kDefaultGramStateBudget);

// Rows of E whose prefix rank strictly increases; a basis of the forward
// space.
std::vector<Vec> gram_forward_basis(const WeightedAutomaton& a,
                                    size_t state_budget = kDefaultGramStateBudget);

// Flag-only variants of the zeroness/equivalence decisions; no witness.
bool gram_is_zero(const WeightedAutomaton& a,
                  size_t state_budget = kDefaultGramStateBudget);
bool gram_equivalent(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                     size_t state_budget = kDefaultGramStateBudget);

} // namespace wfa
