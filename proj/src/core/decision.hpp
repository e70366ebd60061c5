#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/automaton.hpp"

namespace wfa {

// Number of word evaluations an exhaustive-enumeration helper may perform.
inline constexpr std::uint64_t kDefaultOracleBudget = 1u << 20;

struct ZeroVerdict {
    bool is_zero;
    // Present iff not zero; a word of length <= n-1 with nonzero value.
    std::optional<Word> witness;
};

struct EquivVerdict {
    bool equivalent;
    // Present iff inequivalent; length <= n1 + n2 - 1.
    std::optional<Word> counterexample;
};

// Zero iff every forward-basis vector is orthogonal to the final vector.
// The witness is the first basis word in discovery order that is not.
ZeroVerdict is_zero(const WeightedAutomaton& a);

// Reduction to zeroness of the difference automaton.
EquivVerdict equivalent(const WeightedAutomaton& a1, const WeightedAutomaton& a2);

// Evaluates every word of length <= max_len, in length-lexicographic order.
// Errors when the number of words exceeds the budget.
std::vector<std::pair<Word, Rational>>
brute_force_values(const WeightedAutomaton& a, size_t max_len,
                   std::uint64_t budget = kDefaultOracleBudget);

} // namespace wfa
