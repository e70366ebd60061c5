#include "core/gram.hpp"

#include "core/echelon.hpp"
#include "core/error.hpp"

namespace wfa {

GramMatrix gram_matrix(const WeightedAutomaton& a, size_t state_budget) {
    const size_t n = a.states();
    if (n > state_budget)
        throw Error(ErrorCode::BudgetExceeded, "state count exceeds Gram budget");
    if (n == 0)
        return {Matrix(0, 0)};

    Matrix s(n * n, n * n);
    for (size_t k = 0; k < a.alphabet().size(); k++)
        s = s + kronecker(a.transition(k), a.transition(k));

    Vec accumulator = kronecker_vec(a.initial(), a.initial());
    Vec total = accumulator;
    for (size_t k = 1; k < n; k++) {
        accumulator = row_times_matrix(accumulator, s);
        for (size_t i = 0; i < total.size(); i++)
            total[i] += accumulator[i];
    }

    Matrix e(n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            e.at(i, j) = total[i * n + j];
    return {std::move(e)};
}

std::vector<Vec> gram_forward_basis(const WeightedAutomaton& a, size_t state_budget) {
    GramMatrix gram = gram_matrix(a, state_budget);
    const size_t n = a.states();
    EchelonBasis seen(n);
    std::vector<Vec> selected;
    for (size_t i = 0; i < n; i++) {
        Vec row = gram.e.row_vec(i);
        if (seen.insert(row))
            selected.push_back(std::move(row));
    }
    return selected;
}

bool gram_is_zero(const WeightedAutomaton& a, size_t state_budget) {
    for (const Vec& v : gram_forward_basis(a, state_budget))
        if (!dot(v, a.final_weights()).is_zero())
            return false;
    return true;
}

bool gram_equivalent(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                     size_t state_budget) {
    return gram_is_zero(difference(a1, a2), state_budget);
}

} // namespace wfa
