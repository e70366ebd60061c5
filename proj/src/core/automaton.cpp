#include "core/automaton.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace wfa {

bool is_valid_symbol(const Symbol& s) {
    if (s.empty())
        return false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)))
            return false;
        if (c == ',' || c == '"' || c == '\'')
            return false;
    }
    return true;
}

WeightedAutomaton::WeightedAutomaton(size_t states,
                                     std::vector<Symbol> alphabet,
                                     std::vector<Matrix> transitions,
                                     Vec initial,
                                     Vec final_weights)
    : states_(states) {
    if (alphabet.size() != transitions.size())
        throw Error(ErrorCode::Dimension, "one transition matrix per alphabet symbol required");
    for (const auto& s : alphabet)
        if (!is_valid_symbol(s))
            throw Error(ErrorCode::Parse, "invalid alphabet symbol '" + s + "'");

    std::vector<size_t> order(alphabet.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return alphabet[i] < alphabet[j]; });
    for (size_t k = 0; k + 1 < order.size(); k++)
        if (alphabet[order[k]] == alphabet[order[k + 1]])
            throw Error(ErrorCode::Parse, "duplicate alphabet symbol '" + alphabet[order[k]] + "'");

    alphabet_.reserve(alphabet.size());
    transitions_.reserve(transitions.size());
    for (size_t k : order) {
        if (transitions[k].rows() != states || transitions[k].cols() != states)
            throw Error(ErrorCode::Dimension,
                        "transition matrix for '" + alphabet[k] + "' is not states x states");
        alphabet_.push_back(std::move(alphabet[k]));
        transitions_.push_back(std::move(transitions[k]));
    }
    if (initial.size() != states)
        throw Error(ErrorCode::Dimension, "initial vector length does not match state count");
    if (final_weights.size() != states)
        throw Error(ErrorCode::Dimension, "final vector length does not match state count");
    initial_ = std::move(initial);
    final_ = std::move(final_weights);
}

WeightedAutomaton WeightedAutomaton::zero(std::vector<Symbol> alphabet) {
    std::vector<Matrix> transitions(alphabet.size(), Matrix(0, 0));
    return WeightedAutomaton(0, std::move(alphabet), std::move(transitions), {}, {});
}

size_t WeightedAutomaton::symbol_index(const Symbol& s) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end() || *it != s)
        throw Error(ErrorCode::UnknownSymbol, "symbol '" + s + "' is not in the alphabet");
    return static_cast<size_t>(it - alphabet_.begin());
}

bool WeightedAutomaton::has_symbol(const Symbol& s) const {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), s);
}

const Matrix& WeightedAutomaton::transition(const Symbol& s) const {
    return transitions_[symbol_index(s)];
}

Rational evaluate(const WeightedAutomaton& a, const Word& w) {
    // Left fold of vector-matrix products; M(w) is never materialized.
    Vec v = a.initial();
    for (const Symbol& s : w)
        v = row_times_matrix(v, a.transition(s));
    return dot(v, a.final_weights());
}

namespace {

void require_same_alphabet(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    if (a1.alphabet() != a2.alphabet())
        throw Error(ErrorCode::AlphabetMismatch, "operands have different alphabets");
}

WeightedAutomaton block_diagonal(const WeightedAutomaton& a1, const WeightedAutomaton& a2,
                                 bool negate_second_initial) {
    require_same_alphabet(a1, a2);
    size_t n1 = a1.states(), n2 = a2.states();
    std::vector<Matrix> transitions;
    transitions.reserve(a1.alphabet().size());
    for (size_t k = 0; k < a1.alphabet().size(); k++) {
        Matrix m(n1 + n2, n1 + n2);
        const Matrix& m1 = a1.transition(k);
        const Matrix& m2 = a2.transition(k);
        for (size_t i = 0; i < n1; i++)
            for (size_t j = 0; j < n1; j++)
                m.at(i, j) = m1.at(i, j);
        for (size_t i = 0; i < n2; i++)
            for (size_t j = 0; j < n2; j++)
                m.at(n1 + i, n1 + j) = m2.at(i, j);
        transitions.push_back(std::move(m));
    }
    Vec initial(n1 + n2), final_weights(n1 + n2);
    for (size_t i = 0; i < n1; i++) {
        initial[i] = a1.initial()[i];
        final_weights[i] = a1.final_weights()[i];
    }
    for (size_t i = 0; i < n2; i++) {
        initial[n1 + i] = negate_second_initial ? -a2.initial()[i] : a2.initial()[i];
        final_weights[n1 + i] = a2.final_weights()[i];
    }
    return WeightedAutomaton(n1 + n2, a1.alphabet(), std::move(transitions),
                             std::move(initial), std::move(final_weights));
}

} // namespace

WeightedAutomaton sum(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    return block_diagonal(a1, a2, false);
}

WeightedAutomaton difference(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    return block_diagonal(a1, a2, true);
}

WeightedAutomaton hadamard(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    require_same_alphabet(a1, a2);
    std::vector<Matrix> transitions;
    transitions.reserve(a1.alphabet().size());
    for (size_t k = 0; k < a1.alphabet().size(); k++)
        transitions.push_back(kronecker(a1.transition(k), a2.transition(k)));
    return WeightedAutomaton(a1.states() * a2.states(), a1.alphabet(), std::move(transitions),
                             kronecker_vec(a1.initial(), a2.initial()),
                             kronecker_vec(a1.final_weights(), a2.final_weights()));
}

} // namespace wfa
