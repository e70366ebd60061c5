#include "core/hankel.hpp"

#include "core/conjugate.hpp"
#include "core/error.hpp"

namespace wfa {

HankelBlock hankel_block(const WeightedAutomaton& a,
                         const std::vector<Word>& row_words,
                         const std::vector<Word>& col_words,
                         std::uint64_t budget) {
    const std::uint64_t cells =
        static_cast<std::uint64_t>(row_words.size()) * col_words.size();
    if (cells > budget)
        throw Error(ErrorCode::BudgetExceeded, "Hankel block exceeds oracle budget");

    Matrix values(row_words.size(), col_words.size());
    for (size_t i = 0; i < row_words.size(); i++) {
        // One pass per row: s(x y) = (initial M(x)) M(y) final.
        Vec prefix = a.initial();
        for (const Symbol& s : row_words[i])
            prefix = row_times_matrix(prefix, a.transition(s));
        for (size_t j = 0; j < col_words.size(); j++) {
            Vec v = prefix;
            for (const Symbol& s : col_words[j])
                v = row_times_matrix(v, a.transition(s));
            values.at(i, j) = dot(v, a.final_weights());
        }
    }
    return {row_words, col_words, std::move(values)};
}

HankelAutomaton hankel_automaton(const WeightedAutomaton& a) {
    Conjugate forward = forward_conjugate(a);
    WordVectorBasis backward = backward_basis(forward.automaton);
    Conjugate result = backward_conjugate_from(forward.automaton, backward);
    return {std::move(result.automaton), CompleteSet{backward.words()}};
}

size_t series_rank(const WeightedAutomaton& a) {
    return minimize(a).states();
}

std::vector<Word> words_up_to(const std::vector<Symbol>& alphabet, size_t max_len) {
    std::vector<Word> out{Word{}};
    size_t level_begin = 0;
    for (size_t len = 1; len <= max_len && !alphabet.empty(); len++) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; i++)
            for (const Symbol& s : alphabet) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

} // namespace wfa
