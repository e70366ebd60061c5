#include "core/spaces.hpp"

#include <deque>

namespace wfa {

std::vector<Word> WordVectorBasis::words() const {
    std::vector<Word> out;
    out.reserve(pairs.size());
    for (const auto& [w, v] : pairs)
        out.push_back(w);
    return out;
}

std::vector<Vec> WordVectorBasis::vectors() const {
    std::vector<Vec> out;
    out.reserve(pairs.size());
    for (const auto& [w, v] : pairs)
        out.push_back(v);
    return out;
}

namespace {

WordVectorBasis explore(const WeightedAutomaton& a, Direction dir) {
    const size_t n = a.states();
    WordVectorBasis basis{dir, {}, EchelonBasis(n)};

    Vec seed = dir == Direction::Forward ? a.initial() : a.final_weights();
    if (n == 0 || is_zero_vec(seed))
        return basis;

    basis.echelon.insert(seed);
    basis.pairs.emplace_back(Word{}, seed);
    std::deque<size_t> queue{0};

    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        Word word = basis.pairs[idx].first;
        Vec vec = basis.pairs[idx].second;
        for (size_t k = 0; k < a.alphabet().size(); k++) {
            Vec next = dir == Direction::Forward
                           ? row_times_matrix(vec, a.transition(k))
                           : matrix_times_col(a.transition(k), vec);
            if (!basis.echelon.insert(next))
                continue;
            Word next_word;
            if (dir == Direction::Forward) {
                next_word = word;
                next_word.push_back(a.alphabet()[k]);
            } else {
                next_word.reserve(word.size() + 1);
                next_word.push_back(a.alphabet()[k]);
                next_word.insert(next_word.end(), word.begin(), word.end());
            }
            basis.pairs.emplace_back(std::move(next_word), std::move(next));
            queue.push_back(basis.pairs.size() - 1);
        }
    }
    return basis;
}

} // namespace

WordVectorBasis forward_basis(const WeightedAutomaton& a) {
    return explore(a, Direction::Forward);
}

WordVectorBasis backward_basis(const WeightedAutomaton& a) {
    return explore(a, Direction::Backward);
}

} // namespace wfa
