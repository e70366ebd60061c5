#include "core/generator.hpp"

#include <random>
#include <string>

#include "core/error.hpp"

namespace wfa {

namespace {

// Bounded draws via modulo keep the sequence independent of the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    long in_range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

Rational draw_entry(Rng& rng, const AutomatonGenerator& gen) {
    long num = rng.in_range(gen.numerator_min, gen.numerator_max);
    long den = rng.in_range(1, gen.denominator_max);
    return Rational(num, den);
}

std::vector<Symbol> default_alphabet(size_t size) {
    std::vector<Symbol> alphabet;
    alphabet.reserve(size);
    for (size_t i = 0; i < size; i++) {
        if (i < 26)
            alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            alphabet.push_back("s" + std::to_string(i));
    }
    return alphabet;
}

Matrix draw_matrix(Rng& rng, const AutomatonGenerator& gen, size_t rows, size_t cols) {
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++)
            m.at(i, j) = draw_entry(rng, gen);
    return m;
}

WeightedAutomaton draw_automaton(Rng& rng, const AutomatonGenerator& gen) {
    size_t n = gen.max_states == 0 ? 0 : static_cast<size_t>(rng.below(gen.max_states + 1));
    std::vector<Symbol> alphabet = default_alphabet(gen.alphabet_size);
    std::vector<Matrix> transitions;
    transitions.reserve(alphabet.size());
    for (size_t k = 0; k < alphabet.size(); k++)
        transitions.push_back(draw_matrix(rng, gen, n, n));
    Vec initial(n), final_weights(n);
    for (size_t i = 0; i < n; i++)
        initial[i] = draw_entry(rng, gen);
    for (size_t i = 0; i < n; i++)
        final_weights[i] = draw_entry(rng, gen);
    return WeightedAutomaton(n, std::move(alphabet), std::move(transitions),
                             std::move(initial), std::move(final_weights));
}

Matrix draw_invertible(Rng& rng, const AutomatonGenerator& gen, size_t n) {
    for (int attempt = 0; attempt < 1000; attempt++) {
        Matrix p = draw_matrix(rng, gen, n, n);
        if (rank(p) == n)
            return p;
    }
    throw Error(ErrorCode::Internal, "failed to draw an invertible matrix");
}

} // namespace

WeightedAutomaton random_automaton(const AutomatonGenerator& gen) {
    Rng rng(gen.seed);
    return draw_automaton(rng, gen);
}

WeightedAutomaton apply_base_change(const WeightedAutomaton& a, const Matrix& p) {
    if (p.rows() != a.states() || p.cols() != a.states())
        throw Error(ErrorCode::Dimension, "base change must be states x states");
    Matrix p_inv = invert(p);
    std::vector<Matrix> transitions;
    transitions.reserve(a.alphabet().size());
    for (size_t k = 0; k < a.alphabet().size(); k++)
        transitions.push_back(p * a.transition(k) * p_inv);
    return WeightedAutomaton(a.states(), a.alphabet(), std::move(transitions),
                             row_times_matrix(a.initial(), p_inv),
                             matrix_times_col(p, a.final_weights()));
}

std::pair<WeightedAutomaton, WeightedAutomaton>
plant_equivalent_pair(const AutomatonGenerator& gen) {
    Rng rng(gen.seed);
    WeightedAutomaton a = draw_automaton(rng, gen);
    Matrix p = draw_invertible(rng, gen, a.states());
    WeightedAutomaton b = apply_base_change(a, p);
    return {std::move(a), std::move(b)};
}

Matrix random_invertible_matrix(const AutomatonGenerator& gen, size_t n) {
    Rng rng(gen.seed);
    return draw_invertible(rng, gen, n);
}

} // namespace wfa
