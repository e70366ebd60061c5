#include "core/decision.hpp"

#include "core/error.hpp"
#include "core/spaces.hpp"

namespace wfa {

ZeroVerdict is_zero(const WeightedAutomaton& a) {
    WordVectorBasis basis = forward_basis(a);
    for (const auto& [word, vec] : basis.pairs)
        if (!dot(vec, a.final_weights()).is_zero())
            return {false, word};
    return {true, std::nullopt};
}

EquivVerdict equivalent(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    ZeroVerdict z = is_zero(difference(a1, a2));
    return {z.is_zero, z.witness};
}

std::vector<std::pair<Word, Rational>>
brute_force_values(const WeightedAutomaton& a, size_t max_len, std::uint64_t budget) {
    const std::uint64_t k = a.alphabet().size();
    std::uint64_t total = 0;
    std::uint64_t level = 1;
    for (size_t len = 0; len <= max_len; len++) {
        if (level > budget || total > budget - level)
            throw Error(ErrorCode::BudgetExceeded, "word enumeration exceeds oracle budget");
        total += level;
        if (k == 0)
            break;
        level = (k != 0 && level > UINT64_MAX / k) ? UINT64_MAX : level * k;
    }

    std::vector<std::pair<Word, Rational>> values;
    values.reserve(total);
    values.emplace_back(Word{}, evaluate(a, {}));
    for (size_t len = 1; len <= max_len && k > 0; len++) {
        std::vector<size_t> odometer(len, 0);
        while (true) {
            Word w;
            w.reserve(len);
            for (size_t i = 0; i < len; i++)
                w.push_back(a.alphabet()[odometer[i]]);
            values.emplace_back(std::move(w), Rational());
            values.back().second = evaluate(a, values.back().first);
            size_t pos = len;
            while (pos > 0) {
                if (++odometer[pos - 1] < k)
                    break;
                odometer[pos - 1] = 0;
                pos--;
            }
            if (pos == 0)
                break;
        }
    }
    return values;
}

} // namespace wfa
