#include "core/conjugate.hpp"

#include "core/decision.hpp"
#include "core/error.hpp"

namespace wfa {

Conjugate forward_conjugate(const WeightedAutomaton& a) {
    WordVectorBasis basis = forward_basis(a);
    const size_t nf = basis.dimension();
    const size_t n = a.states();
    Matrix f = Matrix::from_rows(basis.vectors(), n);
    if (nf == 0)
        return {WeightedAutomaton::zero(a.alphabet()), f, Direction::Forward};

    // F M(a) = M'(a) F with F of full row rank; transpose to solve for M'(a).
    Matrix ft = f.transpose();
    std::vector<Matrix> transitions;
    transitions.reserve(a.alphabet().size());
    for (size_t k = 0; k < a.alphabet().size(); k++) {
        Matrix g = (f * a.transition(k)).transpose();
        transitions.push_back(solve_right(ft, g).transpose());
    }
    Vec initial = solve_right(ft, Matrix::col(a.initial())).col_vec(0);
    Vec final_weights = matrix_times_col(f, a.final_weights());
    return {WeightedAutomaton(nf, a.alphabet(), std::move(transitions),
                              std::move(initial), std::move(final_weights)),
            f, Direction::Forward};
}

Conjugate backward_conjugate_from(const WeightedAutomaton& a, const WordVectorBasis& basis) {
    const size_t nb = basis.dimension();
    const size_t n = a.states();
    Matrix b = Matrix::from_cols(basis.vectors(), n);
    if (nb == 0)
        return {WeightedAutomaton::zero(a.alphabet()), b, Direction::Backward};

    std::vector<Matrix> transitions;
    transitions.reserve(a.alphabet().size());
    for (size_t k = 0; k < a.alphabet().size(); k++)
        transitions.push_back(solve_right(b, a.transition(k) * b));
    Vec final_weights = solve_right(b, Matrix::col(a.final_weights())).col_vec(0);
    Vec initial = row_times_matrix(a.initial(), b);
    return {WeightedAutomaton(nb, a.alphabet(), std::move(transitions),
                              std::move(initial), std::move(final_weights)),
            b, Direction::Backward};
}

Conjugate backward_conjugate(const WeightedAutomaton& a) {
    return backward_conjugate_from(a, backward_basis(a));
}

WeightedAutomaton minimize(const WeightedAutomaton& a) {
    return backward_conjugate(forward_conjugate(a).automaton).automaton;
}

WeightedAutomaton minimize_backward_first(const WeightedAutomaton& a) {
    return forward_conjugate(backward_conjugate(a).automaton).automaton;
}

namespace {

void require_minimal(const WeightedAutomaton& a, const char* which) {
    if (forward_basis(a).dimension() != a.states() ||
        backward_basis(a).dimension() != a.states())
        throw Error(ErrorCode::Precondition,
                    std::string(which) + " automaton is not minimal");
}

} // namespace

ConjugacyWitness conjugacy_witness(const WeightedAutomaton& a1, const WeightedAutomaton& a2) {
    if (a1.alphabet() != a2.alphabet())
        throw Error(ErrorCode::AlphabetMismatch, "operands have different alphabets");
    require_minimal(a1, "first");
    require_minimal(a2, "second");
    if (a1.states() != a2.states() || !equivalent(a1, a2).equivalent)
        throw Error(ErrorCode::Precondition, "automata are not equivalent");

    // Restrict the infinite forward matrices to the rows indexed by a1's
    // forward-basis words W; both restrictions are invertible by minimality.
    WordVectorBasis basis1 = forward_basis(a1);
    const size_t n = a1.states();
    Matrix f1 = Matrix::from_rows(basis1.vectors(), n);
    std::vector<Vec> rows2;
    rows2.reserve(n);
    for (const Word& w : basis1.words()) {
        Vec v = a2.initial();
        for (const Symbol& s : w)
            v = row_times_matrix(v, a2.transition(s));
        rows2.push_back(std::move(v));
    }
    Matrix f2 = Matrix::from_rows(rows2, n);
    Matrix q;
    try {
        q = invert(f2) * f1;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular)
            throw Error(ErrorCode::Internal, "row restriction of forward matrix is singular");
        throw;
    }

    // The three defining identities must hold exactly.
    bool ok = row_times_matrix(a2.initial(), q) == a1.initial() &&
              matrix_times_col(q, a1.final_weights()) == a2.final_weights();
    for (size_t k = 0; ok && k < a1.alphabet().size(); k++)
        ok = q * a1.transition(k) == a2.transition(k) * q;
    if (!ok)
        throw Error(ErrorCode::Internal, "conjugacy witness identities failed");
    return {std::move(q)};
}

} // namespace wfa
