#include "wfa/wfa.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "core/automaton.hpp"
#include "core/conjugate.hpp"
#include "core/decision.hpp"
#include "core/error.hpp"
#include "core/format.hpp"
#include "core/gram.hpp"
#include "core/hankel.hpp"

struct wfa_automaton {
    wfa::WeightedAutomaton impl;
};

namespace {

thread_local std::string g_last_error;

wfa_status map_code(wfa::ErrorCode code) {
    switch (code) {
        case wfa::ErrorCode::Parse: return WFA_ERROR_PARSE;
        case wfa::ErrorCode::Dimension: return WFA_ERROR_DIMENSION;
        case wfa::ErrorCode::AlphabetMismatch: return WFA_ERROR_ALPHABET_MISMATCH;
        case wfa::ErrorCode::UnknownSymbol: return WFA_ERROR_UNKNOWN_SYMBOL;
        case wfa::ErrorCode::BudgetExceeded: return WFA_ERROR_BUDGET_EXCEEDED;
        case wfa::ErrorCode::Singular: return WFA_ERROR_SINGULAR;
        case wfa::ErrorCode::Inconsistent: return WFA_ERROR_SINGULAR;
        case wfa::ErrorCode::Precondition: return WFA_ERROR_PRECONDITION;
        case wfa::ErrorCode::Io: return WFA_ERROR_IO;
        case wfa::ErrorCode::Internal: return WFA_ERROR_INTERNAL;
    }
    return WFA_ERROR_INTERNAL;
}

wfa_status fail(wfa_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Fn>
wfa_status guarded(Fn&& body) {
    try {
        body();
        return WFA_OK;
    } catch (const wfa::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return WFA_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WFA_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string matrix_text(const wfa::Matrix& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++)
            out << (j == 0 ? "" : " ") << m.at(i, j);
        out << "\n";
    }
    return out.str();
}

} // namespace

extern "C" {

const char* wfa_version(void) {
    return "0.1.0";
}

const char* wfa_status_name(wfa_status status) {
    switch (status) {
        case WFA_OK: return "WFA_OK";
        case WFA_ERROR_PARSE: return "WFA_ERROR_PARSE";
        case WFA_ERROR_DIMENSION: return "WFA_ERROR_DIMENSION";
        case WFA_ERROR_ALPHABET_MISMATCH: return "WFA_ERROR_ALPHABET_MISMATCH";
        case WFA_ERROR_UNKNOWN_SYMBOL: return "WFA_ERROR_UNKNOWN_SYMBOL";
        case WFA_ERROR_BUDGET_EXCEEDED: return "WFA_ERROR_BUDGET_EXCEEDED";
        case WFA_ERROR_SINGULAR: return "WFA_ERROR_SINGULAR";
        case WFA_ERROR_PRECONDITION: return "WFA_ERROR_PRECONDITION";
        case WFA_ERROR_IO: return "WFA_ERROR_IO";
        case WFA_ERROR_INVALID_ARGUMENT: return "WFA_ERROR_INVALID_ARGUMENT";
        case WFA_ERROR_INTERNAL: return "WFA_ERROR_INTERNAL";
    }
    return "WFA_ERROR_UNKNOWN";
}

const char* wfa_last_error(void) {
    return g_last_error.c_str();
}

void wfa_string_free(char* s) {
    std::free(s);
}

wfa_status wfa_automaton_parse(const char* text, wfa_automaton** out) {
    if (!text || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::parse_automaton(text)}; });
}

wfa_status wfa_automaton_read_file(const char* path, wfa_automaton** out) {
    if (!path || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::read_automaton_file(path)}; });
}

wfa_status wfa_automaton_print(const wfa_automaton* a, char** out_text) {
    if (!a || !out_text)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out_text = dup_string(wfa::print_automaton(a->impl)); });
}

wfa_status wfa_automaton_write_file(const wfa_automaton* a, const char* path) {
    if (!a || !path)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { wfa::write_automaton_file(a->impl, path); });
}

void wfa_automaton_free(wfa_automaton* a) {
    delete a;
}

size_t wfa_automaton_states(const wfa_automaton* a) {
    return a ? a->impl.states() : 0;
}

size_t wfa_automaton_alphabet_size(const wfa_automaton* a) {
    return a ? a->impl.alphabet().size() : 0;
}

wfa_status wfa_automaton_symbol(const wfa_automaton* a, size_t index, char** out_symbol) {
    if (!a || !out_symbol)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    if (index >= a->impl.alphabet().size())
        return fail(WFA_ERROR_INVALID_ARGUMENT, "symbol index out of range");
    return guarded([&] { *out_symbol = dup_string(a->impl.alphabet()[index]); });
}

wfa_status wfa_evaluate(const wfa_automaton* a, const char* word, char** out_value) {
    if (!a || !word || !out_value)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        wfa::Word w = wfa::parse_word(a->impl, word);
        *out_value = dup_string(wfa::evaluate(a->impl, w).to_string());
    });
}

wfa_status wfa_sum(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out) {
    if (!a1 || !a2 || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::sum(a1->impl, a2->impl)}; });
}

wfa_status wfa_difference(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out) {
    if (!a1 || !a2 || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::difference(a1->impl, a2->impl)}; });
}

wfa_status wfa_hadamard(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out) {
    if (!a1 || !a2 || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::hadamard(a1->impl, a2->impl)}; });
}

wfa_status wfa_is_zero(const wfa_automaton* a, int* out_is_zero, char** out_witness) {
    if (!a || !out_is_zero)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        wfa::ZeroVerdict verdict = wfa::is_zero(a->impl);
        *out_is_zero = verdict.is_zero ? 1 : 0;
        if (out_witness)
            *out_witness = verdict.witness ? dup_string(wfa::word_to_string(*verdict.witness))
                                           : nullptr;
    });
}

wfa_status wfa_equivalent(const wfa_automaton* a1, const wfa_automaton* a2,
                          int* out_equivalent, char** out_counterexample) {
    if (!a1 || !a2 || !out_equivalent)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        wfa::EquivVerdict verdict = wfa::equivalent(a1->impl, a2->impl);
        *out_equivalent = verdict.equivalent ? 1 : 0;
        if (out_counterexample)
            *out_counterexample =
                verdict.counterexample ? dup_string(wfa::word_to_string(*verdict.counterexample))
                                       : nullptr;
    });
}

wfa_status wfa_gram_is_zero(const wfa_automaton* a, size_t state_budget, int* out_is_zero) {
    if (!a || !out_is_zero)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        size_t budget = state_budget == 0 ? wfa::kDefaultGramStateBudget : state_budget;
        *out_is_zero = wfa::gram_is_zero(a->impl, budget) ? 1 : 0;
    });
}

wfa_status wfa_gram_equivalent(const wfa_automaton* a1, const wfa_automaton* a2,
                               size_t state_budget, int* out_equivalent) {
    if (!a1 || !a2 || !out_equivalent)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        size_t budget = state_budget == 0 ? wfa::kDefaultGramStateBudget : state_budget;
        *out_equivalent = wfa::gram_equivalent(a1->impl, a2->impl, budget) ? 1 : 0;
    });
}

wfa_status wfa_minimize(const wfa_automaton* a, wfa_automaton** out) {
    if (!a || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new wfa_automaton{wfa::minimize(a->impl)}; });
}

wfa_status wfa_series_rank(const wfa_automaton* a, size_t* out_rank) {
    if (!a || !out_rank)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out_rank = wfa::series_rank(a->impl); });
}

wfa_status wfa_hankel_automaton(const wfa_automaton* a, wfa_automaton** out,
                                char** out_complete_set) {
    if (!a || !out)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        wfa::HankelAutomaton result = wfa::hankel_automaton(a->impl);
        std::string words;
        for (size_t i = 0; i < result.complete_set.words.size(); i++) {
            if (i > 0)
                words += " ";
            words += wfa::word_to_string(result.complete_set.words[i]);
        }
        *out = new wfa_automaton{std::move(result.automaton)};
        if (out_complete_set)
            *out_complete_set = dup_string(words);
    });
}

wfa_status wfa_conjugacy_witness(const wfa_automaton* a1, const wfa_automaton* a2,
                                 char** out_matrix) {
    if (!a1 || !a2 || !out_matrix)
        return fail(WFA_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        wfa::ConjugacyWitness witness = wfa::conjugacy_witness(a1->impl, a2->impl);
        *out_matrix = dup_string(matrix_text(witness.q));
    });
}

} // extern "C"
