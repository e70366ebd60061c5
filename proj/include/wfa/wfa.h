/* wfa.h -- C API for the weighted-automata library.
 *
 * Automata over a finite alphabet with exact rational weights: evaluation,
 * sum/difference/Hadamard product, zeroness and equivalence with witness
 * words, minimization, Hankel automata, series rank, conjugacy witnesses,
 * and Gram-matrix based decision variants.
 *
 * All functions return WFA_OK on success. On failure they return a status
 * code and leave a human-readable description in wfa_last_error() (thread
 * local). Output parameters are written only on success unless noted.
 *
 * Strings returned through char** are heap-allocated; release them with
 * wfa_string_free(). Automata returned through wfa_automaton** are released
 * with wfa_automaton_free().
 */

#ifndef WFA_H
#define WFA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wfa_automaton wfa_automaton;

typedef enum wfa_status {
    WFA_OK = 0,
    WFA_ERROR_PARSE = 1,             /* malformed document, rational or word */
    WFA_ERROR_DIMENSION = 2,         /* vector/matrix sizes do not match */
    WFA_ERROR_ALPHABET_MISMATCH = 3, /* binary operation on different alphabets */
    WFA_ERROR_UNKNOWN_SYMBOL = 4,    /* word uses a symbol outside the alphabet */
    WFA_ERROR_BUDGET_EXCEEDED = 5,   /* enumeration or Gram budget exceeded */
    WFA_ERROR_SINGULAR = 6,          /* singular matrix / no unique solution */
    WFA_ERROR_PRECONDITION = 7,      /* e.g. conjugacy on non-minimal automata */
    WFA_ERROR_IO = 8,                /* file could not be read or written */
    WFA_ERROR_INVALID_ARGUMENT = 9,  /* null pointer or invalid parameter */
    WFA_ERROR_INTERNAL = 10          /* invariant violation; please report */
} wfa_status;

const char* wfa_version(void);

/* Static name of a status code, e.g. "WFA_ERROR_PARSE". */
const char* wfa_status_name(wfa_status status);

/* Description of the most recent failure in this thread. Valid until the
 * next failing wfa_* call in the same thread. Never NULL. */
const char* wfa_last_error(void);

void wfa_string_free(char* s);

/* ---- Construction and serialization ---------------------------------- */

/* Parses the automaton document format (see the project README). */
wfa_status wfa_automaton_parse(const char* text, wfa_automaton** out);
wfa_status wfa_automaton_read_file(const char* path, wfa_automaton** out);

/* Canonical document text: alphabet sorted, rationals normalized. Parsing
 * the result reproduces the automaton exactly. */
wfa_status wfa_automaton_print(const wfa_automaton* a, char** out_text);
wfa_status wfa_automaton_write_file(const wfa_automaton* a, const char* path);

void wfa_automaton_free(wfa_automaton* a);

size_t wfa_automaton_states(const wfa_automaton* a);
size_t wfa_automaton_alphabet_size(const wfa_automaton* a);
/* Symbol at position index in the sorted alphabet. */
wfa_status wfa_automaton_symbol(const wfa_automaton* a, size_t index, char** out_symbol);

/* ---- Evaluation and closure ------------------------------------------ */

/* Word syntax: symbols joined by "." ("a.b.a"); bare concatenation when all
 * alphabet symbols are single characters; "" or "''" is the empty word.
 * The value is written as a normalized rational string ("8", "-3/7"). */
wfa_status wfa_evaluate(const wfa_automaton* a, const char* word, char** out_value);

wfa_status wfa_sum(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out);
wfa_status wfa_difference(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out);
wfa_status wfa_hadamard(const wfa_automaton* a1, const wfa_automaton* a2, wfa_automaton** out);

/* ---- Decision procedures ---------------------------------------------- */

/* *out_is_zero is 1 iff the automaton denotes the zero series. Otherwise
 * *out_witness (if non-NULL) receives a word of length <= states-1 with
 * nonzero value, in dotted form ("''" for the empty word); it is set to
 * NULL when the automaton is zero. */
wfa_status wfa_is_zero(const wfa_automaton* a, int* out_is_zero, char** out_witness);

/* *out_equivalent is 1 iff both automata denote the same series. Otherwise
 * *out_counterexample (if non-NULL) receives a word of length
 * <= states1+states2-1 on which the values differ; NULL when equivalent. */
wfa_status wfa_equivalent(const wfa_automaton* a1, const wfa_automaton* a2,
                          int* out_equivalent, char** out_counterexample);

/* Gram-matrix variants: flag only, no witness word. state_budget bounds the
 * admissible state count (of the difference automaton for equivalence);
 * pass 0 for the default of 64. */
wfa_status wfa_gram_is_zero(const wfa_automaton* a, size_t state_budget, int* out_is_zero);
wfa_status wfa_gram_equivalent(const wfa_automaton* a1, const wfa_automaton* a2,
                               size_t state_budget, int* out_equivalent);

/* ---- Minimization and the Hankel automaton ---------------------------- */

wfa_status wfa_minimize(const wfa_automaton* a, wfa_automaton** out);

/* Rank of the Hankel matrix of the series = minimal automaton size. */
wfa_status wfa_series_rank(const wfa_automaton* a, size_t* out_rank);

/* The Hankel automaton and its complete word set C. *out_complete_set
 * (if non-NULL) receives the words of C in dotted form, space-separated,
 * in discovery order ("'' a" for {empty word, a}); empty string when C is
 * empty. */
wfa_status wfa_hankel_automaton(const wfa_automaton* a, wfa_automaton** out,
                                char** out_complete_set);

/* Invertible witness matrix q with initial1 = initial2 q, q final1 = final2,
 * q M1(a) = M2(a) q. Both inputs must be minimal and equivalent. The matrix
 * is written as states lines of space-separated rationals. */
wfa_status wfa_conjugacy_witness(const wfa_automaton* a1, const wfa_automaton* a2,
                                 char** out_matrix);

#ifdef __cplusplus
}
#endif

#endif /* WFA_H */
