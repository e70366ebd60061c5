#include <doctest.h>

#include "core/automaton.hpp"
#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/hankel.hpp"
#include "fixtures.hpp"

using namespace wfa;
namespace fx = wfa::fixtures;

TEST_CASE("automaton validation") {
    CHECK_THROWS_AS(WeightedAutomaton(1, {"a"}, {Matrix(2, 2)}, {Rational(1)}, {Rational(1)}),
                    Error);
    CHECK_THROWS_AS(WeightedAutomaton(1, {"a"}, {Matrix(1, 1)}, {}, {Rational(1)}), Error);
    CHECK_THROWS_AS(WeightedAutomaton(1, {"a", "a"}, {Matrix(1, 1), Matrix(1, 1)},
                                      {Rational(1)}, {Rational(1)}),
                    Error);
    CHECK_THROWS_AS(WeightedAutomaton(0, {"bad symbol"}, {Matrix(0, 0)}, {}, {}), Error);
    // Alphabet is sorted on construction.
    WeightedAutomaton a(0, {"b", "a"}, {Matrix(0, 0), Matrix(0, 0)}, {}, {});
    CHECK(a.alphabet() == std::vector<Symbol>{"a", "b"});
}

TEST_CASE("evaluate") {
    CHECK(evaluate(fx::doubling(), fx::repeat("a", 3)) == Rational(8));
    CHECK(evaluate(fx::counting(), fx::repeat("a", 4)) == Rational(4));
    CHECK(evaluate(fx::counting(), {}) == Rational(0));
    CHECK(evaluate(WeightedAutomaton::zero({"a"}), fx::repeat("a", 2)) == Rational(0));
    CHECK_THROWS_AS(evaluate(fx::doubling(), fx::word_of({"b"})), Error);
}

TEST_CASE("evaluate splits as a homomorphism") {
    AutomatonGenerator gen{.max_states = 3, .alphabet_size = 2, .seed = 5};
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        gen.seed = seed;
        WeightedAutomaton a = random_automaton(gen);
        for (const Word& w : words_up_to(a.alphabet(), 4)) {
            for (size_t split = 0; split <= w.size(); split++) {
                Vec v = a.initial();
                for (size_t i = 0; i < split; i++)
                    v = row_times_matrix(v, a.transition(w[i]));
                for (size_t i = split; i < w.size(); i++)
                    v = row_times_matrix(v, a.transition(w[i]));
                CHECK(dot(v, a.final_weights()) == evaluate(a, w));
            }
        }
    }
}

TEST_CASE("sum semantics") {
    WeightedAutomaton s = sum(fx::doubling(), fx::doubling());
    CHECK(s.states() == 2);
    CHECK(evaluate(s, fx::repeat("a", 2)) == Rational(8));

    WeightedAutomaton with_zero = sum(fx::counting(), WeightedAutomaton::zero({"a"}));
    for (size_t len = 0; len <= 4; len++)
        CHECK(evaluate(with_zero, fx::repeat("a", len)) ==
              evaluate(fx::counting(), fx::repeat("a", len)));
}

TEST_CASE("difference semantics") {
    WeightedAutomaton d = difference(fx::doubling(), fx::counting());
    CHECK(evaluate(d, fx::repeat("a", 3)) == Rational(5));

    WeightedAutomaton self = difference(fx::counting(), fx::counting());
    for (size_t len = 0; len <= 4; len++)
        CHECK(evaluate(self, fx::repeat("a", len)) == Rational(0));

    WeightedAutomaton vs_zero = difference(fx::doubling(), WeightedAutomaton::zero({"a"}));
    CHECK(evaluate(vs_zero, fx::repeat("a", 3)) == Rational(8));
}

TEST_CASE("hadamard semantics") {
    WeightedAutomaton h = hadamard(fx::doubling(), fx::counting());
    CHECK(h.states() == 2);
    CHECK(evaluate(h, fx::repeat("a", 3)) == Rational(24));

    WeightedAutomaton identity = hadamard(fx::counting(), fx::constant_one());
    for (size_t len = 0; len <= 4; len++)
        CHECK(evaluate(identity, fx::repeat("a", len)) ==
              evaluate(fx::counting(), fx::repeat("a", len)));
}

TEST_CASE("closure operations reject alphabet mismatch") {
    WeightedAutomaton over_b(1, {"b"}, {Matrix{{Rational(2)}}}, {Rational(1)}, {Rational(1)});
    CHECK_THROWS_AS(sum(fx::doubling(), over_b), Error);
    CHECK_THROWS_AS(difference(fx::doubling(), over_b), Error);
    CHECK_THROWS_AS(hadamard(fx::doubling(), over_b), Error);
}

TEST_CASE("closure semantics pointwise on random operands") {
    AutomatonGenerator gen{.max_states = 3, .alphabet_size = 2, .seed = 0};
    for (std::uint64_t seed = 0; seed < 15; seed++) {
        gen.seed = 2 * seed;
        WeightedAutomaton a1 = random_automaton(gen);
        gen.seed = 2 * seed + 1;
        WeightedAutomaton a2 = random_automaton(gen);
        WeightedAutomaton s = sum(a1, a2);
        WeightedAutomaton d = difference(a1, a2);
        WeightedAutomaton h = hadamard(a1, a2);
        CHECK(s.states() == a1.states() + a2.states());
        CHECK(d.states() == a1.states() + a2.states());
        CHECK(h.states() == a1.states() * a2.states());
        for (const Word& w : words_up_to(a1.alphabet(), 4)) {
            Rational v1 = evaluate(a1, w), v2 = evaluate(a2, w);
            CHECK(evaluate(s, w) == v1 + v2);
            CHECK(evaluate(d, w) == v1 - v2);
            CHECK(evaluate(h, w) == v1 * v2);
        }
    }
}
