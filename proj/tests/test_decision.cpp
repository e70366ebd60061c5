#include <doctest.h>

#include "core/decision.hpp"
#include "core/error.hpp"
#include "core/generator.hpp"
#include "fixtures.hpp"

using namespace wfa;
namespace fx = wfa::fixtures;

TEST_CASE("zeroness on fixed automata") {
    SUBCASE("swap automaton is zero") {
        WeightedAutomaton a(2, {"a"},
                            {Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}},
                            {Rational(1), Rational(-1)}, {Rational(1), Rational(1)});
        ZeroVerdict verdict = is_zero(a);
        CHECK(verdict.is_zero);
        CHECK_FALSE(verdict.witness.has_value());
    }
    SUBCASE("nilpotent shift has witness of length n-1") {
        WeightedAutomaton a(2, {"a"},
                            {Matrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}},
                            {Rational(1), Rational(0)}, {Rational(0), Rational(1)});
        ZeroVerdict verdict = is_zero(a);
        CHECK_FALSE(verdict.is_zero);
        REQUIRE(verdict.witness.has_value());
        CHECK(*verdict.witness == fx::repeat("a", 1));
        CHECK(evaluate(a, *verdict.witness) == Rational(1));
    }
    SUBCASE("zero-state automaton is zero") {
        CHECK(is_zero(WeightedAutomaton::zero({"a", "b"})).is_zero);
    }
}

TEST_CASE("equivalence on fixed automata") {
    SUBCASE("two presentations of doubling") {
        EquivVerdict verdict = equivalent(fx::doubling(), fx::doubling_redundant());
        CHECK(verdict.equivalent);
        CHECK_FALSE(verdict.counterexample.has_value());
    }
    SUBCASE("doubling vs tripling") {
        EquivVerdict verdict = equivalent(fx::doubling(), fx::tripling());
        CHECK_FALSE(verdict.equivalent);
        REQUIRE(verdict.counterexample.has_value());
        CHECK(*verdict.counterexample == fx::repeat("a", 1));
    }
    SUBCASE("reflexivity") {
        CHECK(equivalent(fx::counting(), fx::counting()).equivalent);
    }
    SUBCASE("alphabet mismatch is an error") {
        WeightedAutomaton over_b(1, {"b"}, {Matrix{{Rational(2)}}}, {Rational(1)}, {Rational(1)});
        CHECK_THROWS_AS(equivalent(fx::doubling(), over_b), Error);
    }
}

TEST_CASE("brute-force enumeration") {
    SUBCASE("doubling values") {
        auto values = brute_force_values(fx::doubling(), 2);
        REQUIRE(values.size() == 3);
        CHECK(values[0].first.empty());
        CHECK(values[0].second == Rational(1));
        CHECK(values[1].second == Rational(2));
        CHECK(values[2].second == Rational(4));
    }
    SUBCASE("counting values") {
        auto values = brute_force_values(fx::counting(), 3);
        REQUIRE(values.size() == 4);
        for (size_t k = 0; k < 4; k++) {
            CHECK(values[k].first == fx::repeat("a", k));
            CHECK(values[k].second == Rational(static_cast<long>(k)));
        }
    }
    SUBCASE("zero-state automaton") {
        for (const auto& [w, value] : brute_force_values(WeightedAutomaton::zero({"a", "b"}), 2))
            CHECK(value == Rational(0));
    }
    SUBCASE("length-lex enumeration order over two symbols") {
        WeightedAutomaton a(1, {"a", "b"},
                            {Matrix{{Rational(1)}}, Matrix{{Rational(1)}}},
                            {Rational(1)}, {Rational(1)});
        auto values = brute_force_values(a, 2);
        std::vector<Word> expected = {
            {}, {"a"}, {"b"}, {"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}};
        REQUIRE(values.size() == expected.size());
        for (size_t i = 0; i < expected.size(); i++)
            CHECK(values[i].first == expected[i]);
    }
    SUBCASE("budget is enforced") {
        WeightedAutomaton a(1, {"a", "b"},
                            {Matrix{{Rational(1)}}, Matrix{{Rational(1)}}},
                            {Rational(1)}, {Rational(1)});
        CHECK_THROWS_AS(brute_force_values(a, 10, 100), Error);
    }
}

TEST_CASE("is_zero agrees with brute force on random automata") {
    AutomatonGenerator gen{.max_states = 4, .alphabet_size = 2, .seed = 0};
    int nonzero_seen = 0;
    for (std::uint64_t seed = 0; seed < 60; seed++) {
        gen.seed = seed;
        WeightedAutomaton a = random_automaton(gen);
        ZeroVerdict verdict = is_zero(a);
        bool oracle_zero = true;
        if (a.states() > 0)
            for (const auto& [w, value] : brute_force_values(a, a.states() - 1))
                if (!value.is_zero())
                    oracle_zero = false;
        CHECK(verdict.is_zero == oracle_zero);
        if (verdict.witness) {
            nonzero_seen++;
            CHECK_FALSE(evaluate(a, *verdict.witness).is_zero());
            CHECK(verdict.witness->size() + 1 <= a.states());
        }
    }
    CHECK(nonzero_seen > 10);
}

TEST_CASE("equivalence is an equivalence relation on a small pool") {
    AutomatonGenerator gen{.max_states = 3, .alphabet_size = 2, .seed = 900};
    std::vector<WeightedAutomaton> pool;
    for (std::uint64_t seed = 900; seed < 906; seed++) {
        gen.seed = seed;
        pool.push_back(random_automaton(gen));
    }
    // Add equivalent variants so the symmetric/transitive cases are hit.
    pool.push_back(sum(pool[0], WeightedAutomaton::zero(pool[0].alphabet())));
    pool.push_back(sum(WeightedAutomaton::zero(pool[0].alphabet()), pool[0]));
    for (size_t i = 0; i < pool.size(); i++)
        CHECK(equivalent(pool[i], pool[i]).equivalent);
    for (size_t i = 0; i < pool.size(); i++)
        for (size_t j = 0; j < pool.size(); j++)
            CHECK(equivalent(pool[i], pool[j]).equivalent ==
                  equivalent(pool[j], pool[i]).equivalent);
    for (size_t i = 0; i < pool.size(); i++)
        for (size_t j = 0; j < pool.size(); j++)
            for (size_t k = 0; k < pool.size(); k++)
                if (equivalent(pool[i], pool[j]).equivalent &&
                    equivalent(pool[j], pool[k]).equivalent)
                    CHECK(equivalent(pool[i], pool[k]).equivalent);
}
