#include <doctest.h>

#include <string>

#include "core/error.hpp"
#include "core/format.hpp"
#include "core/generator.hpp"
#include "fixtures.hpp"

using namespace wfa;
namespace fx = wfa::fixtures;

namespace {

std::string doubling_doc() {
    return "alphabet: a\n"
           "states: 1\n"
           "initial: 1\n"
           "final: 1\n"
           "transitions a:\n"
           "2\n";
}

} // namespace

TEST_CASE("parse a one-state document") {
    WeightedAutomaton a = parse_automaton(doubling_doc());
    CHECK(a == fx::doubling());
}

TEST_CASE("parse a zero-state document") {
    WeightedAutomaton a = parse_automaton(
        "alphabet: a\nstates: 0\ninitial:\nfinal:\ntransitions a:\n");
    CHECK(a.states() == 0);
    CHECK(evaluate(a, fx::repeat("a", 2)) == Rational(0));
}

TEST_CASE("comments, blank lines and unsorted alphabets are accepted") {
    WeightedAutomaton a = parse_automaton(
        "# two symbols, given out of order\n"
        "alphabet: b a\n"
        "states: 1\n"
        "\n"
        "initial: 2   # inline comment\n"
        "final: 1/2\n"
        "transitions b:\n"
        "0\n"
        "transitions a:\n"
        "3\n");
    CHECK(a.alphabet() == std::vector<Symbol>{"a", "b"});
    CHECK(a.transition("a") == Matrix{{Rational(3)}});
    CHECK(a.transition("b") == Matrix{{Rational(0)}});
}

TEST_CASE("parse diagnostics carry line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_automaton(text);
            return std::string();
        } catch (const Error& e) {
            return std::string(e.what());
        }
    };
    SUBCASE("wrong initial length") {
        std::string m = message_of("alphabet: a\nstates: 2\ninitial: 1\nfinal: 1 0\n"
                                   "transitions a:\n1 0\n0 1\n");
        CHECK(m.find("line 3") != std::string::npos);
        CHECK(m.find("initial") != std::string::npos);
    }
    SUBCASE("malformed rational") {
        std::string m = message_of("alphabet: a\nstates: 1\ninitial: x\nfinal: 1\n"
                                   "transitions a:\n1\n");
        CHECK(m.find("line 3") != std::string::npos);
        CHECK(m.find("malformed rational") != std::string::npos);
    }
    SUBCASE("unknown transition symbol") {
        std::string m = message_of("alphabet: a\nstates: 1\ninitial: 1\nfinal: 1\n"
                                   "transitions c:\n1\n");
        CHECK(m.find("line 5") != std::string::npos);
        CHECK(m.find("'c'") != std::string::npos);
    }
    SUBCASE("missing transitions") {
        std::string m = message_of("alphabet: a b\nstates: 1\ninitial: 1\nfinal: 1\n"
                                   "transitions a:\n1\n");
        CHECK(m.find("missing transitions") != std::string::npos);
        CHECK(m.find("'b'") != std::string::npos);
    }
    SUBCASE("duplicate transitions") {
        std::string m = message_of("alphabet: a\nstates: 1\ninitial: 1\nfinal: 1\n"
                                   "transitions a:\n1\ntransitions a:\n1\n");
        CHECK(m.find("duplicate") != std::string::npos);
    }
    SUBCASE("missing field") {
        std::string m = message_of("alphabet: a\nstates: 1\nfinal: 1\ntransitions a:\n1\n");
        CHECK(m.find("expected 'initial:'") != std::string::npos);
    }
}

TEST_CASE("printing is canonical and round-trips") {
    CHECK(print_automaton(fx::doubling()) == doubling_doc());
    AutomatonGenerator gen{.max_states = 4, .alphabet_size = 3, .seed = 0};
    for (std::uint64_t seed = 0; seed < 25; seed++) {
        gen.seed = seed;
        WeightedAutomaton a = random_automaton(gen);
        WeightedAutomaton reparsed = parse_automaton(print_automaton(a));
        CHECK(reparsed == a);
        // Printing is deterministic byte for byte.
        CHECK(print_automaton(reparsed) == print_automaton(a));
    }
}

TEST_CASE("word parsing") {
    WeightedAutomaton a = fx::doubling();
    CHECK(parse_word(a, "") == Word{});
    CHECK(parse_word(a, "''") == Word{});
    CHECK(parse_word(a, "a.a.a") == fx::repeat("a", 3));
    CHECK(parse_word(a, "aaa") == fx::repeat("a", 3));
    CHECK_THROWS_AS(parse_word(a, "b"), Error);
    CHECK_THROWS_AS(parse_word(a, "a..a"), Error);

    WeightedAutomaton multi(1, {"ab", "c"}, {Matrix{{Rational(1)}}, Matrix{{Rational(1)}}},
                            {Rational(1)}, {Rational(1)});
    CHECK(parse_word(multi, "ab.c") == fx::word_of({"ab", "c"}));
    // Without a dot the text is one symbol when the alphabet is not
    // single-character.
    CHECK(parse_word(multi, "ab") == fx::word_of({"ab"}));
    CHECK_THROWS_AS(parse_word(multi, "abc"), Error);
}

TEST_CASE("word printing") {
    CHECK(word_to_string({}) == "''");
    CHECK(word_to_string(fx::repeat("a", 2)) == "a.a");
    CHECK(word_to_string(fx::word_of({"ab", "c"})) == "ab.c");
}
