#pragma once

#include <string>
#include <string_view>

#include "core/automaton.hpp"

namespace wfa {

// Automaton document format. Line-oriented, '#' starts a comment:
//
//   alphabet: a b
//   states: 2
//   initial: 1 0
//   final: 0 1
//   transitions a:
//   1 1
//   0 1
//
// Rationals are written as "p" or "p/q" with q positive. Printing is
// canonical (alphabet sorted, normalized rationals, fixed field order), so
// parse(print(a)) == a.
WeightedAutomaton parse_automaton(std::string_view text);
std::string print_automaton(const WeightedAutomaton& a);

WeightedAutomaton read_automaton_file(const std::string& path);
void write_automaton_file(const WeightedAutomaton& a, const std::string& path);

// Word syntax: symbols joined by "." ("a.b.a"); bare concatenation when all
// alphabet symbols are single characters; "" or "''" is the empty word.
Word parse_word(const WeightedAutomaton& a, std::string_view text);
std::string word_to_string(const Word& w);

} // namespace wfa
