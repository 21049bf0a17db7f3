#ifndef FIXWORD_NETLANG_HPP
#define FIXWORD_NETLANG_HPP

#include "fixword/network.hpp"
#include "fixword/signed_digraph.hpp"
#include "fixword/word.hpp"

#include <string>
#include <string_view>

namespace fixword {

// Text formats (.bn networks, .dg graphs, .w words); grammar.md has the
// exact grammars. Every parser either returns a value or throws
// parse_error carrying a 1-based line and column.
BooleanNetwork parse_network(std::string_view text);
SignedDigraph parse_graph(std::string_view text);
Word parse_word(std::string_view text);

// Formula-backed networks print their formulas; other backings print the
// disjunctive normal form of each truth table.
std::string emit_network(const BooleanNetwork& f);
std::string emit_graph(const SignedDigraph& g);
// Compact digits ("1213121") when n <= 9 and every letter is 1..9;
// otherwise comma separated, with a trailing comma for a single letter.
std::string emit_word(const Word& w, int n);

} // namespace fixword

#endif
