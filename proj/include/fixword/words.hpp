#ifndef FIXWORD_WORDS_HPP
#define FIXWORD_WORDS_HPP

#include "fixword/caps.hpp"
#include "fixword/signed_digraph.hpp"
#include "fixword/word.hpp"

#include <vector>

namespace fixword {

// Arrangements of [n]; every member is a bijection onto [n].
struct PermutationFamily {
    int n = 0;
    std::vector<Word> perms;

    // Throws invalid_input when a member is not a permutation of [n].
    void validate() const;
};

bool is_permutation(const Word& w, int n);

// All permutations of [n] in lexicographic order; n <= caps.factorial_enum.
PermutationFamily all_permutations(int n, const Caps& caps = default_caps());

// Greedy left-to-right matching.
bool is_subsequence(const Word& u, const Word& w);

// Every permutation of S is a subsequence of w. Decided by a dynamic
// program over subsets of S (|S| <= caps.complete_dp): E(T) is the latest
// greedy end position over all arrangements of T.
bool is_complete(const Word& w, VertexMask s, const Caps& caps = default_caps());
bool is_complete(const Word& w, int n, const Caps& caps = default_caps());

enum class CompleteMode { simple, improved };

// simple: n copies of 12...n (length n^2).
// improved: length n^2 - 2n + 4 for n >= 3 (1 and 3 for n = 1, 2), built recursively
// from 123412314213 by inserting the new top letter and checked by the
// subset program; n <= caps.improved_complete.
Word complete_word(int n, CompleteMode mode = CompleteMode::simple, const Caps& caps = default_caps());

// Shortest known n-complete word: exact for n <= 4, improved up to the cap,
// simple beyond.
Word best_complete_word(int n, const Caps& caps = default_caps());

struct ShortestWord {
    Word word;
    std::size_t length = 0;
};

// Exact minimum by breadth-first search over the vector of per-permutation
// greedy match positions; the lexicographically least minimum is returned.
ShortestWord shortest_supersequence(const PermutationFamily& family, const Caps& caps = default_caps());
// n <= caps.complete_search.
ShortestWord shortest_complete_word(int n, const Caps& caps = default_caps());

// i.(12...b), 12...a with b = a + i; length i^2 + i*a + a.
Word constrained_complete_word(int alpha, int i);

// Contains every permutation of [alpha + i] in which two consecutive letters
// from [alpha] increase. alpha + i <= caps.complete_dp.
bool is_constrained_complete(const Word& w, int alpha, int i, const Caps& caps = default_caps());

} // namespace fixword

#endif
