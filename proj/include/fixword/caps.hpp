#ifndef FIXWORD_CAPS_HPP
#define FIXWORD_CAPS_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace fixword {

// Size limits for the exhaustive routines. Every exact search checks its
// limit up front and throws cap_exceeded rather than running unbounded.
struct Caps {
    int dense_limit = 20;          // full 2^n scans: fixed points, interaction graph, classify
    int lazy_limit = 24;           // fixes(): lazy enumeration of all states
    int max_leaf_exact = 10;       // exact phi(G) search
    int transversal_exact = 20;    // tau and tau_1 by subset enumeration
    int factorial_enum = 8;        // explicit permutation enumeration
    int complete_dp = 24;          // subset-DP completeness check
    int complete_search = 4;       // exact shortest n-complete word
    int improved_complete = 14;    // improved n-complete construction (verified)
    int design_subsets = 70;       // C(n,a) for Baranyai search
    std::size_t search_states = 4'000'000; // supersequence / shortest-word search
    std::size_t monoid_states = 4'000'000; // fixing_length image-set search

    // Applies "key=value" assignments separated by newlines, commas or
    // semicolons. '#' starts a comment. Throws invalid_input on unknown keys.
    void apply(std::string_view assignments);

    // Defaults, then the file named by `path` (if non-empty), then the
    // FIXWORD_CAPS environment variable. FIXWORD_CAPS may hold assignments
    // directly or the path of a caps file.
    static Caps load(const std::string& path = {});

    std::string to_string() const;
};

const Caps& default_caps();

} // namespace fixword

#endif
