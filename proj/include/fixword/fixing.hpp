#ifndef FIXWORD_FIXING_HPP
#define FIXWORD_FIXING_HPP

#include "fixword/caps.hpp"
#include "fixword/network.hpp"
#include "fixword/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

namespace fixword {

struct FixVerdict {
    bool fixes = false;
    // On failure: a start state x and f^w(x), which is not a fixed point.
    std::optional<State> start;
    std::optional<State> end;
    std::uint64_t checked = 0;
};

// Scans the states in increasing order and stops at the first
// counterexample. n <= caps.lazy_limit.
FixVerdict fixes(const BooleanNetwork& f, const Word& w, const Caps& caps = default_caps());

// Same test on a raw image table.
bool fixes_table(std::span<const std::uint32_t> images, int n, std::span<const Letter> w);

// Some fixed point is reachable from every state; backward search from the
// fixed points. n <= caps.dense_limit.
bool is_fixable(const BooleanNetwork& f, const Caps& caps = default_caps());
bool is_fixable_table(std::span<const std::uint32_t> images, int n);

struct FixingLength {
    std::size_t length = 0;
    Word witness; // lexicographically least among the shortest
};

// Breadth-first search over image sets f^w({0,1}^n): w fixes f exactly when
// that set consists of fixed points. At most caps.monoid_states sets are
// stored. Throws not_fixable.
FixingLength fixing_length(const BooleanNetwork& f, const Caps& caps = default_caps());
FixingLength fixing_length_table(std::span<const std::uint32_t> images, int n, const Caps& caps = default_caps());

// Repeatedly takes the smallest non-fixed state of the current image set and
// appends its shortest path to a fixed point. Throws not_fixable.
Word greedy_fixing_word(const BooleanNetwork& f, const Caps& caps = default_caps());

struct FamilyVerdict {
    bool fixes = true;
    std::size_t checked = 0;
    // Index of the first member not fixed, with its counterexample.
    std::optional<std::size_t> member;
    std::optional<State> start;
    std::optional<State> end;
};

FamilyVerdict fixes_family(const Word& w, std::span<const BooleanNetwork> family, const Caps& caps = default_caps());
// next(k) yields member k or nullopt at the end of the family.
FamilyVerdict fixes_family(const Word& w, const std::function<std::optional<BooleanNetwork>(std::size_t)>& next,
                           const Caps& caps = default_caps());

} // namespace fixword

#endif
