#ifndef FIXWORD_DYNAMICS_HPP
#define FIXWORD_DYNAMICS_HPP

#include "fixword/caps.hpp"
#include "fixword/network.hpp"
#include "fixword/word.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fixword {

// f^i(x): component i replaced by f_i(x); identity when i is not in [n].
inline State apply_letter(const BooleanNetwork& f, Letter i, State x) {
    if (i < 1 || i > f.size()) return x;
    return x.with(i, f.local(i, x));
}

State apply_word(const BooleanNetwork& f, const Word& w, State x);

// Sorted by bit pattern. Requires n <= caps.dense_limit.
std::vector<State> fixed_points(const BooleanNetwork& f, const Caps& caps = default_caps());

// Raw kernels over an image table (images[x] = f(x)).
inline std::uint32_t step(std::span<const std::uint32_t> images, int i, std::uint32_t x) {
    const std::uint32_t m = 1U << (i - 1);
    return (x & ~m) | (images[x] & m);
}
std::uint32_t run(std::span<const std::uint32_t> images, int n, std::span<const Letter> w,
                  std::uint32_t x);

void check_dense(int n, const Caps& caps);

} // namespace fixword

#endif
