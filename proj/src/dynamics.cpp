#include "fixword/dynamics.hpp"

#include "fixword/error.hpp"

namespace fixword {

State apply_word(const BooleanNetwork& f, const Word& w, State x) {
    for (const Letter i : w) x = apply_letter(f, i, x);
    return x;
}

void check_dense(int n, const Caps& caps) {
    if (n > caps.dense_limit) throw cap_exceeded("dense_limit", caps.dense_limit, n);
}

std::vector<State> fixed_points(const BooleanNetwork& f, const Caps& caps) {
    const int n = f.size();
    check_dense(n, caps);
    std::vector<State> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (f.image(State{x}) == State{x}) out.push_back(State{x});
    return out;
}

std::uint32_t run(std::span<const std::uint32_t> images, int n, std::span<const Letter> w,
                  std::uint32_t x) {
    for (const Letter i : w)
        if (i >= 1 && i <= n) x = step(images, i, x);
    return x;
}

} // namespace fixword
