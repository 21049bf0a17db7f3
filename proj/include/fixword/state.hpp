#ifndef FIXWORD_STATE_HPP
#define FIXWORD_STATE_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace fixword {

inline constexpr int kMaxComponents = 63;

// A point of {0,1}^n. Component i (1-based) lives in bit i-1; the component
// count is carried by the network or graph the state belongs to.
class State {
public:
    constexpr State() = default;
    constexpr explicit State(std::uint64_t bits) : bits_(bits) {}

    static constexpr State zeros() { return State{}; }
    static constexpr State ones(int n) { return State{n >= 64 ? ~0ULL : (1ULL << n) - 1}; }
    static constexpr State unit(int i) { return State{1ULL << (i - 1)}; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t index() const { return static_cast<std::size_t>(bits_); }

    constexpr bool operator[](int i) const { return (bits_ >> (i - 1)) & 1ULL; }
    constexpr State with(int i, bool value) const {
        const std::uint64_t m = 1ULL << (i - 1);
        return State{value ? (bits_ | m) : (bits_ & ~m)};
    }
    constexpr State flipped(int i) const { return State{bits_ ^ (1ULL << (i - 1))}; }
    constexpr int weight() const { return std::popcount(bits_); }

    // x + y (componentwise sum mod 2)
    friend constexpr State operator+(State a, State b) { return State{a.bits_ ^ b.bits_}; }
    friend constexpr bool operator==(State a, State b) = default;

private:
    std::uint64_t bits_ = 0;
};

// x <= y componentwise.
constexpr bool is_below(State x, State y) { return (x.bits() & ~y.bits()) == 0; }

// "x1 x2 ... xn" without separators, x1 first: State{0b110} with n=3 is "011".
std::string to_string(State x, int n);

// Inverse of to_string; throws invalid_input on bad characters or length.
State parse_state(std::string_view text, int n);

} // namespace fixword

#endif
