#include "fixword/error.hpp"
#include "fixword/state.hpp"
#include "fixword/word.hpp"
#include "fixword/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fixword;

TEST_CASE("state bit layout puts component 1 first") {
    const State x{0b110};
    CHECK_FALSE(x[1]);
    CHECK(x[2]);
    CHECK(x[3]);
    CHECK(to_string(x, 3) == "011");
    CHECK(parse_state("011", 3) == x);
    CHECK(x.weight() == 2);
    CHECK(x.flipped(1) == State::ones(3));
    CHECK(x.with(2, false) == State{0b100});
    CHECK((x + State::ones(3)) == State{0b001});
    CHECK(State::unit(3) == State{4});
}

TEST_CASE("parse_state rejects bad input") {
    CHECK_THROWS_AS(parse_state("01", 3), invalid_input);
    CHECK_THROWS_AS(parse_state("012", 3), invalid_input);
}

TEST_CASE("state round trip over all of {0,1}^5") {
    for (std::uint64_t b = 0; b < 32; ++b) CHECK(parse_state(to_string(State{b}, 5), 5) == State{b});
}

TEST_CASE("is_below is the componentwise order") {
    for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
            bool below = true;
            for (int i = 0; i < 4; ++i)
                if (((a >> i) & 1U) > ((b >> i) & 1U)) below = false;
            CHECK(is_below(State{a}, State{b}) == below);
        }
    }
}

TEST_CASE("word operators") {
    const Word w = Word::range(1, 3);
    CHECK(w == Word{1, 2, 3});
    CHECK(Word::range(3, 1).empty());
    CHECK(w.repeated(2) == Word{1, 2, 3, 1, 2, 3});
    CHECK(w.repeated(0).empty());
    CHECK(w.factor(2, 3) == Word{2, 3});
    CHECK(w.factor(3, 2).empty());
    const std::size_t pos[] = {1, 3};
    CHECK(w.subsequence(pos) == Word{1, 3});
    CHECK(w.max_letter() == 3);
    CHECK(w + Word{4} == Word{1, 2, 3, 4});
    CHECK(Word{1, 2} < Word{1, 3});
    CHECK(to_string(Word{1, 12, 3}) == "1,12,3");
}

TEST_CASE("is_subsequence agrees with the two-pointer oracle on random words") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> letter(1, 3);
    std::uniform_int_distribution<int> len(0, 8);
    for (int t = 0; t < 2000; ++t) {
        std::vector<int> u(static_cast<std::size_t>(len(rng) / 2));
        std::vector<int> w(static_cast<std::size_t>(len(rng)));
        for (auto& a : u) a = letter(rng);
        for (auto& a : w) a = letter(rng);
        CHECK(is_subsequence(Word(u), Word(w)) == oracle::subsequence(u, Word(w)));
    }
}
