#include "fixword/digraph.hpp"
#include "fixword/error.hpp"
#include "fixword/families.hpp"
#include "fixword/netlang.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fixword;

TEST_CASE("parse a network with comments and blank lines") {
    const auto f = parse_network("# example\n\nnetwork 3   # header\n1: x1 & x2 & x3\n\n2: x1 & !x3\n3: x2 & !x1\n");
    CHECK(f.size() == 3);
    CHECK(f.backing() == Backing::formula);
    CHECK(f.image(State::ones(3)) == State{0b001});
    CHECK(emit_network(f) == "network 3\n1: x1 & x2 & x3\n2: x1 & !x3\n3: x2 & !x1\n");
}

TEST_CASE("network parse errors carry line and column") {
    auto where = [](std::string_view text) {
        try {
            parse_network(text);
        } catch (const parse_error& e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{0, 0};
    };
    CHECK(where("network 3\n1: x2 &\n2: x1\n3: x3\n") == std::pair{2, 8});
    CHECK(where("network 2\n1: x3\n2: x1\n") == std::pair{2, 4});
    CHECK(where("network 2\n1: x1\n1: x2\n") == std::pair{3, 1});
    CHECK(where("network 2\n1: x1\n") == std::pair{3, 1});
    CHECK(where("netwrk 2\n") == std::pair{1, 1});
    CHECK(where("network 2\n1: (x1 | x2\n2: 1\n") == std::pair{2, 12});
    CHECK(where("network 2\n1: 2\n2: 1\n") == std::pair{2, 4});
    CHECK(where("network 0\n").first == 1);
}

TEST_CASE("deep nesting is rejected rather than overflowing the stack") {
    std::string text = "network 1\n1: ";
    for (int k = 0; k < 100000; ++k) text += '(';
    text += "x1";
    CHECK_THROWS_AS(parse_network(text), parse_error);
    std::string bangs = "network 1\n1: " + std::string(100000, '!') + "x1\n";
    CHECK_THROWS_AS(parse_network(bangs), parse_error);
}

TEST_CASE("emitted networks parse back to the same map") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto f = BooleanNetwork::from_table(n, oracle::random_table(n, rng));
        const auto g = parse_network(emit_network(f));
        CHECK(same_map(f, g));
        // A second round trip is textually stable.
        CHECK(emit_network(g) == emit_network(parse_network(emit_network(g))));
    }
    const auto gray = gray_code_network(3);
    CHECK(same_map(gray, parse_network(emit_network(gray))));
}

TEST_CASE("graphs") {
    const auto g = parse_graph("digraph 3\n1 -> 2\n2 -> 3 -\n3 -> 1 ?\n1 -> 1 +\n");
    CHECK(g.edge_count() == 4);
    CHECK(g.sign(2, 3) == Sign::negative);
    CHECK(g.sign(3, 1) == Sign::zero);
    CHECK(emit_graph(g) == "digraph 3\n1 -> 1\n1 -> 2\n2 -> 3 -\n3 -> 1 ?\n");
    CHECK(parse_graph(emit_graph(g)) == g);
    CHECK_THROWS_AS(parse_graph("digraph 2\n1 -> 2\n1 -> 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("digraph 2\n1 -> 3\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("digraph 2\n1 - 2\n"), parse_error);
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const auto r = oracle::random_graph(1 + static_cast<int>(rng() % 6), 0.3, rng);
        CHECK(parse_graph(emit_graph(r)) == r);
    }
}

TEST_CASE("words") {
    CHECK(parse_word("1213121\n") == Word{1, 2, 1, 3, 1, 2, 1});
    CHECK(parse_word("1, 12, 3") == Word{1, 12, 3});
    CHECK(parse_word("12,") == Word{12});
    CHECK(parse_word("1 2 3") == Word{1, 2, 3});
    CHECK(parse_word("").empty());
    CHECK(parse_word("# nothing\n").empty());
    CHECK_THROWS_AS(parse_word("120"), parse_error);
    CHECK_THROWS_AS(parse_word("1,0"), parse_error);
    CHECK_THROWS_AS(parse_word("1a"), parse_error);
    CHECK_THROWS_AS(parse_word("1,12345678901"), parse_error);
    CHECK(parse_word("1234567891234").size() == 13);
    CHECK(emit_word(Word{1, 2, 1}, 3) == "121");
    CHECK(emit_word(Word{1, 10}, 10) == "1,10");
    CHECK(emit_word(Word{12}, 12) == "12,");
    std::mt19937_64 rng(47);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 14);
        std::vector<Letter> a(rng() % 12);
        for (auto& l : a) l = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        CHECK(parse_word(emit_word(Word(a), n)) == Word(a));
    }
}

TEST_CASE("parsers either succeed or throw parse_error on mutated input") {
    const std::string seeds[] = {
        "network 3\n1: x1 & x2 & x3\n2: x1 & !x3\n3: (x2 | 0) & !x1\n",
        "digraph 3\n1 -> 2\n2 -> 3 -\n3 -> 1 ?\n",
        "1,2,3,12\n",
    };
    const std::string alphabet = "x0123456789&|!()->:+-?#, \n\tnetworkdigraph";
    std::mt19937_64 rng(53);
    int ok = 0;
    for (int t = 0; t < 20000; ++t) {
        std::string s = seeds[t % 3];
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = s.empty() ? 0 : rng() % s.size();
            const char c = alphabet[rng() % alphabet.size()];
            switch (rng() % 3) {
            case 0: if (!s.empty()) s[pos] = c; break;
            case 1: s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), c); break;
            default: if (!s.empty()) s.erase(pos, 1); break;
            }
        }
        try {
            if (t % 3 == 0) parse_network(s);
            else if (t % 3 == 1) parse_graph(s);
            else parse_word(s);
            ++ok;
        } catch (const parse_error&) {
        }
    }
    CHECK(ok > 0);
}

TEST_CASE("parsers survive arbitrary bytes") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 30000; ++t) {
        std::string s = t % 2 ? (t % 4 == 1 ? "network 2\n1: " : "digraph 2\n") : "";
        const std::size_t len = rng() % 40;
        for (std::size_t k = 0; k < len; ++k) s += static_cast<char>(rng() & 0xFF);
        try {
            switch (t % 3) {
            case 0: parse_network(s); break;
            case 1: parse_graph(s); break;
            default: parse_word(s); break;
            }
        } catch (const parse_error&) {
        }
    }
}

TEST_CASE("small documented inputs") {
    const auto zero = parse_network("network 1\n1: 0\n");
    CHECK(zero.image(State{1}) == State{0});
    CHECK(zero.image(State{0}) == State{0});
    const auto two = parse_graph("digraph 2\n1 -> 2 -\n2 -> 1 -\n");
    CHECK(two.sign(1, 2) == Sign::negative);
    CHECK(two.sign(2, 1) == Sign::negative);
    const auto c3 = parse_graph("digraph 3\n1 -> 2\n2 -> 3\n3 -> 1\n");
    CHECK(c3 == cycle_graph(3, false));
    CHECK(emit_word(Word{1, 2, 1, 3, 1, 2, 1}, 10) == "1,2,1,3,1,2,1");
}
