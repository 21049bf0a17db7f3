#include "fixword/analysis.hpp"
#include "fixword/digraph.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"
#include "fixword/families.hpp"
#include "fixword/fixing.hpp"
#include "fixword/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fixword;

TEST_CASE("path networks are fixed exactly by their supersequences") {
    const auto perms = all_permutations(3).perms;
    for (const auto& p : perms) {
        const auto f = path_network(p);
        CHECK(f.backing() == Backing::formula);
        const auto table = f.images();
        for (std::size_t len = 0; len <= 5; ++len)
            oracle::for_each_word(3, len, [&](const Word& w) {
                CHECK(oracle::fixes(table, w) == oracle::subsequence(std::vector<int>(p.begin(), p.end()), w));
            });
    }
}

TEST_CASE("gray code network walks the reflected code") {
    CHECK(gray_code_word(1) == Word{1});
    CHECK(gray_code_word(2) == Word{2, 1, 2});
    CHECK(gray_code_word(3) == Word{3, 2, 3, 1, 3, 2, 3});
    for (int n = 1; n <= 4; ++n) {
        const auto f = gray_code_network(n);
        const auto fp = fixed_points(f);
        REQUIRE(fp.size() == 1);
        // Following the word from 0 visits every state once and ends at the fixed point.
        State x{};
        std::set<std::uint64_t> seen{x.bits()};
        for (Letter a : gray_code_word(n)) {
            const State y = f.image(x);
            CHECK((x + y) == State::unit(a));
            x = y;
            seen.insert(x.bits());
        }
        CHECK(seen.size() == (std::size_t{1} << n));
        CHECK(x == fp[0]);
    }
}

TEST_CASE("chain networks reach 1 from 0 exactly along supersequences") {
    const Word p{2, 3, 1};
    const auto f = chain_increasing_network(p);
    CHECK(classify(f).increasing);
    for (std::size_t len = 0; len <= 6; ++len)
        oracle::for_each_word(3, len, [&](const Word& w) {
            const bool reaches = apply_word(f, w, State{}) == State::ones(3);
            CHECK(reaches == oracle::subsequence({2, 3, 1}, w));
        });
    CHECK_THROWS_AS(chain_increasing_network(Word{1, 1, 2}), invalid_input);
}

TEST_CASE("conjunctive network computes the AND of in-neighbours") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto g = oracle::random_graph(n, 0.4, rng);
        const auto f = conjunctive_network(g);
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            std::uint64_t want = 0;
            for (int i = 1; i <= n; ++i)
                if ((x & g.in_mask(i)) == g.in_mask(i)) want |= 1ULL << (i - 1);
            CHECK(f.image(State{x}).bits() == want);
        }
        CHECK(interaction_graph(f).same_edges(g));
    }
}

TEST_CASE("Baranyai partitions cover each subset once") {
    const std::pair<int, int> cases[] = {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {5, 5}, {3, 1}};
    for (auto [n, a] : cases) {
        const auto parts = baranyai_partitions(n, a);
        CHECK(parts.size() == binomial(n, a) * static_cast<std::uint64_t>(a) / static_cast<std::uint64_t>(n));
        std::set<std::vector<int>> blocks;
        for (const auto& part : parts) {
            std::vector<int> cover;
            for (const auto& b : part) {
                CHECK(b.size() == static_cast<std::size_t>(a));
                CHECK(std::is_sorted(b.begin(), b.end()));
                CHECK(blocks.insert(b).second);
                cover.insert(cover.end(), b.begin(), b.end());
            }
            std::sort(cover.begin(), cover.end());
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 1);
            CHECK(cover == all);
        }
        CHECK(blocks.size() == binomial(n, a));
    }
    CHECK_THROWS_AS(baranyai_partitions(5, 2), invalid_input);
}

TEST_CASE("hard permutation family") {
    const auto fam = hard_permutation_family(4, 2, 2);
    CHECK(fam.n == 4);
    CHECK(fam.perms.size() == 12);
    CHECK_NOTHROW(fam.validate());
    const auto big = hard_permutation_family(6, 3, 2);
    CHECK(big.perms.size() == 6 * 20);
    CHECK_NOTHROW(big.validate());
    // Block l of pi^{i,j,k} lists a whole block of the partition.
    const auto parts = baranyai_partitions(6, 3);
    for (const auto& p : big.perms) {
        std::vector<int> first(p.begin(), p.begin() + 3);
        std::sort(first.begin(), first.end());
        bool is_block = false;
        for (const auto& part : parts)
            for (const auto& b : part)
                if (b == first) is_block = true;
        CHECK(is_block);
    }
}

TEST_CASE("colex rank and binomial") {
    for (int r = 1; r <= 8; ++r) {
        std::vector<std::uint64_t> count(static_cast<std::size_t>(r + 1), 0);
        for (std::uint64_t y = 0; y < (1ULL << r); ++y) {
            const int k = std::popcount(y);
            CHECK(colex_rank(y) == count[static_cast<std::size_t>(k)]);
            ++count[static_cast<std::size_t>(k)];
        }
        for (int k = 0; k <= r; ++k) CHECK(binomial(r, k) == count[static_cast<std::size_t>(k)]);
    }
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("packing networks embed their hooks on the middle layer") {
    std::vector<BooleanNetwork> hooks;
    for (const auto& p : all_permutations(2).perms) hooks.push_back(path_network(p));
    const int r = 2;
    const auto f = packing_monotone_network(hooks, r);
    CHECK(f.size() == 4);
    CHECK(classify(f).monotone);
    for (std::uint64_t y = 0; y < 4; ++y) {
        for (std::uint64_t x = 0; x < 4; ++x) {
            const State s{x | (y << 2)};
            const State img = f.image(s);
            CHECK((img.bits() >> 2) == y);
            const std::uint64_t xpart = img.bits() & 3U;
            const int w = std::popcount(y);
            if (w > 1) CHECK(xpart == 3);
            else if (w < 1) CHECK(xpart == 0);
            else CHECK(xpart == hooks[colex_rank(y) % hooks.size()].image(State{x}).bits());
        }
    }
    const auto inc = packing_increasing_network(all_permutations(2), 2);
    CHECK(classify(inc).increasing);
}

TEST_CASE("universal words") {
    CHECK(monotone_universal_word(1) == Word{1});
    CHECK(monotone_universal_word(2) == Word{1, 2, 1});
    CHECK(monotone_universal_word(3) == Word{1, 2, 1, 3, 1, 2, 1});
    for (int n = 1; n < 10; ++n)
        CHECK(monotone_universal_word(n + 1).size() ==
              monotone_universal_word(n).size() + 1 + best_complete_word(n).size());
    CHECK(balanced_universal_word(1) == Word{1});
    CHECK(balanced_universal_word(2) == Word{1, 2, 1, 2});
    CHECK(balanced_universal_word(3) == Word{1, 2, 3, 1, 2, 3} + monotone_universal_word(3));
    const Word s = Word::range(1, 5);
    CHECK(balanced_universal_word(5) == s + s + monotone_universal_word(5) + s + s);
}

TEST_CASE("W^2 fixes every monotone 2-network") {
    const auto& m2 = monotone_functions(2);
    const Word w = monotone_universal_word(2);
    int count = 0;
    for (auto f1 : m2) {
        for (auto f2 : m2) {
            std::vector<std::uint32_t> t(4);
            for (std::uint32_t x = 0; x < 4; ++x) t[x] = ((f1 >> x) & 1U) | (((f2 >> x) & 1U) << 1);
            CHECK(oracle::fixes(t, w));
            ++count;
        }
    }
    CHECK(count == 36);
}

TEST_CASE("monotone functions are the Dedekind families") {
    const std::size_t dedekind[] = {2, 3, 6, 20, 168, 7581};
    for (int d = 0; d <= 5; ++d) {
        const auto& fs = monotone_functions(d);
        CHECK(fs.size() == dedekind[d]);
        CHECK(std::is_sorted(fs.begin(), fs.end()));
        for (auto f : fs) {
            for (std::uint32_t x = 0; x < (1U << d); ++x)
                for (int j = 0; j < d; ++j)
                    if (!((x >> j) & 1U)) CHECK(((f >> x) & 1U) <= ((f >> (x | (1U << j))) & 1U));
        }
    }
}

TEST_CASE("random monotone networks stay inside their graph") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto g = oracle::random_graph(n, 0.5, rng);
        const auto f = random_monotone_network(g, rng);
        const auto table = f.images();
        CHECK(oracle::monotone(table, n));
        CHECK(oracle::interaction_graph(table, n).is_subgraph_of(g));
    }
}

TEST_CASE("random networks are reproducible from their seed") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(same_map(sample_random_network(6, 99), sample_random_network(6, 99)));
    CHECK_FALSE(same_map(sample_random_network(6, 99), sample_random_network(6, 100)));
    CHECK(sample_random_table(6, 5) == sample_random_network(6, 5).images());
}

TEST_CASE("a word fixes f exactly when it fixes its dual") {
    std::mt19937_64 rng(127);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto f = BooleanNetwork::from_table(n, oracle::random_table(n, rng));
        const auto d = dual(f);
        std::vector<Letter> a(rng() % 10);
        for (auto& l : a) l = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        CHECK(fixes(f, Word(a)).fixes == fixes(d, Word(a)).fixes);
    }
}
