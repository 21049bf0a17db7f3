#include "fixword/analysis.hpp"
#include "fixword/digraph.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"
#include "fixword/families.hpp"
#include "fixword/formula.hpp"
#include "fixword/netlang.hpp"
#include "fixword/network.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fixword;

namespace {

BooleanNetwork fig1() { return parse_network("network 3\n1: x1 & x2 & x3\n2: x1 & !x3\n3: x2 & !x1\n"); }

// Random formula of bounded depth over x1..xn.
Formula random_formula(int n, int depth, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
    const int k = pick(rng);
    if (k == 0) return Formula::constant(rng() & 1U);
    if (k == 1) return Formula::variable(static_cast<int>(rng() % static_cast<unsigned>(n)) + 1);
    if (k == 2) return Formula::negation(random_formula(n, depth - 1, rng));
    std::vector<Formula> ops;
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < m; ++t) ops.push_back(random_formula(n, depth - 1, rng));
    return k == 3 ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
}

} // namespace

TEST_CASE("formula evaluation and printing") {
    const auto x1 = Formula::variable(1);
    const auto x2 = Formula::variable(2);
    const auto f = Formula::disjunction({Formula::conjunction({x1, Formula::negation(x2)}), x2});
    CHECK(f.to_string() == "x1 & !x2 | x2");
    CHECK(f.max_variable() == 2);
    CHECK_FALSE(f.evaluate(State{0}));
    CHECK(f.evaluate(State{1}));
    CHECK(f.evaluate(State{2}));
    CHECK(Formula::conjunction({}).evaluate(State{0}));
    CHECK_FALSE(Formula::disjunction({}).evaluate(State{0}));
    CHECK(Formula::conjunction({x1}) == x1);
    const auto g = Formula::conjunction({Formula::disjunction({x1, x2}), x1});
    CHECK(g.to_string() == "(x1 | x2) & x1");
}

TEST_CASE("the three backings agree on random formula networks") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Formula> fs;
        for (int i = 0; i < n; ++i) fs.push_back(random_formula(n, 3, rng));
        const auto f = BooleanNetwork::from_formulas(n, fs);
        const auto tab = f.tabulated();
        const auto map = BooleanNetwork::from_map(n, [&](State x) { return f.image(x); });
        CHECK(f.backing() == Backing::formula);
        CHECK(tab.backing() == Backing::truth_table);
        CHECK(map.backing() == Backing::structural);
        CHECK(same_map(f, tab));
        CHECK(same_map(f, map));
        for (std::uint32_t x = 0; x < (1U << n); ++x) {
            std::uint64_t want = 0;
            for (int i = 1; i <= n; ++i)
                if (fs[static_cast<std::size_t>(i - 1)].evaluate(State{x})) want |= 1ULL << (i - 1);
            CHECK(f.image(State{x}).bits() == want);
        }
    }
}

TEST_CASE("from_table validates its input") {
    CHECK_THROWS_AS(BooleanNetwork::from_table(2, {0, 1, 2}), invalid_input);
    CHECK_THROWS_AS(BooleanNetwork::from_table(2, {0, 1, 2, 7}), invalid_input);
}

TEST_CASE("apply_word matches the step-by-step oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto table = oracle::random_table(n, rng);
        const auto f = BooleanNetwork::from_table(n, table);
        std::vector<Letter> letters(rng() % 10);
        for (auto& a : letters) a = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 1)); // n+1 is inert
        const Word w(letters);
        for (std::uint32_t x = 0; x < table.size(); ++x) {
            CHECK(apply_word(f, w, State{x}).bits() == oracle::run(table, w, x));
            CHECK(run(table, n, w.letters(), x) == oracle::run(table, w, x));
        }
    }
}

TEST_CASE("fixed points of the three-component example") {
    const auto f = fig1();
    const auto fp = fixed_points(f);
    REQUIRE(fp.size() == 1);
    CHECK(fp[0] == State{0});
}

TEST_CASE("interaction graph of the three-component example") {
    const auto g = interaction_graph(fig1());
    CHECK(g.edge_count() == 7);
    CHECK(g.has_loop(1));
    CHECK_FALSE(g.has_loop(2));
    CHECK_FALSE(g.has_loop(3));
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 3; ++i)
            if (i != j) CHECK(g.has_edge(j, i));
    CHECK(g.sign(3, 2) == Sign::negative);
    CHECK(g.sign(1, 3) == Sign::negative);
    CHECK(g.sign(1, 2) == Sign::positive);
    CHECK(g.sign(2, 3) == Sign::positive);
    CHECK(g.sign(1, 1) == Sign::positive);
}

TEST_CASE("interaction graph agrees with the definition on random tables") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto table = oracle::random_table(n, rng);
        const auto g = interaction_graph(BooleanNetwork::from_table(n, table));
        const auto want = oracle::interaction_graph(table, n);
        CHECK(g == want);
    }
}

TEST_CASE("balance agrees with simple-cycle enumeration") {
    std::mt19937_64 rng(17);
    int seen[3] = {0, 0, 0};
    for (int t = 0; t < 3000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto g = oracle::random_graph(n, 0.35, rng);
        bool negative = false;
        bool zero_on_cycle = false;
        for (const auto& cyc : oracle::simple_cycles(g)) {
            int prod = 1;
            bool has_zero = false;
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const int s = static_cast<int>(g.sign(cyc[k], cyc[(k + 1) % cyc.size()]));
                if (s == 0) has_zero = true;
                prod *= s;
            }
            if (has_zero) zero_on_cycle = true;
            else if (prod < 0) negative = true;
        }
        const Balance want = negative ? Balance::unbalanced : zero_on_cycle ? Balance::indefinite : Balance::balanced;
        CHECK(balance(g) == want);
        ++seen[static_cast<int>(want)];
    }
    // The generator reaches all three outcomes.
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("is_monotone and classify against oracles") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto table = oracle::random_table(n, rng);
        if (t % 2) {
            // Force monotone: close under the pointwise maximum over the down-set.
            for (std::uint32_t x = 0; x < table.size(); ++x)
                for (std::uint32_t y = 0; y < x; ++y)
                    if ((y & ~x) == 0) table[x] |= table[y];
        }
        const auto f = BooleanNetwork::from_table(n, table);
        const auto c = classify(f);
        CHECK(c.monotone == oracle::monotone(table, n));
        CHECK(is_monotone(n, table) == c.monotone);
        bool inc = true;
        for (std::uint32_t x = 0; x < table.size(); ++x)
            if (x & ~table[x]) inc = false;
        CHECK(c.increasing == inc);
    }
}

TEST_CASE("classify recognizes the named families") {
    const auto p = classify(path_network(Word{2, 3, 1}));
    CHECK(p.path);
    CHECK(p.conjunctive);
    CHECK(p.acyclic);
    CHECK(p.monotone);
    const auto cyc = classify(conjunctive_network(cycle_graph(3, true)));
    CHECK(cyc.conjunctive);
    CHECK_FALSE(cyc.path);
    CHECK_FALSE(cyc.acyclic);
    CHECK(cyc.balanced);
    const auto chain = classify(chain_increasing_network(Word{1, 2, 3}));
    CHECK(chain.increasing);
    // 0 -> e_1 while e_2 stays put, so the chain breaks monotonicity.
    CHECK_FALSE(chain.monotone);
    const auto ex = classify(fig1());
    CHECK_FALSE(ex.monotone);
    CHECK(ex.balance == Balance::unbalanced);
    // A conjunctive network on two disjoint paths is not a path network.
    SignedDigraph two(4);
    two.add_edge(1, 2);
    two.add_edge(3, 4);
    CHECK_FALSE(classify(conjunctive_network(two)).path);
}

TEST_CASE("switch is an involution and the 1-switch is the dual") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto f = BooleanNetwork::from_table(n, oracle::random_table(n, rng));
        const State z{rng() & ((1ULL << n) - 1)};
        CHECK(same_map(switch_network(switch_network(f, z), z), f));
        const auto d = dual(f);
        for (std::uint64_t x = 0; x < (1ULL << n); ++x)
            CHECK(d.image(State{x}) == f.image(State{x} + State::ones(n)) + State::ones(n));
    }
}

TEST_CASE("monotone switch witness agrees with a scan over all switches") {
    std::mt19937_64 rng(31);
    int found = 0;
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        // Monotone tables switched by a random z, and some raw random tables.
        auto table = oracle::random_table(n, rng);
        if (t % 3 != 0) {
            for (std::uint32_t x = 0; x < table.size(); ++x)
                for (std::uint32_t y = 0; y < x; ++y)
                    if ((y & ~x) == 0) table[x] |= table[y];
        }
        const auto base = BooleanNetwork::from_table(n, table);
        const auto f = switch_network(base, State{rng() & ((1ULL << n) - 1)});
        const auto w = monotone_switch_witness(f);
        const auto g = interaction_graph(f);
        if (!is_strong(g)) {
            CHECK(w.failure == SwitchWitness::Failure::not_strong);
            continue;
        }
        bool exists = false;
        for (std::uint64_t z = 0; z < (1ULL << n); ++z)
            if (oracle::monotone(switch_network(f, State{z}).images(), n)) exists = true;
        CHECK(w.z.has_value() == exists);
        if (w.z) {
            ++found;
            CHECK(oracle::monotone(switch_network(f, *w.z).images(), n));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("dense routines respect the cap") {
    Caps caps;
    caps.dense_limit = 3;
    const auto f = BooleanNetwork::from_map(5, [](State x) { return x; });
    CHECK_THROWS_AS(fixed_points(f, caps), cap_exceeded);
    CHECK_THROWS_AS(classify(f, caps), cap_exceeded);
}

TEST_CASE("caps parsing") {
    Caps caps;
    caps.apply("dense_limit = 12, lazy_limit=13 # comment\nsearch_states=99");
    CHECK(caps.dense_limit == 12);
    CHECK(caps.lazy_limit == 13);
    CHECK(caps.search_states == 99);
    CHECK_THROWS_AS(caps.apply("no_such_cap=1"), invalid_input);
    CHECK_THROWS_AS(caps.apply("dense_limit=abc"), invalid_input);
    Caps round;
    round.apply(caps.to_string());
    CHECK(round.to_string() == caps.to_string());
}

namespace {

Word random_word(int letters, std::size_t max_len, std::mt19937_64& rng) {
    std::vector<Letter> a(rng() % (max_len + 1));
    for (auto& l : a) l = 1 + static_cast<int>(rng() % static_cast<unsigned>(letters));
    return Word(a);
}

} // namespace

TEST_CASE("dynamics invariants on random networks") {
    std::mt19937_64 rng(151);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto f = BooleanNetwork::from_table(n, oracle::random_table(n, rng));
        const Word u = random_word(n, 6, rng);
        const Word v = random_word(n, 6, rng);
        const State z{rng() & ((1ULL << n) - 1)};
        const auto fz = switch_network(f, z);
        for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
            const State x{b};
            // Composition.
            CHECK(apply_word(f, u + v, x) == apply_word(f, v, apply_word(f, u, x)));
            // Letters outside [n] are inert.
            CHECK(apply_word(f, Word{n + 1, n + 7}, x) == x);
            // Switch conjugacy.
            CHECK(apply_word(fz, u, x + z) == apply_word(f, u, x) + z);
            // Fixed points absorb.
            if (f.image(x) == x) CHECK(apply_word(f, u, x) == x);
        }
    }
}

TEST_CASE("monotone trajectories from x <= f(x) never decrease") {
    std::mt19937_64 rng(157);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto f = random_monotone_network(complete_graph(n, true), rng);
        const Word w = random_word(n, 10, rng);
        for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
            State x{b};
            if (!is_below(x, f.image(x))) continue;
            for (Letter a : w) {
                const State y = apply_letter(f, a, x);
                CHECK(is_below(x, y));
                CHECK(is_below(y, f.image(y)));
                x = y;
            }
        }
    }
}

TEST_CASE("interaction graph does not depend on the backing") {
    std::mt19937_64 rng(163);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Formula> fs;
        for (int i = 0; i < n; ++i) fs.push_back(random_formula(n, 3, rng));
        const auto f = BooleanNetwork::from_formulas(n, fs);
        CHECK(interaction_graph(f) == interaction_graph(f.tabulated()));
    }
}

TEST_CASE("switch witness examples") {
    const auto neg = parse_network("network 2\n1: !x2\n2: !x1\n");
    const auto w = monotone_switch_witness(neg);
    REQUIRE(w.z);
    CHECK((*w.z == State{1} || *w.z == State{2}));
    const auto mono = parse_network("network 2\n1: x2\n2: x1\n");
    CHECK(monotone_switch_witness(mono).z == State{0});
    // Negative 2-cycle with a positive loop at 1.
    const auto bad = parse_network("network 2\n1: x1 & !x2\n2: x1\n");
    const auto b = monotone_switch_witness(bad);
    CHECK_FALSE(b.z);
    CHECK(b.failure == SwitchWitness::Failure::not_balanced);
}
