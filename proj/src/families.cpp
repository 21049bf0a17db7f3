#include "fixword/families.hpp"

#include "fixword/analysis.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

namespace fixword {

namespace {

void require_permutation(const Word& perm) {
    if (!is_permutation(perm, static_cast<int>(perm.size())))
        throw invalid_input("'" + to_string(perm) + "' is not a permutation");
}

} // namespace

BooleanNetwork path_network(const Word& perm) {
    require_permutation(perm);
    const int n = static_cast<int>(perm.size());
    std::vector<Formula> locals(static_cast<std::size_t>(n), Formula::constant(true));
    for (std::size_t k = 1; k < perm.size(); ++k)
        locals[static_cast<std::size_t>(perm[k] - 1)] = Formula::variable(perm[k - 1]);
    return BooleanNetwork::from_formulas(n, std::move(locals));
}

namespace {

State gray_state(int n, std::uint64_t k) {
    const std::uint64_t g = k ^ (k >> 1);
    State x;
    for (int b = 0; b < n; ++b)
        if ((g >> b) & 1U) x = x.with(n - b, true);
    return x;
}

} // namespace

BooleanNetwork gray_code_network(int n, const Caps& caps) {
    if (n < 1) throw invalid_input("gray_code_network needs n >= 1");
    check_dense(n, caps);
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> table(states);
    for (std::uint64_t k = 0; k + 1 < states; ++k)
        table[gray_state(n, k).index()] = static_cast<std::uint32_t>(gray_state(n, k + 1).bits());
    const State last = gray_state(n, states - 1);
    table[last.index()] = static_cast<std::uint32_t>(last.bits());
    return BooleanNetwork::from_table(n, std::move(table));
}

Word gray_code_word(int n) {
    Word w;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) w.push_back(n - std::countr_zero(k));
    return w;
}

BooleanNetwork chain_increasing_network(const Word& perm) {
    require_permutation(perm);
    const int n = static_cast<int>(perm.size());
    // chain[k] = y^k
    std::vector<State> chain{State{}};
    for (const Letter a : perm) chain.push_back(chain.back().with(a, true));
    return BooleanNetwork::from_map(n, [chain, n](State x) {
        const int k = x.weight();
        if (k < n && chain[static_cast<std::size_t>(k)] == x) return chain[static_cast<std::size_t>(k) + 1];
        return x;
    });
}

BooleanNetwork conjunctive_network(const SignedDigraph& g) {
    const int n = g.size();
    std::vector<Formula> locals;
    for (int i = 1; i <= n; ++i) {
        std::vector<Formula> lits;
        for (VertexMask m = g.in_mask(i); m; m &= m - 1) lits.push_back(Formula::variable(std::countr_zero(m) + 1));
        locals.push_back(Formula::conjunction(std::move(lits)));
    }
    return BooleanNetwork::from_formulas(n, std::move(locals));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int t = 1; t <= k; ++t) c = c * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    return c;
}

std::uint64_t colex_rank(std::uint64_t y) {
    std::uint64_t rank = 0;
    int t = 0;
    for (; y; y &= y - 1, ++t) rank += binomial(std::countr_zero(y), t + 1);
    return rank;
}

namespace {

struct CoverSearch {
    int n;
    int a;
    std::vector<VertexMask> subsets; // all a-subsets, increasing bitmask order
    std::vector<bool> used;
    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> current;

    // Partition k holds the k-th subset containing 1, which breaks the
    // symmetry between partitions.
    bool fill(std::size_t k, const std::vector<std::size_t>& with_one, VertexMask covered) {
        if (covered == all_vertices(n)) {
            partitions.push_back(current);
            current.clear();
            if (next_partition(k + 1, with_one)) return true;
            current = partitions.back();
            partitions.pop_back();
            return false;
        }
        const int v = std::countr_one(covered) + 1;
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            if (used[s] || !(subsets[s] & vertex_bit(v)) || (subsets[s] & covered)) continue;
            used[s] = true;
            current.push_back(s);
            if (fill(k, with_one, covered | subsets[s])) return true;
            current.pop_back();
            used[s] = false;
        }
        return false;
    }

    bool next_partition(std::size_t k, const std::vector<std::size_t>& with_one) {
        if (k == with_one.size()) return true;
        const std::size_t s = with_one[k];
        used[s] = true;
        current = {s};
        if (fill(k, with_one, subsets[s])) return true;
        used[s] = false;
        current.clear();
        return false;
    }
};

} // namespace

std::vector<Partition> baranyai_partitions(int n, int a, const Caps& caps) {
    if (n < 1 || a < 1 || a > n || n % a != 0) throw invalid_input("baranyai_partitions needs 1 <= a, a | n");
    if (n > 63) throw invalid_input("baranyai_partitions needs n <= 63");
    const std::uint64_t count = binomial(n, a);
    if (count > static_cast<std::uint64_t>(caps.design_subsets))
        throw cap_exceeded("design_subsets", caps.design_subsets, static_cast<long long>(count));
    CoverSearch s{n, a, {}, {}, {}, {}};
    for (VertexMask m = (VertexMask{1} << a) - 1; m <= all_vertices(n); ) {
        s.subsets.push_back(m);
        if (m == (((VertexMask{1} << a) - 1) << (n - a))) break;
        const VertexMask t = m | (m - 1);
        m = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(m) + 1));
    }
    std::sort(s.subsets.begin(), s.subsets.end(), [](VertexMask x, VertexMask y) {
        // lexicographic order of the sorted element lists
        while (x && y && std::countr_zero(x) == std::countr_zero(y)) {
            x &= x - 1;
            y &= y - 1;
        }
        return std::countr_zero(x) < std::countr_zero(y);
    });
    s.used.assign(s.subsets.size(), false);
    std::vector<std::size_t> with_one;
    for (std::size_t k = 0; k < s.subsets.size(); ++k)
        if (s.subsets[k] & 1U) with_one.push_back(k);
    if (!s.next_partition(0, with_one)) throw error("exact cover search found no resolution");

    std::vector<Partition> out;
    for (const auto& p : s.partitions) {
        Partition part;
        for (const std::size_t k : p) {
            std::vector<int> block;
            for (VertexMask m = s.subsets[k]; m; m &= m - 1) block.push_back(std::countr_zero(m) + 1);
            part.push_back(std::move(block));
        }
        std::sort(part.begin(), part.end());
        out.push_back(std::move(part));
    }
    return out;
}

PermutationFamily hard_permutation_family(int n, int a, int b, const Caps& caps) {
    if (a < 1 || b < 1 || n != a * b) throw invalid_input("hard_permutation_family needs n = a*b");
    const auto parts = baranyai_partitions(n, a, caps);
    std::vector<int> sigma(static_cast<std::size_t>(a));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> sigmas;
    do sigmas.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));

    PermutationFamily fam{n, {}};
    for (const auto& part : parts)
        for (int j = 0; j < b; ++j)
            for (const auto& sg : sigmas) {
                Word pi;
                for (int l = 0; l < b; ++l) {
                    const auto& block = part[static_cast<std::size_t>((j + l) % b)];
                    for (const int t : sg) pi.push_back(block[static_cast<std::size_t>(t)]);
                }
                fam.perms.push_back(std::move(pi));
            }
    return fam;
}

namespace {

struct ControlLayer {
    int m;
    int r;
    int half;
    std::uint64_t hooks;

    std::uint64_t controls(State x) const { return x.bits() >> m; }
};

void check_packing(int m, int r, std::size_t hooks) {
    if (hooks == 0) throw invalid_input("packing needs at least one hook");
    if (r < 0 || m + r > kMaxComponents) throw invalid_input("packing size out of range");
    if (hooks > binomial(r, r / 2))
        throw invalid_input("too many hooks: " + std::to_string(hooks) + " > C(" + std::to_string(r) + "," +
                            std::to_string(r / 2) + ")");
}

} // namespace

BooleanNetwork packing_monotone_network(std::span<const BooleanNetwork> hooks, int r, const Caps& caps) {
    check_packing(hooks.empty() ? 0 : hooks.front().size(), r, hooks.size());
    const int m = hooks.front().size();
    for (const auto& h : hooks) {
        if (h.size() != m) throw invalid_input("hooks must have the same component count");
        if (!classify(h, caps).monotone) throw invalid_input("non-monotone hook");
    }
    const ControlLayer layer{m, r, r / 2, hooks.size()};
    std::vector<BooleanNetwork> hs(hooks.begin(), hooks.end());
    return BooleanNetwork::from_map(m + r, [layer, hs](State x) {
        const std::uint64_t y = layer.controls(x);
        const int w = std::popcount(y);
        const std::uint64_t xmask = (std::uint64_t{1} << layer.m) - 1;
        std::uint64_t low = 0;
        if (w > layer.half) low = xmask;
        else if (w == layer.half)
            low = hs[static_cast<std::size_t>(colex_rank(y) % layer.hooks)].image(State{x.bits() & xmask}).bits();
        return State{(y << layer.m) | low};
    });
}

BooleanNetwork packing_increasing_network(const PermutationFamily& perms, int r) {
    perms.validate();
    check_packing(perms.n, r, perms.perms.size());
    const int m = perms.n;
    std::vector<BooleanNetwork> hs;
    for (const auto& p : perms.perms) hs.push_back(chain_increasing_network(p));
    const ControlLayer layer{m, r, r / 2, hs.size()};
    return BooleanNetwork::from_map(m + r, [layer, hs](State x) {
        const std::uint64_t y = layer.controls(x);
        const std::uint64_t xmask = (std::uint64_t{1} << layer.m) - 1;
        std::uint64_t low = xmask;
        if (std::popcount(y) == layer.half)
            low = hs[static_cast<std::size_t>(colex_rank(y) % layer.hooks)].image(State{x.bits() & xmask}).bits();
        return State{(y << layer.m) | low};
    });
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<std::uint32_t> sample_random_table(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxTableComponents) throw invalid_input("sample_random_network needs 1 <= n <= 24");
    std::mt19937_64 rng(seed);
    const std::uint32_t mask = static_cast<std::uint32_t>(State::ones(n).bits());
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (auto& y : t) y = static_cast<std::uint32_t>(rng()) & mask;
    return t;
}

BooleanNetwork sample_random_network(int n, std::uint64_t seed) {
    return BooleanNetwork::from_table(n, sample_random_table(n, seed));
}

namespace {

std::vector<std::uint32_t> enumerate_monotone(int d) {
    if (d == 5) {
        // f(x, x5) = x5 ? g1 : g0 is monotone iff g0 <= g1, both monotone.
        const auto& lower = monotone_functions(4);
        std::vector<std::uint32_t> out;
        for (const auto g0 : lower)
            for (const auto g1 : lower)
                if ((g0 & ~g1) == 0) out.push_back(g0 | (g1 << 16));
        std::sort(out.begin(), out.end());
        return out;
    }
    const std::uint32_t points = 1U << d;
    std::vector<std::uint32_t> out;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << points); ++f) {
        bool ok = true;
        for (std::uint32_t x = 0; x < points && ok; ++x)
            for (int j = 0; j < d && ok; ++j)
                if (!((x >> j) & 1U) && ((f >> x) & 1U) && !((f >> (x | (1U << j))) & 1U)) ok = false;
        if (ok) out.push_back(static_cast<std::uint32_t>(f));
    }
    return out;
}

} // namespace

const std::vector<std::uint32_t>& monotone_functions(int d) {
    if (d < 0 || d > 5) throw invalid_input("monotone_functions supports 0 <= d <= 5");
    static std::once_flag once[6];
    static std::vector<std::uint32_t> lists[6];
    std::call_once(once[d], [d] { lists[d] = enumerate_monotone(d); });
    return lists[d];
}

std::vector<std::uint32_t> random_monotone_table(const SignedDigraph& g, std::mt19937_64& rng) {
    const int n = g.size();
    if (n > kMaxTableComponents) throw invalid_input("random_monotone_network needs n <= 24");
    std::vector<std::uint32_t> t(std::size_t{1} << n, 0);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> in;
        for (VertexMask m = g.in_mask(i); m; m &= m - 1) in.push_back(std::countr_zero(m));
        if (in.size() > 5) throw invalid_input("random_monotone_network needs in-degree <= 5");
        const auto& fs = monotone_functions(static_cast<int>(in.size()));
        const std::uint32_t fn = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            std::uint32_t idx = 0;
            for (std::size_t k = 0; k < in.size(); ++k) idx |= ((x >> in[k]) & 1U) << k;
            t[x] |= ((fn >> idx) & 1U) << (i - 1);
        }
    }
    return t;
}

BooleanNetwork random_monotone_network(const SignedDigraph& g, std::mt19937_64& rng) {
    return BooleanNetwork::from_table(g.size(), random_monotone_table(g, rng));
}

} // namespace fixword
