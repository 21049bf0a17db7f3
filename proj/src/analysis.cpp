#include "fixword/analysis.hpp"

#include "fixword/digraph.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"

#include <bit>
#include <deque>

namespace fixword {

SignedDigraph interaction_graph(int n, std::span<const std::uint32_t> images) {
    SignedDigraph g(n);
    for (int j = 1; j <= n; ++j) {
        const std::uint32_t mj = 1U << (j - 1);
        std::uint32_t up = 0;
        std::uint32_t down = 0;
        for (std::uint32_t x = 0; x < images.size(); ++x) {
            if (x & mj) continue;
            const std::uint32_t a = images[x];
            const std::uint32_t b = images[x | mj];
            up |= ~a & b;
            down |= a & ~b;
        }
        for (int i = 1; i <= n; ++i) {
            const bool u = (up >> (i - 1)) & 1U;
            const bool d = (down >> (i - 1)) & 1U;
            if (u && d) g.add_edge(j, i, Sign::zero);
            else if (u) g.add_edge(j, i, Sign::positive);
            else if (d) g.add_edge(j, i, Sign::negative);
        }
    }
    return g;
}

SignedDigraph interaction_graph(const BooleanNetwork& f, const Caps& caps) {
    check_dense(f.size(), caps);
    if (!f.table().empty()) return interaction_graph(f.size(), f.table());
    const auto t = f.images();
    return interaction_graph(f.size(), t);
}

namespace {

// Consistent +-1 labels inside each strong component of the nonzero-sign
// subgraph, so that label(target) = label(source) * sign on every edge.
bool sign_consistent(const SignedDigraph& g) {
    const int n = g.size();
    SignedDigraph nonzero(n);
    for (const auto& e : g.edges())
        if (e.sign != Sign::zero) nonzero.add_edge(e.source, e.target, e.sign);
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    for (const auto& c : strong_components(nonzero)) {
        const int start = std::countr_zero(c.vertices) + 1;
        label[static_cast<std::size_t>(start - 1)] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            const int lv = label[static_cast<std::size_t>(v - 1)];
            for (int u = 1; u <= n; ++u) {
                if (!(c.vertices & vertex_bit(u))) continue;
                int want = 0;
                if (nonzero.has_edge(v, u)) want = lv * static_cast<int>(nonzero.sign(v, u));
                else if (nonzero.has_edge(u, v)) want = lv * static_cast<int>(nonzero.sign(u, v));
                else continue;
                int& lu = label[static_cast<std::size_t>(u - 1)];
                if (lu == 0) {
                    lu = want;
                    queue.push_back(u);
                }
            }
        }
        for (const auto& e : nonzero.edges()) {
            if (!(c.vertices & vertex_bit(e.source)) || !(c.vertices & vertex_bit(e.target))) continue;
            if (label[static_cast<std::size_t>(e.target - 1)] !=
                label[static_cast<std::size_t>(e.source - 1)] * static_cast<int>(e.sign))
                return false;
        }
    }
    return true;
}

} // namespace

Balance balance(const SignedDigraph& g) {
    if (!sign_consistent(g)) return Balance::unbalanced;
    for (const auto& c : strong_components(g))
        for (const auto& e : g.edges())
            if (e.sign == Sign::zero && (c.vertices & vertex_bit(e.source)) &&
                (c.vertices & vertex_bit(e.target)))
                return Balance::indefinite;
    return Balance::balanced;
}

bool is_monotone(int n, std::span<const std::uint32_t> images) {
    for (int j = 1; j <= n; ++j) {
        const std::uint32_t mj = 1U << (j - 1);
        for (std::uint32_t x = 0; x < images.size(); ++x)
            if (!(x & mj) && (images[x] & ~images[x | mj])) return false;
    }
    return true;
}

Classification classify(const BooleanNetwork& f, const Caps& caps) {
    const int n = f.size();
    check_dense(n, caps);
    const auto owned = f.table().empty() ? f.images() : std::vector<std::uint32_t>{};
    const std::span<const std::uint32_t> img = f.table().empty() ? std::span<const std::uint32_t>(owned) : f.table();
    const SignedDigraph g = interaction_graph(n, img);

    Classification c;
    c.monotone = is_monotone(n, img);
    c.increasing = true;
    c.decreasing = true;
    c.conjunctive = true;
    for (std::uint32_t x = 0; x < img.size(); ++x) {
        if (x & ~img[x]) c.increasing = false;
        if (img[x] & ~x) c.decreasing = false;
        std::uint32_t want = 0;
        for (int i = 1; i <= n; ++i) {
            const auto in = static_cast<std::uint32_t>(g.in_mask(i));
            if ((x & in) == in) want |= 1U << (i - 1);
        }
        if (want != img[x]) c.conjunctive = false;
    }
    c.acyclic = is_acyclic(g);

    // A conjunctive network on a Hamiltonian path is exactly a path network.
    // Acyclic with n-1 edges and all degrees <= 1 forces a single path.
    c.path = c.conjunctive && c.acyclic && g.edge_count() == n - 1;
    for (int v = 1; v <= n && c.path; ++v)
        if (g.in_degree(v) > 1 || g.out_degree(v) > 1) c.path = false;
    c.balance = balance(g);
    c.balanced = c.balance == Balance::balanced;
    return c;
}

BooleanNetwork switch_network(const BooleanNetwork& f, State z) {
    const int n = f.size();
    if (!f.table().empty()) {
        const auto t = f.table();
        const auto zb = static_cast<std::uint32_t>(z.bits());
        std::vector<std::uint32_t> s(t.size());
        for (std::uint32_t x = 0; x < t.size(); ++x) s[x] = t[x ^ zb] ^ zb;
        return BooleanNetwork::from_table(n, std::move(s));
    }
    return BooleanNetwork::from_map(n, [f, z](State x) { return f.image(x + z) + z; });
}

BooleanNetwork dual(const BooleanNetwork& f) { return switch_network(f, State::ones(f.size())); }

SwitchWitness monotone_switch_witness(const BooleanNetwork& f, const Caps& caps) {
    const SignedDigraph g = interaction_graph(f, caps);
    if (!is_strong(g)) return {std::nullopt, SwitchWitness::Failure::not_strong};
    const int n = g.size();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    label[0] = 1;
    std::deque<int> queue{1};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u = 1; u <= n; ++u) {
            if (label[static_cast<std::size_t>(u - 1)] != 0) continue;
            Sign s;
            if (g.has_edge(v, u)) s = g.sign(v, u);
            else if (g.has_edge(u, v)) s = g.sign(u, v);
            else continue;
            if (s == Sign::zero) return {std::nullopt, SwitchWitness::Failure::not_balanced};
            label[static_cast<std::size_t>(u - 1)] = label[static_cast<std::size_t>(v - 1)] * static_cast<int>(s);
            queue.push_back(u);
        }
    }
    State z;
    for (int i = 1; i <= n; ++i) z = z.with(i, label[static_cast<std::size_t>(i - 1)] < 0);
    const auto switched = switch_network(f, z).images();
    if (!is_monotone(n, switched)) return {std::nullopt, SwitchWitness::Failure::not_balanced};
    return {z, SwitchWitness::Failure::none};
}

} // namespace fixword
