#include "fixword/digraph.hpp"

#include "fixword/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace fixword {

namespace {

int lowest(VertexMask m) { return std::countr_zero(m) + 1; }

template <typename F>
void for_each_vertex(VertexMask m, F&& fn) {
    for (; m; m &= m - 1) fn(lowest(m));
}

std::uint64_t next_same_popcount(std::uint64_t v) {
    const std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

} // namespace

std::vector<StrongComponent> strong_components(const SignedDigraph& g) {
    const int n = g.size();
    const VertexMask all = all_vertices(n);
    std::vector<VertexMask> reach(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) reach[static_cast<std::size_t>(v - 1)] = reachable_from(g, v, all);

    std::vector<VertexMask> comps;
    VertexMask assigned = 0;
    for (int v = 1; v <= n; ++v) {
        if (assigned & vertex_bit(v)) continue;
        VertexMask c = 0;
        for_each_vertex(reach[static_cast<std::size_t>(v - 1)], [&](int u) {
            if (reach[static_cast<std::size_t>(u - 1)] & vertex_bit(v)) c |= vertex_bit(u);
        });
        comps.push_back(c);
        assigned |= c;
    }

    auto in_edges_from = [&](VertexMask c, VertexMask from) {
        VertexMask in = 0;
        for_each_vertex(c, [&](int v) { in |= g.in_mask(v); });
        return in & from & ~c;
    };

    // comps is sorted by lowest vertex id; Kahn over the condensation.
    std::vector<StrongComponent> out;
    std::vector<bool> placed(comps.size(), false);
    VertexMask unplaced_vertices = all;
    for (std::size_t step = 0; step < comps.size(); ++step) {
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (placed[k] || in_edges_from(comps[k], unplaced_vertices)) continue;
            placed[k] = true;
            unplaced_vertices &= ~comps[k];
            out.push_back({comps[k], in_edges_from(comps[k], all) == 0});
            break;
        }
    }
    return out;
}

bool is_strong(const SignedDigraph& g) {
    if (g.size() == 0) return false;
    const VertexMask all = all_vertices(g.size());
    return reachable_from(g, 1, all) == all && reachable_from(g.reversed(), 1, all) == all;
}

bool is_acyclic(const SignedDigraph& g) {
    const int n = g.size();
    VertexMask left = all_vertices(n);
    bool progress = true;
    while (left && progress) {
        progress = false;
        for_each_vertex(left, [&](int v) {
            if (!(g.in_mask(v) & left)) {
                left &= ~vertex_bit(v);
                progress = true;
            }
        });
    }
    return left == 0;
}

bool has_only_loop_cycles(const SignedDigraph& g, VertexMask within) {
    return is_acyclic(g.restricted_to(within).without_loops());
}

Word topological_sort(const SignedDigraph& g) {
    const int n = g.size();
    VertexMask left = all_vertices(n);
    Word order;
    while (left) {
        int pick = 0;
        for_each_vertex(left, [&](int v) {
            if (!pick && !(g.in_mask(v) & left)) pick = v;
        });
        if (!pick) throw not_acyclic();
        order.push_back(pick);
        left &= ~vertex_bit(pick);
    }
    return order;
}

VertexMask SpanningTree::leaves() const {
    VertexMask parents = 0;
    for (const int p : parent)
        if (p) parents |= vertex_bit(p);
    return all_vertices(size()) & ~parents;
}

int SpanningTree::leaf_count() const { return std::popcount(leaves()); }

namespace {

// Layered BFS from root; `toward` selects in-tree (edges point to the root).
SpanningTree layered_tree(const SignedDigraph& g, int root, bool toward) {
    const int n = g.size();
    if (root < 1 || root > n) throw invalid_input("root outside vertex range");
    if (!is_strong(g)) throw not_strong();
    SpanningTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(n), 0);
    VertexMask seen = vertex_bit(root);
    VertexMask layer = seen;
    while (seen != all_vertices(n)) {
        VertexMask next = 0;
        for_each_vertex(all_vertices(n) & ~seen, [&](int v) {
            const VertexMask nb = (toward ? g.out_mask(v) : g.in_mask(v)) & layer;
            if (nb) {
                t.parent[static_cast<std::size_t>(v - 1)] = lowest(nb);
                next |= vertex_bit(v);
            }
        });
        seen |= next;
        layer = next;
    }
    return t;
}

struct LeafSearch {
    const SignedDigraph& g;
    int n;
    int root = 0;
    std::vector<int> parent;
    std::vector<int> best_parent;
    int best_root = 0;
    int best = -1;

    bool creates_cycle(int v, int p) const {
        for (int u = p; u; u = parent[static_cast<std::size_t>(u - 1)])
            if (u == v) return true;
        return false;
    }

    void search(int v, VertexMask used) {
        const int bound = n - std::popcount(used);
        if (bound <= best) return;
        if (v > n) {
            best = bound;
            best_parent = parent;
            best_root = root;
            return;
        }
        if (v == root) {
            search(v + 1, used);
            return;
        }
        const VertexMask options = g.out_mask(v) & ~vertex_bit(v);
        // Reuse existing parents first: keeps the leaf count high early.
        for (int pass = 0; pass < 2; ++pass) {
            for_each_vertex(options, [&](int p) {
                const bool reused = (used & vertex_bit(p)) != 0;
                if (reused != (pass == 0) || creates_cycle(v, p)) return;
                parent[static_cast<std::size_t>(v - 1)] = p;
                search(v + 1, used | vertex_bit(p));
                parent[static_cast<std::size_t>(v - 1)] = 0;
            });
        }
    }
};

} // namespace

SpanningTree spanning_in_tree(const SignedDigraph& g, int root) { return layered_tree(g, root, true); }
SpanningTree spanning_out_tree(const SignedDigraph& g, int root) { return layered_tree(g, root, false); }

MaxLeafTree max_leaf_in_tree(const SignedDigraph& g, const Caps& caps) {
    const int n = g.size();
    if (!is_strong(g)) throw not_strong();
    if (n > caps.max_leaf_exact) {
        int root = 1;
        for (int v = 2; v <= n; ++v)
            if (g.without_loops().in_degree(v) > g.without_loops().in_degree(root)) root = v;
        MaxLeafTree r;
        r.tree = spanning_in_tree(g, root);
        r.leaves = r.tree.leaf_count();
        r.exact = false;
        return r;
    }
    if (n == 1) return {SpanningTree{1, {0}}, 1, true};
    LeafSearch s{g, n, 0, std::vector<int>(static_cast<std::size_t>(n), 0), {}, 0, -1};
    for (int r = 1; r <= n; ++r) {
        s.root = r;
        // The root is always a parent when n >= 2.
        s.search(1, vertex_bit(r));
    }
    MaxLeafTree out;
    out.tree.root = s.best_root;
    out.tree.parent = s.best_parent;
    out.leaves = out.tree.leaf_count();
    out.exact = true;
    return out;
}

namespace {

template <typename Pred>
Transversal smallest_deletion(const SignedDigraph& g, const Caps& caps, Pred ok) {
    const int n = g.size();
    if (n > caps.transversal_exact) throw cap_exceeded("transversal_exact", caps.transversal_exact, n);
    const VertexMask all = all_vertices(n);
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (ok(all)) return {0, 0};
            continue;
        }
        const std::uint64_t last = ((std::uint64_t{1} << k) - 1) << (n - k);
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1;; s = next_same_popcount(s)) {
            if (ok(all & ~s)) return {k, s};
            if (s == last) break;
        }
    }
    return {n, all};
}

} // namespace

Transversal transversal_number(const SignedDigraph& g, const Caps& caps) {
    // Deleted vertices stay as isolated, loop-free vertices.
    return smallest_deletion(g, caps, [&](VertexMask keep) { return is_acyclic(g.restricted_to(keep)); });
}

Transversal one_transversal_number(const SignedDigraph& g, const Caps& caps) {
    return smallest_deletion(g, caps, [&](VertexMask keep) { return has_only_loop_cycles(g, keep); });
}

std::optional<CycleWithLoops> cycle_with_loops(const SignedDigraph& g) {
    const int n = g.size();
    if (n < 2) return std::nullopt;
    const SignedDigraph h = g.without_loops();
    for (int v = 1; v <= n; ++v)
        if (h.in_degree(v) != 1 || h.out_degree(v) != 1) return std::nullopt;
    if (!is_strong(h)) return std::nullopt;
    CycleWithLoops c;
    for (int v = 1, k = 0; k < n; ++k) {
        c.order.push_back(v);
        v = lowest(h.out_mask(v));
    }
    for (int v = 1; v <= n; ++v)
        if (g.has_loop(v)) c.loops |= vertex_bit(v);
    if (std::popcount(c.loops) <= 1) {
        c.d = n;
        return c;
    }
    for (int k = 0; k < n; ++k) {
        if (!(c.loops & vertex_bit(c.order[static_cast<std::size_t>(k)]))) continue;
        int dist = 1;
        while (!(c.loops & vertex_bit(c.order[static_cast<std::size_t>((k + dist) % n)]))) ++dist;
        c.d = std::max(c.d, dist);
    }
    return c;
}

bool is_iso_cn_loop(const SignedDigraph& g) {
    const auto c = cycle_with_loops(g);
    return c && c->loops == all_vertices(g.size());
}

InducedSubgraph induced_subgraph(const SignedDigraph& g, VertexMask mask) {
    InducedSubgraph r;
    std::vector<int> index(static_cast<std::size_t>(g.size()) + 1, 0);
    for_each_vertex(mask, [&](int v) {
        r.original.push_back(v);
        index[static_cast<std::size_t>(v)] = static_cast<int>(r.original.size());
    });
    r.graph = SignedDigraph(static_cast<int>(r.original.size()));
    for (const auto& e : g.edges())
        if ((mask & vertex_bit(e.source)) && (mask & vertex_bit(e.target)))
            r.graph.add_edge(index[static_cast<std::size_t>(e.source)],
                             index[static_cast<std::size_t>(e.target)], e.sign);
    return r;
}

SignedDigraph cycle_graph(int n, bool loops) {
    SignedDigraph g(n);
    for (int v = 1; v <= n; ++v) {
        if (loops) g.add_edge(v, v);
        const int next = v % n + 1;
        if (next != v || !loops) {
            if (!g.has_edge(v, next)) g.add_edge(v, next);
        }
    }
    return g;
}

SignedDigraph complete_graph(int n, bool loops) {
    SignedDigraph g(n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (loops || i != j) g.add_edge(j, i);
    return g;
}

} // namespace fixword
