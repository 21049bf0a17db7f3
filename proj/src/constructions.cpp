#include "fixword/digraph.hpp"
#include "fixword/error.hpp"
#include "fixword/families.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace fixword {

Word monotone_universal_word(int n, const Caps& caps) {
    if (n < 1) throw invalid_input("monotone_universal_word needs n >= 1");
    Word w{1};
    for (int k = 1; k < n; ++k) {
        w.push_back(k + 1);
        w += best_complete_word(k, caps);
    }
    return w;
}

Word balanced_universal_word(int n, const Caps& caps) {
    if (n < 1) throw invalid_input("balanced_universal_word needs n >= 1");
    const Word s = Word::range(1, n);
    const Word block = s + s + monotone_universal_word(n, caps);
    return block.repeated(static_cast<std::size_t>(n / 3)) + s.repeated(static_cast<std::size_t>(n % 3));
}

namespace {

std::vector<int> sorted_vertices(VertexMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

} // namespace

Word graph_monotone_word(const SignedDigraph& g, std::optional<VertexMask> witness, const Caps& caps) {
    const int n = g.size();
    const VertexMask all = all_vertices(n);
    VertexMask top = 0;
    if (witness) {
        if (*witness & ~all) throw invalid_input("witness names vertices outside the graph");
        if (!has_only_loop_cycles(g, all & ~*witness)) throw invalid_input("witness is not a 1-feedback vertex set");
        top = *witness;
    } else {
        top = one_transversal_number(g, caps).witness;
    }
    const int alpha = n - std::popcount(top);

    // Relabel: the rest topologically sorted (loops ignored) as 1..alpha,
    // the witness as alpha+1..n.
    const auto rest = induced_subgraph(g, all & ~top);
    std::vector<int> new_label(static_cast<std::size_t>(n), 0);
    std::vector<int> original(static_cast<std::size_t>(n) + 1, 0);
    int next = 1;
    for (const Letter v : topological_sort(rest.graph.without_loops())) {
        const int orig = rest.original[static_cast<std::size_t>(v - 1)];
        new_label[static_cast<std::size_t>(orig - 1)] = next;
        original[static_cast<std::size_t>(next)] = orig;
        ++next;
    }
    for (const int v : sorted_vertices(top)) {
        new_label[static_cast<std::size_t>(v - 1)] = next;
        original[static_cast<std::size_t>(next)] = v;
        ++next;
    }
    const SignedDigraph h = g.relabeled(new_label);
    const VertexMask low = all_vertices(alpha);

    Word w;
    for (int i = 1; i <= n; ++i) {
        w.push_back(original[static_cast<std::size_t>(i)]);
        const VertexMask reach = reachable_from(h, i, all_vertices(i)) & ~vertex_bit(i);
        if (!reach) continue;
        // Enumerations of A u B in which consecutive A-letters increase.
        const auto a = sorted_vertices(reach & low);
        const auto b = sorted_vertices(reach & ~low);
        Word block;
        for (const int v : a) block.push_back(original[static_cast<std::size_t>(v)]);
        Word tail = block;
        for (const int v : b) block.push_back(original[static_cast<std::size_t>(v)]);
        w += block.repeated(b.size());
        w += tail;
    }
    return w;
}

namespace {

// Kahn over an in-tree starting from all leaves (FIFO): leaves come first
// and the root last.
Word in_tree_order(const SpanningTree& t) {
    const int n = t.size();
    std::vector<int> children(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        if (const int p = t.parent[static_cast<std::size_t>(v - 1)]) ++children[static_cast<std::size_t>(p)];
    std::deque<int> queue;
    for (int v = 1; v <= n; ++v)
        if (children[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    Word order;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        if (const int p = t.parent[static_cast<std::size_t>(v - 1)])
            if (--children[static_cast<std::size_t>(p)] == 0) queue.push_back(p);
    }
    return order;
}

// BFS over an out-tree from its root.
Word out_tree_order(const SpanningTree& t) {
    const int n = t.size();
    Word order{t.root};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int v = 1; v <= n; ++v)
            if (t.parent[static_cast<std::size_t>(v - 1)] == order[head]) order.push_back(v);
    return order;
}

Word relabel(const Word& w, const std::vector<int>& original) {
    Word out;
    for (const Letter a : w) out.push_back(original[static_cast<std::size_t>(a - 1)]);
    return out;
}

// i_{skip+1} ... i_m j_2 ... j_m for the in-tree `in` of g and the BFS
// out-tree of g with the same root.
Word tree_word(const SignedDigraph& g, const SpanningTree& in, std::size_t skip) {
    const Word i = in_tree_order(in);
    const Word j = out_tree_order(spanning_out_tree(g, in.root));
    return i.factor(skip + 1, i.size()) + j.factor(2, j.size());
}

// Word fixing the conjunctive network on a strong graph with m >= 2 vertices.
Word strong_word(const SignedDigraph& g, const Caps& caps) {
    const int m = g.size();
    if (const auto c = cycle_with_loops(g)) {
        const auto& order = c->order;
        if (std::popcount(c->loops) <= 1) {
            // Rotate so that the loop vertex, if any, comes last.
            std::vector<int> rot = order;
            if (c->loops) {
                const int l = std::countr_zero(c->loops) + 1;
                const auto it = std::find(rot.begin(), rot.end(), l);
                std::rotate(rot.begin(), it + 1, rot.end());
            }
            return Word(std::vector<Letter>(rot.begin(), rot.end() - 1));
        }
        // Rotate so that c_m is a loop vertex whose next loop vertex is d away.
        std::size_t start = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (!(c->loops & vertex_bit(order[k]))) continue;
            int dist = 1;
            while (!(c->loops & vertex_bit(order[(k + static_cast<std::size_t>(dist)) % order.size()]))) ++dist;
            if (dist == c->d) {
                start = (k + 1) % order.size();
                break;
            }
        }
        std::vector<int> cyc(order.begin() + static_cast<std::ptrdiff_t>(start), order.end());
        cyc.insert(cyc.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(start));
        const auto d = static_cast<std::size_t>(c->d);
        const auto mm = static_cast<std::size_t>(m);
        const Word cw(std::vector<Letter>(cyc.begin(), cyc.end()));
        // c_{d+1..m}, c_{1..d}, c_{d+1..m-1}
        return cw.factor(d + 1, mm) + cw.factor(1, d) + cw.factor(d + 1, mm - 1);
    }
    const MaxLeafTree t = max_leaf_in_tree(g, caps);
    return tree_word(g, t.tree, static_cast<std::size_t>(t.leaves));
}

Word component_word(const SignedDigraph& g, VertexMask comp, bool initial, const Caps& caps) {
    const auto sub = induced_subgraph(g, comp);
    const int m = sub.graph.size();
    if (m == 1) {
        if (initial && sub.graph.has_loop(1)) return {};
        return Word{sub.original.front()};
    }
    if (initial) return relabel(strong_word(sub.graph, caps), sub.original);
    return relabel(tree_word(sub.graph, spanning_in_tree(sub.graph, 1), 0), sub.original);
}

} // namespace

Word conjunctive_fixing_word(const SignedDigraph& g, const Caps& caps) {
    const int n = g.size();
    const auto comps = strong_components(g);
    if (n >= 3 && comps.size() == 2) {
        const auto& first = comps.front();
        if (first.initial && std::popcount(first.vertices) == 1 && !comps.back().initial) {
            const int v = std::countr_zero(first.vertices) + 1;
            if (!g.has_loop(v)) {
                // One loop-free source feeding one strong remainder.
                Word w{v};
                const auto sub = induced_subgraph(g, comps.back().vertices);
                return w + relabel(strong_word(sub.graph, caps), sub.original);
            }
        }
    }
    Word w;
    for (const auto& c : comps) w += component_word(g, c.vertices, c.initial, caps);
    return w;
}

} // namespace fixword
