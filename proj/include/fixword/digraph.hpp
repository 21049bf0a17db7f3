#ifndef FIXWORD_DIGRAPH_HPP
#define FIXWORD_DIGRAPH_HPP

#include "fixword/caps.hpp"
#include "fixword/signed_digraph.hpp"
#include "fixword/word.hpp"

#include <optional>
#include <vector>

namespace fixword {

struct StrongComponent {
    VertexMask vertices = 0;
    // No edge enters the component from outside.
    bool initial = false;
};

// Components in a topological order of the condensation; among the
// components available at each step the one holding the lowest vertex id
// comes first.
std::vector<StrongComponent> strong_components(const SignedDigraph& g);
bool is_strong(const SignedDigraph& g);

// Loops count as cycles.
bool is_acyclic(const SignedDigraph& g);
// Only cycles of length >= 2 count.
bool has_only_loop_cycles(const SignedDigraph& g, VertexMask within);

// Kahn's algorithm taking the lowest available vertex; throws not_acyclic.
Word topological_sort(const SignedDigraph& g);

// parent[v-1] is the next vertex on the way to the root (in-tree) or the
// previous vertex on the way from the root (out-tree); 0 for the root.
// Every tree edge is an edge of the graph it was built from.
struct SpanningTree {
    int root = 0;
    std::vector<int> parent;

    int size() const { return static_cast<int>(parent.size()); }
    // Vertices that are nobody's parent.
    VertexMask leaves() const;
    int leaf_count() const;
};

// Built from BFS distance layers toward (in-tree) or away from (out-tree)
// the root; within a layer each vertex attaches to its lowest-id neighbour in
// the previous layer. Throws not_strong.
SpanningTree spanning_in_tree(const SignedDigraph& g, int root);
SpanningTree spanning_out_tree(const SignedDigraph& g, int root);

struct MaxLeafTree {
    SpanningTree tree;
    int leaves = 0;
    bool exact = false;
};

// Exact maximum-leaf spanning in-tree for n <= caps.max_leaf_exact; above
// the cap, the BFS in-tree rooted at a vertex of maximum in-degree with
// exact = false. Throws not_strong.
MaxLeafTree max_leaf_in_tree(const SignedDigraph& g, const Caps& caps = default_caps());

struct Transversal {
    int size = 0;
    VertexMask witness = 0;
};

// Smallest vertex set whose deletion leaves an acyclic graph (loops are cycles).
Transversal transversal_number(const SignedDigraph& g, const Caps& caps = default_caps());
// Smallest I such that every cycle of G minus I is a loop. Among minimum
// sets the one with the smallest bitmask is returned.
Transversal one_transversal_number(const SignedDigraph& g, const Caps& caps = default_caps());

struct CycleWithLoops {
    VertexMask loops = 0;
    // Largest distance along the cycle from a loop vertex to the next loop
    // vertex; n when there is at most one loop.
    int d = 0;
    // c_1 ... c_n with c_k -> c_{k+1} and c_n -> c_1; c_1 is the lowest vertex.
    std::vector<int> order;
};

// Recognizes a directed n-cycle (n >= 2) plus any set of loops.
std::optional<CycleWithLoops> cycle_with_loops(const SignedDigraph& g);
// Directed n-cycle with a loop at every vertex.
bool is_iso_cn_loop(const SignedDigraph& g);

// G[mask] on vertices 1..|mask|, together with the original id of each new vertex.
struct InducedSubgraph {
    SignedDigraph graph;
    std::vector<int> original;
};
InducedSubgraph induced_subgraph(const SignedDigraph& g, VertexMask mask);

// C_n (1 -> 2 -> ... -> n -> 1), optionally with a loop at every vertex.
SignedDigraph cycle_graph(int n, bool loops);
SignedDigraph complete_graph(int n, bool loops);

} // namespace fixword

#endif
