#ifndef FIXWORD_SIGNED_DIGRAPH_HPP
#define FIXWORD_SIGNED_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fixword {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }
constexpr VertexMask all_vertices(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

struct Edge {
    int source;
    int target;
    Sign sign;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed graph on [n] with one sign per edge; loops allowed, parallel
// edges not. Plain digraph algorithms ignore the signs.
class SignedDigraph {
public:
    SignedDigraph() = default;
    explicit SignedDigraph(int n);

    // Edge j->i present iff bit (j-1)*n + (i-1) of code is set; all signs +.
    static SignedDigraph from_code(int n, std::uint64_t code);
    std::uint64_t code() const;

    int size() const { return n_; }
    void add_edge(int source, int target, Sign sign = Sign::positive);
    void set_sign(int source, int target, Sign sign);

    bool has_edge(int source, int target) const {
        return (out_[static_cast<std::size_t>(source - 1)] >> (target - 1)) & 1U;
    }
    Sign sign(int source, int target) const;
    VertexMask out_mask(int v) const { return out_[static_cast<std::size_t>(v - 1)]; }
    VertexMask in_mask(int v) const { return in_[static_cast<std::size_t>(v - 1)]; }
    bool has_loop(int v) const { return has_edge(v, v); }
    int in_degree(int v) const;
    int out_degree(int v) const;
    int edge_count() const;

    // Sorted by (source, target).
    std::vector<Edge> edges() const;

    // Same vertex set, keeping only edges with both ends in `keep`.
    SignedDigraph restricted_to(VertexMask keep) const;
    SignedDigraph reversed() const;
    SignedDigraph without_loops() const;
    // Vertex v becomes new_label[v-1]; new_label must be a permutation of [n].
    SignedDigraph relabeled(std::span<const int> new_label) const;
    // Edge sets compared, signs ignored.
    bool is_subgraph_of(const SignedDigraph& other) const;
    bool same_edges(const SignedDigraph& other) const { return out_ == other.out_; }

    friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
    std::vector<std::int8_t> sign_; // n*n, row = source
};

// All vertices reachable from `from` by a directed path (including from itself).
VertexMask reachable_from(const SignedDigraph& g, int from, VertexMask within);

} // namespace fixword

#endif
