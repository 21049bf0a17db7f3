#include "fixword/signed_digraph.hpp"

#include "fixword/error.hpp"

#include <bit>
#include <string>

namespace fixword {

namespace {

void check_vertex(int n, int v) {
    if (v < 1 || v > n)
        throw invalid_input("vertex " + std::to_string(v) + " outside [1," + std::to_string(n) +
                            "]");
}

} // namespace

SignedDigraph::SignedDigraph(int n)
    : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0),
      sign_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 63) throw invalid_input("graph size must be in [0,63]");
}

SignedDigraph SignedDigraph::from_code(int n, std::uint64_t code) {
    if (n * n > 64) throw invalid_input("from_code needs n*n <= 64");
    SignedDigraph g(n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if ((code >> ((j - 1) * n + (i - 1))) & 1U) g.add_edge(j, i);
    return g;
}

std::uint64_t SignedDigraph::code() const {
    if (n_ * n_ > 64) throw invalid_input("code needs n*n <= 64");
    std::uint64_t c = 0;
    for (int j = 1; j <= n_; ++j)
        c |= static_cast<std::uint64_t>(out_mask(j)) << ((j - 1) * n_);
    return c;
}

void SignedDigraph::add_edge(int source, int target, Sign sign) {
    check_vertex(n_, source);
    check_vertex(n_, target);
    if (has_edge(source, target))
        throw invalid_input("duplicate edge " + std::to_string(source) + " -> " +
                            std::to_string(target));
    out_[static_cast<std::size_t>(source - 1)] |= vertex_bit(target);
    in_[static_cast<std::size_t>(target - 1)] |= vertex_bit(source);
    sign_[static_cast<std::size_t>((source - 1) * n_ + (target - 1))] = static_cast<std::int8_t>(sign);
}

void SignedDigraph::set_sign(int source, int target, Sign sign) {
    check_vertex(n_, source);
    check_vertex(n_, target);
    if (!has_edge(source, target)) throw invalid_input("set_sign on a missing edge");
    sign_[static_cast<std::size_t>((source - 1) * n_ + (target - 1))] = static_cast<std::int8_t>(sign);
}

Sign SignedDigraph::sign(int source, int target) const {
    return static_cast<Sign>(sign_[static_cast<std::size_t>((source - 1) * n_ + (target - 1))]);
}

int SignedDigraph::in_degree(int v) const { return std::popcount(in_mask(v)); }
int SignedDigraph::out_degree(int v) const { return std::popcount(out_mask(v)); }

int SignedDigraph::edge_count() const {
    int c = 0;
    for (const auto m : out_) c += std::popcount(m);
    return c;
}

std::vector<Edge> SignedDigraph::edges() const {
    std::vector<Edge> e;
    for (int j = 1; j <= n_; ++j)
        for (int i = 1; i <= n_; ++i)
            if (has_edge(j, i)) e.push_back({j, i, sign(j, i)});
    return e;
}

SignedDigraph SignedDigraph::restricted_to(VertexMask keep) const {
    SignedDigraph g(n_);
    for (const auto& e : edges())
        if ((keep & vertex_bit(e.source)) && (keep & vertex_bit(e.target)))
            g.add_edge(e.source, e.target, e.sign);
    return g;
}

SignedDigraph SignedDigraph::reversed() const {
    SignedDigraph g(n_);
    for (const auto& e : edges()) g.add_edge(e.target, e.source, e.sign);
    return g;
}

SignedDigraph SignedDigraph::without_loops() const {
    SignedDigraph g(n_);
    for (const auto& e : edges())
        if (e.source != e.target) g.add_edge(e.source, e.target, e.sign);
    return g;
}

SignedDigraph SignedDigraph::relabeled(std::span<const int> new_label) const {
    if (static_cast<int>(new_label.size()) != n_) throw invalid_input("relabel size mismatch");
    VertexMask seen = 0;
    for (const int v : new_label) {
        check_vertex(n_, v);
        seen |= vertex_bit(v);
    }
    if (seen != all_vertices(n_)) throw invalid_input("relabel is not a permutation");
    SignedDigraph g(n_);
    for (const auto& e : edges())
        g.add_edge(new_label[static_cast<std::size_t>(e.source - 1)],
                   new_label[static_cast<std::size_t>(e.target - 1)], e.sign);
    return g;
}

bool SignedDigraph::is_subgraph_of(const SignedDigraph& other) const {
    if (n_ != other.n_) return false;
    for (std::size_t k = 0; k < out_.size(); ++k)
        if (out_[k] & ~other.out_[k]) return false;
    return true;
}

VertexMask reachable_from(const SignedDigraph& g, int from, VertexMask within) {
    VertexMask seen = vertex_bit(from);
    VertexMask frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m; m &= m - 1) {
            const int v = std::countr_zero(m) + 1;
            next |= g.out_mask(v) & within;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

} // namespace fixword
