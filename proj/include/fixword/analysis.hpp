#ifndef FIXWORD_ANALYSIS_HPP
#define FIXWORD_ANALYSIS_HPP

#include "fixword/caps.hpp"
#include "fixword/network.hpp"
#include "fixword/signed_digraph.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace fixword {

// Edge j->i iff f_i depends on x_j. Sign +1 when f_i(x) <= f_i(x+e_j) for
// every x with x_j = 0, -1 when the reverse holds, 0 otherwise.
SignedDigraph interaction_graph(const BooleanNetwork& f, const Caps& caps = default_caps());
SignedDigraph interaction_graph(int n, std::span<const std::uint32_t> images);

// unbalanced: some cycle avoiding zero-sign edges is negative.
// indefinite: no negative cycle of that kind, but a zero-sign edge lies on a cycle.
enum class Balance { balanced, unbalanced, indefinite };

Balance balance(const SignedDigraph& g);

struct Classification {
    bool monotone = false;
    bool increasing = false;
    bool decreasing = false;
    bool acyclic = false;
    bool conjunctive = false;
    bool path = false;
    bool balanced = false;
    Balance balance = Balance::unbalanced;
};

Classification classify(const BooleanNetwork& f, const Caps& caps = default_caps());

bool is_monotone(int n, std::span<const std::uint32_t> images);

// f'(x) = f(x+z) + z. The 1-switch is the dual.
BooleanNetwork switch_network(const BooleanNetwork& f, State z);
BooleanNetwork dual(const BooleanNetwork& f);

struct SwitchWitness {
    enum class Failure { none, not_strong, not_balanced };
    std::optional<State> z;
    Failure failure = Failure::none;
};

// z with switch(f, z) monotone, found by propagating edge signs from
// vertex 1 (label +1) over the underlying undirected graph.
SwitchWitness monotone_switch_witness(const BooleanNetwork& f, const Caps& caps = default_caps());

} // namespace fixword

#endif
