#ifndef FIXWORD_FAMILIES_HPP
#define FIXWORD_FAMILIES_HPP

#include "fixword/caps.hpp"
#include "fixword/network.hpp"
#include "fixword/signed_digraph.hpp"
#include "fixword/word.hpp"
#include "fixword/words.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace fixword {

// f_{p1} = 1 and f_{pk} = x_{p(k-1)}; formula backed.
BooleanNetwork path_network(const Word& perm);

// Walks the reflected Gray code x^1, ..., x^{2^n}: f(x^k) = x^{k+1} and the
// last code word is fixed. Gray bit b is component n-b, so for n = 2 the
// walk is 00, 01, 11, 10.
BooleanNetwork gray_code_network(int n, const Caps& caps = default_caps());
// The components flipped along the walk; the unique shortest fixing word.
Word gray_code_word(int n);

// With y^0 = 0 and y^k = y^{k-1} + e_{pk}: f(y^k) = y^{k+1} for 0 <= k < n,
// f(x) = x elsewhere. Increasing.
BooleanNetwork chain_increasing_network(const Word& perm);

// f_i = AND of the in-neighbours of i, constant 1 without any; formula backed.
BooleanNetwork conjunctive_network(const SignedDigraph& g);

// A partition of [n] into blocks; each block sorted, blocks sorted by their
// smallest element.
using Partition = std::vector<std::vector<int>>;

// C(n,a)*a/n partitions of [n] into a-sets covering every a-subset exactly
// once, by exact-cover backtracking. Requires a | n and C(n,a) <= caps.design_subsets.
std::vector<Partition> baranyai_partitions(int n, int a, const Caps& caps = default_caps());

// pi^{i,j,k} = s^k(S^{i,j}_0) ... s^k(S^{i,j}_{b-1}) with S^{i,j}_l = A^i_{(j+l) mod b}
// and s^k the permutations of [a] in lexicographic order; a! C(n,a) members,
// ordered by (i, j, k).
PermutationFamily hard_permutation_family(int n, int a, int b, const Caps& caps = default_caps());

// Components 1..m carry the hooks, m+1..m+r are controls that never change.
// For control part y: weight above floor(r/2) gives (1, y), weight below
// gives (0, y), and the middle layer gives (hook_phi(y)(x), y) where phi(y)
// is the colex rank of y among the middle layer, modulo the hook count.
BooleanNetwork packing_monotone_network(std::span<const BooleanNetwork> hooks, int r,
                                        const Caps& caps = default_caps());
// As above with chain_increasing_network hooks, and (1, y) off the middle layer.
BooleanNetwork packing_increasing_network(const PermutationFamily& perms, int r);
// Colex rank among the weight-k states of {0,1}^r.
std::uint64_t colex_rank(std::uint64_t y);
std::uint64_t binomial(int n, int k);

// W^1 = 1, W^{k+1} = W^k, k+1, omega^k with omega^k = best_complete_word(k).
Word monotone_universal_word(int n, const Caps& caps = default_caps());
// q.(s s W^n), r.s with s = 12...n and n = 3q + r.
Word balanced_universal_word(int n, const Caps& caps = default_caps());

// Word fixing every monotone network whose interaction graph is contained in
// G. `witness` is a 1-feedback vertex set; the minimum one is computed when
// absent.
Word graph_monotone_word(const SignedDigraph& g, std::optional<VertexMask> witness = std::nullopt,
                         const Caps& caps = default_caps());

// Word of length at most max(1, 2n-2) fixing the conjunctive network on G.
Word conjunctive_fixing_word(const SignedDigraph& g, const Caps& caps = default_caps());

std::uint64_t splitmix64(std::uint64_t x);

// Every f_i(x) an independent fair coin drawn from a generator seeded with
// `seed`; truth-table backed.
BooleanNetwork sample_random_network(int n, std::uint64_t seed);
std::vector<std::uint32_t> sample_random_table(int n, std::uint64_t seed);

// Truth tables of all monotone Boolean functions of d <= 5 variables (bit x
// of an entry is the value at x), sorted increasingly.
const std::vector<std::uint32_t>& monotone_functions(int d);

// Each f_i drawn uniformly among monotone functions of the in-neighbours of i
// (in-degree <= 5), so the interaction graph is contained in G.
std::vector<std::uint32_t> random_monotone_table(const SignedDigraph& g, std::mt19937_64& rng);
BooleanNetwork random_monotone_network(const SignedDigraph& g, std::mt19937_64& rng);

} // namespace fixword

#endif
