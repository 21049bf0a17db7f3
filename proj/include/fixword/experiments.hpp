#ifndef FIXWORD_EXPERIMENTS_HPP
#define FIXWORD_EXPERIMENTS_HPP

#include "fixword/caps.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fixword {

// Sample k uses the table drawn from seed splitmix64(seed + k), so results
// do not depend on the worker count.
struct FixableFraction {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t fixable = 0;
    std::uint64_t with_fixed_point = 0;
    double fraction = 0;
    // 1 - (1 - 2^-n)^(2^n): probability of at least one fixed point.
    double reference = 0;
};
FixableFraction fixable_fraction(int n, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);
std::string to_csv(const FixableFraction& r);

// Every graph on [n] (n <= 4): the constructed word fixes the conjunctive
// network within 2n-2 letters, and the exact fixing length reaches 2n-2
// exactly on the graphs isomorphic to C_n with all loops.
struct ConjunctiveSweep {
    int n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t word_failures = 0;      // word does not fix or is too long
    std::size_t max_word_length = 0;
    std::size_t max_lambda = 0;
    std::uint64_t extremal = 0;           // graphs with lambda = 2n-2
    std::uint64_t extremal_cn_loop = 0;   // ... that are isomorphic to C_n with loops
    std::uint64_t cn_loop = 0;            // graphs isomorphic to C_n with loops
    bool ok() const;
};
ConjunctiveSweep conjunctive_exhaustive(int n, unsigned workers = 1, const Caps& caps = default_caps());
std::string to_csv(const ConjunctiveSweep& r);

// W^n against every monotone n-network (n <= 3).
struct MonotoneSweep {
    int n = 0;
    std::size_t word_length = 0;
    std::uint64_t networks = 0;
    std::uint64_t failures = 0;
};
MonotoneSweep monotone_exhaustive(int n, unsigned workers = 1, const Caps& caps = default_caps());
std::string to_csv(const MonotoneSweep& r);

struct LambdaRow {
    int n = 0;
    long long exact = -1;         // shortest n-complete length, -1 beyond the search cap
    std::size_t simple = 0;
    long long improved = -1;      // -1 beyond the improved cap
    std::size_t universal = 0;    // |W^n|
    double universal_bound = 0;   // n^3/3 - 3n^2/2 + 37n/6
    std::size_t balanced = 0;     // |tilde W^n|
};
std::vector<LambdaRow> lambda_table(int nmax, const Caps& caps = default_caps());
std::string to_csv(const std::vector<LambdaRow>& rows);

} // namespace fixword

#endif
