#include "fixword/experiments.hpp"

#include "fixword/digraph.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"
#include "fixword/families.hpp"
#include "fixword/fixing.hpp"
#include "fixword/words.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace fixword {

namespace {

// Runs body(k, slot) for k in [0, count) on `workers` threads; slot is the
// worker index, so per-slot accumulators need no locking.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned workers, Body&& body) {
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        for (std::uint64_t k = 0; k < count; ++k) body(k, 0U);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t k = t; k < count; k += workers) body(k, t);
        });
}

} // namespace

FixableFraction fixable_fraction(int n, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    if (n < 1 || n > 20) throw invalid_input("fixable_fraction needs 1 <= n <= 20");
    workers = std::max(1U, workers);
    std::vector<std::uint64_t> fixable(workers, 0);
    std::vector<std::uint64_t> with_fixed(workers, 0);
    parallel_for(samples, workers, [&](std::uint64_t k, unsigned slot) {
        const auto t = sample_random_table(n, splitmix64(seed + k));
        bool any = false;
        for (std::uint32_t x = 0; x < t.size() && !any; ++x) any = t[x] == x;
        with_fixed[slot] += any;
        fixable[slot] += any && is_fixable_table(t, n);
    });
    FixableFraction r;
    r.n = n;
    r.samples = samples;
    for (unsigned s = 0; s < workers; ++s) {
        r.fixable += fixable[s];
        r.with_fixed_point += with_fixed[s];
    }
    r.fraction = samples ? static_cast<double>(r.fixable) / static_cast<double>(samples) : 0.0;
    const double states = std::ldexp(1.0, n);
    r.reference = 1.0 - std::pow(1.0 - 1.0 / states, states);
    return r;
}

std::string to_csv(const FixableFraction& r) {
    std::ostringstream out;
    out << "n,samples,fixable,with_fixed_point,fraction,reference\n"
        << r.n << ',' << r.samples << ',' << r.fixable << ',' << r.with_fixed_point << ',' << r.fraction << ','
        << r.reference << '\n';
    return out.str();
}

bool ConjunctiveSweep::ok() const {
    return word_failures == 0 && max_lambda <= static_cast<std::size_t>(std::max(1, 2 * n - 2)) &&
           extremal == extremal_cn_loop && extremal_cn_loop == cn_loop;
}

ConjunctiveSweep conjunctive_exhaustive(int n, unsigned workers, const Caps& caps) {
    if (n < 1 || n > 4) throw invalid_input("conjunctive_exhaustive needs 1 <= n <= 4");
    workers = std::max(1U, workers);
    const std::uint64_t graphs = std::uint64_t{1} << (n * n);
    const std::size_t limit = static_cast<std::size_t>(std::max(1, 2 * n - 2));
    std::vector<ConjunctiveSweep> part(workers);
    parallel_for(graphs, workers, [&](std::uint64_t code, unsigned slot) {
        ConjunctiveSweep& p = part[slot];
        const SignedDigraph g = SignedDigraph::from_code(n, code);
        const BooleanNetwork f = conjunctive_network(g);
        const Word w = conjunctive_fixing_word(g, caps);
        if (w.size() > limit || !fixes_table(f.table(), n, w.letters())) ++p.word_failures;
        p.max_word_length = std::max(p.max_word_length, w.size());
        const std::size_t lambda = fixing_length_table(f.table(), n, caps).length;
        p.max_lambda = std::max(p.max_lambda, lambda);
        const bool cn = is_iso_cn_loop(g);
        p.cn_loop += cn;
        if (lambda == static_cast<std::size_t>(2 * n - 2)) {
            ++p.extremal;
            p.extremal_cn_loop += cn;
        }
    });
    ConjunctiveSweep r;
    r.n = n;
    r.graphs = graphs;
    for (const auto& p : part) {
        r.word_failures += p.word_failures;
        r.max_word_length = std::max(r.max_word_length, p.max_word_length);
        r.max_lambda = std::max(r.max_lambda, p.max_lambda);
        r.extremal += p.extremal;
        r.extremal_cn_loop += p.extremal_cn_loop;
        r.cn_loop += p.cn_loop;
    }
    return r;
}

std::string to_csv(const ConjunctiveSweep& r) {
    std::ostringstream out;
    out << "n,graphs,word_failures,max_word_length,max_lambda,extremal,extremal_cn_loop,cn_loop,ok\n"
        << r.n << ',' << r.graphs << ',' << r.word_failures << ',' << r.max_word_length << ',' << r.max_lambda << ','
        << r.extremal << ',' << r.extremal_cn_loop << ',' << r.cn_loop << ',' << (r.ok() ? "true" : "false") << '\n';
    return out.str();
}

MonotoneSweep monotone_exhaustive(int n, unsigned workers, const Caps& caps) {
    if (n < 1 || n > 3) throw invalid_input("monotone_exhaustive needs 1 <= n <= 3");
    workers = std::max(1U, workers);
    const auto& fs = monotone_functions(n);
    const Word w = monotone_universal_word(n, caps);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= fs.size();
    std::vector<std::uint64_t> failures(workers, 0);
    parallel_for(total, workers, [&](std::uint64_t code, unsigned slot) {
        std::vector<std::uint32_t> t(std::size_t{1} << n, 0);
        for (int i = 0; i < n; ++i) {
            const std::uint32_t fn = fs[code % fs.size()];
            code /= fs.size();
            for (std::uint32_t x = 0; x < t.size(); ++x) t[x] |= ((fn >> x) & 1U) << i;
        }
        failures[slot] += !fixes_table(t, n, w.letters());
    });
    MonotoneSweep r{n, w.size(), total, 0};
    for (const auto f : failures) r.failures += f;
    return r;
}

std::string to_csv(const MonotoneSweep& r) {
    std::ostringstream out;
    out << "n,word_length,networks,failures\n"
        << r.n << ',' << r.word_length << ',' << r.networks << ',' << r.failures << '\n';
    return out.str();
}

std::vector<LambdaRow> lambda_table(int nmax, const Caps& caps) {
    std::vector<LambdaRow> rows;
    for (int n = 1; n <= nmax; ++n) {
        LambdaRow r;
        r.n = n;
        if (n <= caps.complete_search) r.exact = static_cast<long long>(shortest_complete_word(n, caps).length);
        r.simple = complete_word(n, CompleteMode::simple, caps).size();
        if (n <= caps.improved_complete)
            r.improved = static_cast<long long>(complete_word(n, CompleteMode::improved, caps).size());
        r.universal = monotone_universal_word(n, caps).size();
        const double x = n;
        r.universal_bound = x * x * x / 3 - 3 * x * x / 2 + 37 * x / 6;
        r.balanced = balanced_universal_word(n, caps).size();
        rows.push_back(r);
    }
    return rows;
}

std::string to_csv(const std::vector<LambdaRow>& rows) {
    std::ostringstream out;
    out << "n,lambda_exact,complete_simple,complete_improved,universal_length,universal_bound,balanced_length\n";
    for (const auto& r : rows) {
        out << r.n << ',';
        if (r.exact >= 0) out << r.exact;
        out << ',' << r.simple << ',';
        if (r.improved >= 0) out << r.improved;
        out << ',' << r.universal << ',' << r.universal_bound << ',' << r.balanced << '\n';
    }
    return out.str();
}

} // namespace fixword
