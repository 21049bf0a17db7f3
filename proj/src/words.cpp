#include "fixword/words.hpp"

#include "fixword/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

namespace fixword {

namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

// next[p][k]: one past the first occurrence of letters[k] at or after p.
class NextTable {
public:
    NextTable(const Word& w, std::span<const Letter> letters) : k_(letters.size()), next_((w.size() + 1) * k_, kNever) {
        for (std::size_t p = w.size(); p-- > 0;) {
            std::copy_n(&next_[(p + 1) * k_], k_, &next_[p * k_]);
            for (std::size_t k = 0; k < k_; ++k)
                if (letters[k] == w[p]) next_[p * k_ + k] = static_cast<std::uint32_t>(p + 1);
        }
    }
    std::uint32_t operator()(std::uint32_t p, std::size_t k) const {
        return p == kNever ? kNever : next_[p * k_ + k];
    }

private:
    std::size_t k_;
    std::vector<std::uint32_t> next_;
};

std::vector<Letter> letters_of(VertexMask s) {
    std::vector<Letter> out;
    for (; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
    return out;
}

} // namespace

bool is_permutation(const Word& w, int n) {
    if (static_cast<int>(w.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const Letter a : w) {
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) return false;
        seen[static_cast<std::size_t>(a)] = true;
    }
    return true;
}

void PermutationFamily::validate() const {
    for (const auto& p : perms)
        if (!is_permutation(p, n)) throw invalid_input("'" + to_string(p) + "' is not a permutation of [" + std::to_string(n) + "]");
}

PermutationFamily all_permutations(int n, const Caps& caps) {
    if (n > caps.factorial_enum) throw cap_exceeded("factorial_enum", caps.factorial_enum, n);
    PermutationFamily f{n, {}};
    std::vector<Letter> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do f.perms.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return f;
}

bool is_subsequence(const Word& u, const Word& w) {
    std::size_t k = 0;
    for (std::size_t p = 0; p < w.size() && k < u.size(); ++p)
        if (w[p] == u[k]) ++k;
    return k == u.size();
}

bool is_complete(const Word& w, VertexMask s, const Caps& caps) {
    const auto letters = letters_of(s);
    const int m = static_cast<int>(letters.size());
    if (m > caps.complete_dp) throw cap_exceeded("complete_dp", caps.complete_dp, m);
    const NextTable next(w, letters);
    std::vector<std::uint32_t> e(std::size_t{1} << m, 0);
    for (std::size_t t = 1; t < e.size(); ++t) {
        std::uint32_t best = 0;
        for (int k = 0; k < m && best != kNever; ++k)
            if ((t >> k) & 1U) best = std::max(best, next(e[t ^ (std::size_t{1} << k)], static_cast<std::size_t>(k)));
        e[t] = best;
    }
    return e.back() != kNever;
}

bool is_complete(const Word& w, int n, const Caps& caps) { return is_complete(w, all_vertices(n), caps); }

namespace {

Word simple_complete_word(int n) { return Word::range(1, n).repeated(static_cast<std::size_t>(n)); }

Word insert_top_letter(const Word& base, int n, std::span<const std::size_t> positions) {
    Word v = Word::range(1, n);
    std::size_t k = 0;
    for (std::size_t t = 0; t <= base.size(); ++t) {
        while (k < positions.size() && positions[k] == t) {
            v.push_back(n);
            ++k;
        }
        if (t < base.size()) v.push_back(base[t]);
    }
    return v;
}

// omega^n = (1..n) followed by omega^{n-1} with the letter n inserted two
// places after each occurrence of n-1. When that word is not complete the
// insertion points are shifted by small offsets, depth first, until the
// subset program accepts.
Word grow_complete_word(const Word& base, int n, const Caps& caps) {
    std::vector<std::size_t> anchor;
    for (std::size_t t = 0; t < base.size(); ++t)
        if (base[t] == n - 1) anchor.push_back(std::min(base.size(), t + 2));
    std::vector<std::size_t> pos(anchor.size());
    constexpr std::array<int, 7> offsets{0, -1, 1, -2, 2, -3, 3};
    Word found;
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == anchor.size()) {
            Word v = insert_top_letter(base, n, pos);
            if (!is_complete(v, n, caps)) return false;
            found = std::move(v);
            return true;
        }
        for (const int o : offsets) {
            const long long q = std::clamp<long long>(static_cast<long long>(anchor[k]) + o, 0,
                                                       static_cast<long long>(base.size()));
            if (k && static_cast<std::size_t>(q) < pos[k - 1]) continue;
            pos[k] = static_cast<std::size_t>(q);
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    if (!dfs(dfs, 0)) throw error("no complete word found by insertion at n = " + std::to_string(n));
    return found;
}

Word improved_complete_word(int n, const Caps& caps) {
    if (n > caps.improved_complete) throw cap_exceeded("improved_complete", caps.improved_complete, n);
    static std::mutex lock;
    static std::map<int, Word> memo;
    const std::lock_guard<std::mutex> guard(lock);
    if (const auto it = memo.find(n); it != memo.end()) return it->second;
    Word w;
    switch (n) {
    case 1: w = Word{1}; break;
    case 2: w = Word{1, 2, 1}; break;
    case 3: w = Word{1, 2, 1, 3, 1, 2, 1}; break;
    case 4: w = Word{1, 2, 3, 4, 1, 2, 3, 1, 4, 2, 1, 3}; break;
    default: {
        int k = 4;
        w = Word{1, 2, 3, 4, 1, 2, 3, 1, 4, 2, 1, 3};
        for (auto it = memo.lower_bound(5); it != memo.end() && it->first < n; ++it) {
            k = it->first;
            w = it->second;
        }
        while (k < n) {
            ++k;
            w = grow_complete_word(w, k, caps);
            memo.emplace(k, w);
        }
    }
    }
    memo.emplace(n, w);
    return w;
}

} // namespace

Word complete_word(int n, CompleteMode mode, const Caps& caps) {
    if (n < 1) throw invalid_input("complete_word needs n >= 1");
    return mode == CompleteMode::simple ? simple_complete_word(n) : improved_complete_word(n, caps);
}

Word best_complete_word(int n, const Caps& caps) {
    if (n < 1) throw invalid_input("complete_word needs n >= 1");
    if (n <= caps.improved_complete) return improved_complete_word(n, caps);
    return simple_complete_word(n);
}

Word constrained_complete_word(int alpha, int i) {
    if (alpha < 0 || i < 0) throw invalid_input("constrained_complete_word needs alpha, i >= 0");
    return Word::range(1, alpha + i).repeated(static_cast<std::size_t>(i)) + Word::range(1, alpha);
}

bool is_constrained_complete(const Word& w, int alpha, int i, const Caps& caps) {
    if (alpha < 0 || i < 0) throw invalid_input("is_constrained_complete needs alpha, i >= 0");
    const int m = alpha + i;
    if (m > caps.complete_dp) throw cap_exceeded("complete_dp", caps.complete_dp, m);
    if (m == 0) return true;
    const auto letters = letters_of(all_vertices(m));
    const NextTable next(w, letters);
    const std::size_t full = std::size_t{1} << m;
    // e[t*m + l]: latest greedy end over admissible arrangements of t ending
    // in letter l+1; kNone when no admissible arrangement ends there.
    constexpr std::uint32_t kNone = kNever - 1;
    std::vector<std::uint32_t> e(full * static_cast<std::size_t>(m), kNone);
    for (std::size_t t = 1; t < full; ++t) {
        for (int l = 0; l < m; ++l) {
            if (!((t >> l) & 1U)) continue;
            const std::size_t rest = t ^ (std::size_t{1} << l);
            std::uint32_t start = 0;
            bool any = rest == 0;
            for (int p = 0; p < m && start != kNever; ++p) {
                if (!((rest >> p) & 1U)) continue;
                if (p < alpha && l < alpha && p > l) continue;
                const std::uint32_t v = e[rest * static_cast<std::size_t>(m) + static_cast<std::size_t>(p)];
                if (v == kNone) continue;
                start = std::max(start, v);
                any = true;
            }
            if (any) e[t * static_cast<std::size_t>(m) + static_cast<std::size_t>(l)] = next(start, static_cast<std::size_t>(l));
        }
    }
    for (int l = 0; l < m; ++l)
        if (e[(full - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(l)] == kNever) return false;
    return true;
}

} // namespace fixword
