#include "fixword/fixing.hpp"

#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace fixword {

namespace {

void check_lazy(int n, const Caps& caps) {
    if (n > caps.lazy_limit) throw cap_exceeded("lazy_limit", caps.lazy_limit, n);
}

std::vector<std::uint32_t> table_of(const BooleanNetwork& f) {
    if (!f.table().empty()) return {f.table().begin(), f.table().end()};
    return f.images();
}

} // namespace

FixVerdict fixes(const BooleanNetwork& f, const Word& w, const Caps& caps) {
    const int n = f.size();
    check_lazy(n, caps);
    FixVerdict v;
    const std::uint64_t total = std::uint64_t{1} << n;
    const auto table = f.table();
    for (std::uint64_t x = 0; x < total; ++x) {
        State y;
        if (!table.empty()) y = State{run(table, n, w.letters(), static_cast<std::uint32_t>(x))};
        else y = apply_word(f, w, State{x});
        ++v.checked;
        if (f.image(y) != y) {
            v.start = State{x};
            v.end = y;
            return v;
        }
    }
    v.fixes = true;
    return v;
}

bool fixes_table(std::span<const std::uint32_t> images, int n, std::span<const Letter> w) {
    for (std::uint32_t x = 0; x < images.size(); ++x) {
        const std::uint32_t y = run(images, n, w, x);
        if (images[y] != y) return false;
    }
    return true;
}

bool is_fixable_table(std::span<const std::uint32_t> images, int n) {
    std::vector<bool> reach(images.size(), false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < images.size(); ++x)
        if (images[x] == x) {
            reach[x] = true;
            queue.push_back(x);
        }
    // x -> x+e_i is an edge of the asynchronous graph iff f_i(x) != x_i.
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t y = queue[head];
        for (int i = 1; i <= n; ++i) {
            const std::uint32_t m = 1U << (i - 1);
            const std::uint32_t x = y ^ m;
            if (!reach[x] && ((images[x] ^ x) & m)) {
                reach[x] = true;
                queue.push_back(x);
            }
        }
    }
    return queue.size() == images.size();
}

bool is_fixable(const BooleanNetwork& f, const Caps& caps) {
    check_dense(f.size(), caps);
    if (!f.table().empty()) return is_fixable_table(f.table(), f.size());
    const auto t = f.images();
    return is_fixable_table(t, f.size());
}

namespace {

// Image sets as bit strings over the 2^n states.
class StateSet {
public:
    explicit StateSet(std::size_t states) : bits_((states + 63) / 64, 0) {}
    void insert(std::uint32_t x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    bool contains(std::uint32_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
    bool subset_of(const StateSet& o) const {
        for (std::size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k] & ~o.bits_[k]) return false;
        return true;
    }
    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t k = 0; k < bits_.size(); ++k)
            for (std::uint64_t b = bits_[k]; b; b &= b - 1)
                fn(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(b))));
    }
    std::string key() const { return {reinterpret_cast<const char*>(bits_.data()), bits_.size() * sizeof(std::uint64_t)}; }

private:
    std::vector<std::uint64_t> bits_;
};

} // namespace

namespace {

// n <= 6: an image set fits in one machine word.
FixingLength fixing_length_small(std::span<const std::uint32_t> images, int n, const Caps& caps) {
    const std::size_t states = images.size();
    std::uint64_t fixed = 0;
    for (std::uint32_t x = 0; x < states; ++x)
        if (images[x] == x) fixed |= std::uint64_t{1} << x;
    const std::uint64_t all = states == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << states) - 1;
    if ((all & ~fixed) == 0) return {0, Word{}};

    struct Node {
        std::uint64_t set;
        std::uint32_t parent;
        Letter letter;
    };
    std::vector<Node> nodes{{all, 0, 0}};
    std::unordered_map<std::uint64_t, std::uint32_t> seen{{all, 0}};
    std::size_t begin = 0;
    while (begin < nodes.size()) {
        const std::size_t end = nodes.size();
        for (std::size_t id = begin; id < end; ++id) {
            for (Letter i = 1; i <= n; ++i) {
                std::uint64_t next = 0;
                for (std::uint64_t b = nodes[id].set; b; b &= b - 1)
                    next |= std::uint64_t{1} << step(images, i, static_cast<std::uint32_t>(std::countr_zero(b)));
                if (!seen.emplace(next, static_cast<std::uint32_t>(nodes.size())).second) continue;
                if (nodes.size() >= caps.monoid_states)
                    throw cap_exceeded("monoid_states", static_cast<long long>(caps.monoid_states),
                                       static_cast<long long>(nodes.size()) + 1);
                nodes.push_back({next, static_cast<std::uint32_t>(id), i});
                if ((next & ~fixed) == 0) {
                    std::vector<Letter> rev;
                    for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) rev.push_back(nodes[k].letter);
                    Word w(std::vector<Letter>(rev.rbegin(), rev.rend()));
                    const std::size_t len = w.size();
                    return {len, std::move(w)};
                }
            }
        }
        begin = end;
    }
    throw not_fixable();
}

} // namespace

FixingLength fixing_length_table(std::span<const std::uint32_t> images, int n, const Caps& caps) {
    if (!is_fixable_table(images, n)) throw not_fixable();
    if (n <= 6) return fixing_length_small(images, n, caps);
    const std::size_t states = images.size();
    StateSet fixed(states);
    StateSet all(states);
    for (std::uint32_t x = 0; x < states; ++x) {
        all.insert(x);
        if (images[x] == x) fixed.insert(x);
    }
    if (all.subset_of(fixed)) return {0, Word{}};

    struct Node {
        std::size_t parent;
        Letter letter;
    };
    std::vector<StateSet> sets{all};
    std::vector<Node> nodes{{0, 0}};
    std::unordered_map<std::string, std::size_t> seen{{all.key(), 0}};
    auto unwind = [&](std::size_t id) {
        std::vector<Letter> rev;
        for (; id != 0; id = nodes[id].parent) rev.push_back(nodes[id].letter);
        return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
    };
    std::size_t begin = 0;
    while (begin < sets.size()) {
        const std::size_t end = sets.size();
        for (std::size_t id = begin; id < end; ++id) {
            for (Letter i = 1; i <= n; ++i) {
                StateSet next(states);
                sets[id].for_each([&](std::uint32_t x) { next.insert(step(images, i, x)); });
                auto key = next.key();
                if (seen.count(key)) continue;
                if (sets.size() >= caps.monoid_states)
                    throw cap_exceeded("monoid_states", static_cast<long long>(caps.monoid_states),
                                       static_cast<long long>(sets.size()) + 1);
                seen.emplace(std::move(key), sets.size());
                nodes.push_back({id, i});
                const bool done = next.subset_of(fixed);
                sets.push_back(std::move(next));
                if (done) {
                    Word w = unwind(sets.size() - 1);
                    const std::size_t len = w.size();
                    return {len, std::move(w)};
                }
            }
        }
        begin = end;
    }
    throw not_fixable();
}

FixingLength fixing_length(const BooleanNetwork& f, const Caps& caps) {
    check_dense(f.size(), caps);
    const auto t = table_of(f);
    return fixing_length_table(t, f.size(), caps);
}

Word greedy_fixing_word(const BooleanNetwork& f, const Caps& caps) {
    const int n = f.size();
    check_dense(n, caps);
    const auto img = table_of(f);
    const std::size_t states = img.size();

    // dist[x]: length of the shortest asynchronous path from x to a fixed point.
    constexpr std::uint32_t kFar = ~std::uint32_t{0};
    std::vector<std::uint32_t> dist(states, kFar);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < states; ++x)
        if (img[x] == x) {
            dist[x] = 0;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t y = queue[head];
        for (int i = 1; i <= n; ++i) {
            const std::uint32_t m = 1U << (i - 1);
            const std::uint32_t x = y ^ m;
            if (dist[x] == kFar && ((img[x] ^ x) & m)) {
                dist[x] = dist[y] + 1;
                queue.push_back(x);
            }
        }
    }
    if (queue.size() != states) throw not_fixable();

    auto next_letter = [&](std::uint32_t x) {
        for (int i = 1; i <= n; ++i)
            if (dist[step(img, i, x)] + 1 == dist[x]) return i;
        return 0;
    };

    Word w;
    std::vector<bool> member(states, true);
    for (;;) {
        std::uint32_t pick = kFar;
        for (std::uint32_t x = 0; x < states; ++x)
            if (member[x] && dist[x] != 0) {
                pick = x;
                break;
            }
        if (pick == kFar) return w;
        Word path;
        for (std::uint32_t x = pick; dist[x] != 0;) {
            const int i = next_letter(x);
            path.push_back(i);
            x = step(img, i, x);
        }
        std::vector<bool> next(states, false);
        for (std::uint32_t x = 0; x < states; ++x)
            if (member[x]) next[run(img, n, path.letters(), x)] = true;
        member = std::move(next);
        w += path;
    }
}

FamilyVerdict fixes_family(const Word& w, const std::function<std::optional<BooleanNetwork>(std::size_t)>& next,
                           const Caps& caps) {
    FamilyVerdict v;
    for (std::size_t k = 0;; ++k) {
        const auto f = next(k);
        if (!f) return v;
        const FixVerdict r = fixes(*f, w, caps);
        ++v.checked;
        if (!r.fixes) {
            v.fixes = false;
            v.member = k;
            v.start = r.start;
            v.end = r.end;
            return v;
        }
    }
}

FamilyVerdict fixes_family(const Word& w, std::span<const BooleanNetwork> family, const Caps& caps) {
    return fixes_family(
        w, [&](std::size_t k) { return k < family.size() ? std::optional<BooleanNetwork>(family[k]) : std::nullopt; },
        caps);
}

} // namespace fixword
