#include "fixword/error.hpp"
#include "fixword/words.hpp"

#include <string>
#include <unordered_map>

namespace fixword {

ShortestWord shortest_supersequence(const PermutationFamily& family, const Caps& caps) {
    family.validate();
    const int n = family.n;
    if (n > 255) throw invalid_input("shortest_supersequence supports n <= 255");
    const std::size_t k = family.perms.size();

    // A state holds, for each member, how many of its letters are matched.
    struct Node {
        std::size_t parent;
        Letter letter;
    };
    std::vector<std::string> states{std::string(k, '\0')};
    std::vector<Node> nodes{{0, 0}};
    std::unordered_map<std::string, std::size_t> seen{{states.front(), 0}};
    const std::string goal(k, static_cast<char>(n));

    auto unwind = [&](std::size_t id) {
        std::vector<Letter> rev;
        for (; id != 0; id = nodes[id].parent) rev.push_back(nodes[id].letter);
        return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
    };
    if (states.front() == goal) return {Word{}, 0};

    std::size_t layer_begin = 0;
    while (layer_begin < states.size()) {
        const std::size_t layer_end = states.size();
        for (std::size_t id = layer_begin; id < layer_end; ++id) {
            for (Letter a = 1; a <= n; ++a) {
                std::string next = states[id];
                bool moved = false;
                for (std::size_t m = 0; m < k; ++m) {
                    const auto pos = static_cast<unsigned char>(next[m]);
                    if (pos < n && family.perms[m][pos] == a) {
                        next[m] = static_cast<char>(pos + 1);
                        moved = true;
                    }
                }
                if (!moved || seen.count(next)) continue;
                if (states.size() >= caps.search_states)
                    throw cap_exceeded("search_states", static_cast<long long>(caps.search_states),
                                       static_cast<long long>(states.size()) + 1);
                const std::size_t nid = states.size();
                seen.emplace(next, nid);
                nodes.push_back({id, a});
                states.push_back(next);
                if (next == goal) {
                    Word w = unwind(nid);
                    const std::size_t len = w.size();
                    return {std::move(w), len};
                }
            }
        }
        layer_begin = layer_end;
    }
    throw error("supersequence search exhausted without reaching the goal");
}

ShortestWord shortest_complete_word(int n, const Caps& caps) {
    if (n < 1) throw invalid_input("shortest_complete_word needs n >= 1");
    if (n > caps.complete_search) throw cap_exceeded("complete_search", caps.complete_search, n);
    return shortest_supersequence(all_permutations(n, caps), caps);
}

} // namespace fixword
