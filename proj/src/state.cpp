#include "fixword/state.hpp"

#include "fixword/error.hpp"

namespace fixword {

std::string to_string(State x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (x[i]) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

State parse_state(std::string_view text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw invalid_input("state '" + std::string(text) + "' does not have " +
                            std::to_string(n) + " components");
    State x;
    for (int i = 1; i <= n; ++i) {
        const char c = text[static_cast<std::size_t>(i - 1)];
        if (c != '0' && c != '1')
            throw invalid_input("state '" + std::string(text) + "' has a non-binary digit");
        x = x.with(i, c == '1');
    }
    return x;
}

} // namespace fixword
