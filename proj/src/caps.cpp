#include "fixword/caps.hpp"

#include "fixword/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fixword {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0)
        throw invalid_input("caps: bad value for " + std::string(key) + ": '" +
                            std::string(text) + "'");
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("caps: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

void Caps::apply(std::string_view assignments) {
    std::size_t pos = 0;
    while (pos <= assignments.size()) {
        std::size_t stop = assignments.find_first_of("\n,;", pos);
        if (stop == std::string_view::npos) stop = assignments.size();
        std::string_view item = assignments.substr(pos, stop - pos);
        if (const auto hash = item.find('#'); hash != std::string_view::npos)
            item = item.substr(0, hash);
        item = trim(item);
        pos = stop + 1;
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw invalid_input("caps: expected key=value, got '" + std::string(item) + "'");
        const auto key = trim(item.substr(0, eq));
        const auto val = trim(item.substr(eq + 1));
        if (key == "dense_limit") dense_limit = parse_value<int>(key, val);
        else if (key == "lazy_limit") lazy_limit = parse_value<int>(key, val);
        else if (key == "max_leaf_exact") max_leaf_exact = parse_value<int>(key, val);
        else if (key == "transversal_exact") transversal_exact = parse_value<int>(key, val);
        else if (key == "factorial_enum") factorial_enum = parse_value<int>(key, val);
        else if (key == "complete_dp") complete_dp = parse_value<int>(key, val);
        else if (key == "complete_search") complete_search = parse_value<int>(key, val);
        else if (key == "improved_complete") improved_complete = parse_value<int>(key, val);
        else if (key == "design_subsets") design_subsets = parse_value<int>(key, val);
        else if (key == "search_states") search_states = parse_value<std::size_t>(key, val);
        else if (key == "monoid_states") monoid_states = parse_value<std::size_t>(key, val);
        else throw invalid_input("caps: unknown key '" + std::string(key) + "'");
    }
}

Caps Caps::load(const std::string& path) {
    Caps caps;
    if (!path.empty()) caps.apply(read_file(path));
    if (const char* env = std::getenv("FIXWORD_CAPS"); env != nullptr && *env != '\0') {
        const std::string_view v(env);
        if (v.find('=') != std::string_view::npos) caps.apply(v);
        else caps.apply(read_file(std::string(v)));
    }
    return caps;
}

std::string Caps::to_string() const {
    std::ostringstream out;
    out << "dense_limit=" << dense_limit << '\n'
        << "lazy_limit=" << lazy_limit << '\n'
        << "max_leaf_exact=" << max_leaf_exact << '\n'
        << "transversal_exact=" << transversal_exact << '\n'
        << "factorial_enum=" << factorial_enum << '\n'
        << "complete_dp=" << complete_dp << '\n'
        << "complete_search=" << complete_search << '\n'
        << "improved_complete=" << improved_complete << '\n'
        << "design_subsets=" << design_subsets << '\n'
        << "search_states=" << search_states << '\n'
        << "monoid_states=" << monoid_states << '\n';
    return out.str();
}

const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

} // namespace fixword
