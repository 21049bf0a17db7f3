#include "fixword/word.hpp"

#include "fixword/error.hpp"

#include <algorithm>

namespace fixword {

Word Word::range(Letter first, Letter last) {
    Word w;
    for (Letter a = first; a <= last; ++a) w.push_back(a);
    return w;
}

Word& Word::append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word Word::repeated(std::size_t k) const {
    Word w;
    w.letters_.reserve(letters_.size() * k);
    for (std::size_t t = 0; t < k; ++t) w.append(*this);
    return w;
}

Word Word::factor(std::size_t a, std::size_t b) const {
    if (a > b) return {};
    if (a < 1 || b > letters_.size()) throw invalid_input("factor bounds out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(a - 1),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(b)));
}

Word Word::subsequence(std::span<const std::size_t> positions) const {
    Word w;
    std::size_t prev = 0;
    for (const std::size_t p : positions) {
        if (p <= prev || p > letters_.size())
            throw invalid_input("subsequence positions must be increasing and in range");
        w.push_back(letters_[p - 1]);
        prev = p;
    }
    return w;
}

Letter Word::max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

} // namespace fixword
