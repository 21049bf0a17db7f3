#ifndef FIXWORD_WORD_HPP
#define FIXWORD_WORD_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fixword {

// Letters are positive integers; a letter outside [n] acts as the identity.
using Letter = int;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // first, first+1, ..., last (empty when first > last)
    static Word range(Letter first, Letter last);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t k) const { return letters_[k]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    std::span<const Letter> letters() const { return letters_; }

    void push_back(Letter a) { letters_.push_back(a); }
    Word& append(const Word& other);
    Word& operator+=(const Word& other) { return append(other); }

    // k.w: k-fold repetition, 0.w is the empty word
    Word repeated(std::size_t k) const;
    // w_[a,b] with 1-based inclusive bounds; empty when a > b
    Word factor(std::size_t a, std::size_t b) const;
    // w_S for 1-based positions (must be increasing)
    Word subsequence(std::span<const std::size_t> positions) const;

    Letter max_letter() const;

    friend Word operator+(Word a, const Word& b) { return a.append(b); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Debug rendering, comma separated ("1,2,1"); netlang emit_word is the
// canonical text format.
std::string to_string(const Word& w);

} // namespace fixword

#endif
