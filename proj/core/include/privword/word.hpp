#ifndef PRIVWORD_WORD_HPP
#define PRIVWORD_WORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace privword {

using Symbol = std::uint8_t;

// A finite word over the integer alphabet {0, ..., q-1}.  The empty word is
// a valid value.  Symbols are validated on construction.
class Word {
public:
    Word() : q_(1) {}

    Word(std::vector<Symbol> symbols, int q);

    // Parses a word written with letters 'a', 'b', ... ('a' -> 0).  If q < 0
    // the alphabet size is inferred as (largest letter index) + 1, at least 1.
    // Throws std::invalid_argument on characters outside 'a'..'z' or symbols
    // outside [0, q).
    static Word from_letters(const std::string& text, int q = -1);

    // Renders symbols back as letters 'a', 'b', ...
    std::string to_letters() const;

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::span<const Symbol> span() const noexcept { return symbols_; }

    // Prefix of the given length, over the same alphabet.
    Word prefix(std::size_t len) const;

    // Image under a permutation of the alphabet; perm must have q entries
    // forming a bijection on [0, q).
    Word permuted(std::span<const Symbol> perm) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;  // compared first: lexicographic order
    int q_;
};

}  // namespace privword

#endif
