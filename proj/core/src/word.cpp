#include "privword/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace privword {

Word::Word(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    if (q < 1 || q > 256) throw std::invalid_argument("Word: alphabet size must be in [1, 256]");
    for (Symbol s : symbols_)
        if (s >= q) throw std::invalid_argument("Word: symbol out of alphabet range");
}

Word Word::from_letters(const std::string& text, int q) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    int max_index = -1;
    for (char c : text) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument(std::string("Word: character '") + c +
                                        "' is not a letter in a..z");
        const int idx = c - 'a';
        max_index = std::max(max_index, idx);
        symbols.push_back(static_cast<Symbol>(idx));
    }
    if (q < 0) q = max_index + 1 > 0 ? max_index + 1 : 1;
    return Word(std::move(symbols), q);
}

std::string Word::to_letters() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('a' + s));
    return out;
}

Word Word::prefix(std::size_t len) const {
    if (len > symbols_.size()) throw std::out_of_range("Word::prefix: length exceeds word");
    return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len), q_);
}

Word Word::permuted(std::span<const Symbol> perm) const {
    if (perm.size() != static_cast<std::size_t>(q_))
        throw std::invalid_argument("Word::permuted: permutation size != q");
    std::vector<Symbol> out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(perm[s]);
    return Word(std::move(out), q_);
}

}  // namespace privword
