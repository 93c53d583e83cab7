#include <doctest.h>

#include <stdexcept>

#include "privword/word.hpp"

using privword::Symbol;
using privword::Word;

TEST_CASE("letters map a=0, b=1, ... and back") {
    const Word w = Word::from_letters("abc");
    CHECK(w.q() == 3);
    CHECK(w.size() == 3);
    CHECK(w[0] == 0);
    CHECK(w[2] == 2);
    CHECK(w.to_letters() == "abc");
}

TEST_CASE("alphabet size is inferred from the largest letter") {
    CHECK(Word::from_letters("aba").q() == 2);
    CHECK(Word::from_letters("a").q() == 1);
    CHECK(Word::from_letters("").q() == 1);
    CHECK(Word::from_letters("").empty());
    CHECK(Word::from_letters("cac", 5).q() == 5);
}

TEST_CASE("malformed text and out-of-range symbols are rejected") {
    CHECK_THROWS_AS(Word::from_letters("a1b"), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_letters("A"), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_letters("abc", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word({0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Word({0}, 0), std::invalid_argument);
}

TEST_CASE("prefix and permutation") {
    const Word w = Word::from_letters("abba");
    CHECK(w.prefix(2).to_letters() == "ab");
    CHECK(w.prefix(0).empty());
    CHECK_THROWS_AS(w.prefix(5), std::out_of_range);

    const std::vector<Symbol> swap{1, 0};
    CHECK(w.permuted(swap).to_letters() == "baab");
    const std::vector<Symbol> bad{0};
    CHECK_THROWS_AS(w.permuted(bad), std::invalid_argument);
}

TEST_CASE("words order lexicographically") {
    CHECK(Word::from_letters("ab") < Word::from_letters("b"));
    CHECK(Word::from_letters("ab") < Word::from_letters("abc", 3));
    CHECK(Word::from_letters("aa") == Word::from_letters("aa"));
}
