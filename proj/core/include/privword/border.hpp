#ifndef PRIVWORD_BORDER_HPP
#define PRIVWORD_BORDER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privword/word.hpp"

namespace privword {

// Border array (KMP failure function): entry i-1 is the length of the
// maximal border of the length-i prefix, for i = 1..n.  Empty input yields
// an empty array.
std::vector<std::uint32_t> border_array(std::span<const Symbol> u);
std::vector<std::uint32_t> border_array(const Word& u);

// Z-array: z[i] is the length of the longest common prefix of u and u[i..),
// with z[0] = n.
std::vector<std::uint32_t> z_array(std::span<const Symbol> u);

// Number of (possibly overlapping) occurrences of w as a factor of u.
// Throws std::invalid_argument if w is empty.
std::uint64_t count_occurrences(const Word& w, const Word& u);
std::uint64_t count_occurrences(std::span<const Symbol> w,
                                std::span<const Symbol> u);

// The longest border of u, or nullopt when u has none (|u| <= 1 or
// unbordered).
std::optional<Word> maximal_border(const Word& u);

// The descending chain of border lengths obtained by iterating the border
// array from the full word.  The chain enumerates exactly the lengths of all
// borders of u.  occ[k] is the number of occurrences of the length-chain[k]
// prefix in the whole word (always >= 2).
struct BorderChain {
    std::vector<std::uint32_t> border_array;
    std::vector<std::uint32_t> chain;
    std::vector<std::uint64_t> occ;
};

BorderChain compute_border_chain(const Word& u);

// A word is closed when it has length >= 2 and its maximal border occurs
// exactly twice in it (necessarily as prefix and suffix).  This is
// equivalent to some border occurring exactly twice: occurrence counts of
// prefixes do not increase with length, and every border occurs at least
// twice.
bool is_closed(const Word& u);
bool is_closed(std::span<const Symbol> u);

// A word is privileged when |u| <= 1, or its maximal border occurs exactly
// twice and is itself privileged.  Walks the border chain; each step counts
// occurrences of the next border inside the current prefix via one shared
// Z-array, so a word of length n costs O(n) plus the chain walk.
bool is_privileged(const Word& u);
bool is_privileged(std::span<const Symbol> u);

inline constexpr std::size_t kDefaultOracleCap = 20;

// Literal definitional recursion: |u| <= 1, or SOME border of u is
// privileged (by this same recursion) and occurs exactly twice.  Borders are
// found by direct prefix/suffix comparison and occurrences by direct
// scanning, so this path shares nothing with is_privileged above.  Inputs
// longer than length_cap throw std::length_error.
bool is_privileged_oracle(const Word& u, std::size_t length_cap = kDefaultOracleCap);
bool is_privileged_oracle(std::span<const Symbol> u,
                          std::size_t length_cap = kDefaultOracleCap);

namespace detail {

// Occurrences of the length-m prefix of u inside the length-len prefix of u,
// read off a precomputed Z-array.  Requires 1 <= m <= len <= |u|.
std::uint64_t prefix_occurrences(std::span<const std::uint32_t> z,
                                 std::uint32_t m, std::uint32_t len);

// Allocation-free privilege/closedness test used by the census inner loop.
// ba and z are scratch buffers resized by the callee.
struct Classifier {
    std::vector<std::uint32_t> ba;
    std::vector<std::uint32_t> z;

    // Returns {closed, privileged, maximal border length (0 if none)}.
    struct Result {
        bool closed;
        bool privileged;
        std::uint32_t max_border;
    };
    Result classify(std::span<const Symbol> u);
};

}  // namespace detail

}  // namespace privword

#endif
