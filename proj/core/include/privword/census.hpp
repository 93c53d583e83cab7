#ifndef PRIVWORD_CENSUS_HPP
#define PRIVWORD_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/budget.hpp"
#include "privword/word.hpp"

namespace privword {

// Exact counts for one word length: B(n) privileged, C(n) closed, and the
// refinement priv(n, m) by maximal-border length m.
struct CountRow {
    std::uint32_t n = 0;
    int q = 0;
    std::uint64_t privileged = 0;  // B(n)
    std::uint64_t closed = 0;      // C(n)
    // priv_by_border[m] = priv(n, m) for 1 <= m <= n-1; index 0 unused.
    // Entries for m with zero count are present and zero.
    std::vector<std::uint64_t> priv_by_border;

    std::uint64_t priv_border_sum() const;
};

struct CountTable {
    int q = 0;
    std::vector<CountRow> rows;  // ascending n, contiguous from rows.front().n

    const CountRow* find(std::uint32_t n) const;
    const CountRow& at(std::uint32_t n) const;  // throws std::out_of_range
    std::uint32_t max_n() const;
};

struct CensusOptions {
    std::uint64_t budget = kDefaultBudget;  // cap on q^n
    unsigned threads = 1;
    // Enumerate words with the first symbol fixed to 0 and scale counts by
    // q; valid because privilege and closedness are invariant under alphabet
    // permutations.  Off = full enumeration (used by correctness checks).
    bool symmetry_reduction = true;
};

// Exact census row for words of length n over a q-letter alphabet.
// Throws BudgetError when q^n exceeds the budget.
CountRow census(int q, std::uint32_t n, const CensusOptions& opts = {});

// Census rows for n = 1..max_n.
CountTable census_table(int q, std::uint32_t max_n, const CensusOptions& opts = {});

// priv(n, m) for all m in 1..n-1, including zero entries (n >= 2).
std::vector<std::uint64_t> priv_table(int q, std::uint32_t n,
                                      const CensusOptions& opts = {});

// All privileged words of length n, in lexicographic order (full
// enumeration; budget guards q^n).
std::vector<Word> privileged_words(int q, std::uint32_t n,
                                   std::uint64_t budget = kDefaultBudget);

// The set {w u w : u of length n-2m, w privileged of length m, w not a
// factor of u}, in lexicographic order.  Contains every privileged word of
// length n with maximal border length m, and possibly more (w may straddle
// the junctions).  Requires n >= 2m >= 2; budget guards q^(n-2m) * B(m).
std::vector<Word> construct_T(int q, std::uint32_t n, std::uint32_t m,
                              std::uint64_t budget = kDefaultBudget);

// One row of the recursive-bound check for priv(n, m).
struct RecursiveBoundRow {
    std::uint32_t m = 0;
    std::uint64_t lhs = 0;      // priv(n, m)
    BigInt rhs;                 // q^ceil(n/2), or B(m) * mu(n-2m, m)
    bool overlapping_branch = false;  // true when 2m > n
    bool ok = false;            // lhs <= rhs
};

// Checks priv(n, m) <= q^ceil(n/2) (2m > n) or priv(n, m) <= B(m) *
// mu(n-2m, m) (2m <= n) for every m in 1..n-1.  The table must cover
// lengths 1..n.
std::vector<RecursiveBoundRow> verify_recursive_bound(
    const CountTable& table, std::uint32_t n,
    std::uint64_t budget = kDefaultBudget);

}  // namespace privword

#endif
