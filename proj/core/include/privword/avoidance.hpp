#ifndef PRIVWORD_AVOIDANCE_HPP
#define PRIVWORD_AVOIDANCE_HPP

#include <cstdint>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/budget.hpp"
#include "privword/word.hpp"

namespace privword {

// Factor-matching automaton for a pattern w of length m.  Live states
// 0..m-1 hold the length of the longest prefix of w that is a suffix of the
// input read so far; state m is the absorbing death state (pattern seen).
class AvoidanceAutomaton {
public:
    explicit AvoidanceAutomaton(const Word& pattern);

    int q() const noexcept { return q_; }
    std::uint32_t pattern_length() const noexcept { return m_; }
    std::uint32_t death_state() const noexcept { return m_; }

    std::uint32_t next(std::uint32_t state, Symbol s) const noexcept {
        return delta_[state * q_ + s];
    }

private:
    int q_;
    std::uint32_t m_;
    std::vector<std::uint32_t> delta_;  // (m+1) x q, row-major
};

// Exact number of length-n words over w's alphabet that do not contain the
// factor w.  A_w(0) = 1.  The DP runs in 64-bit arithmetic while q^n fits
// and switches to exact big integers beyond that.  Throws
// std::invalid_argument on an empty pattern.
BigInt count_avoiding(const Word& w, std::uint64_t n);

// Closed-form upper bound q^n (1 - q^-m)^floor(n/m) for mu(n, m).
double mu_upper_bound(int q, std::uint64_t n, std::uint64_t m);

struct MuResult {
    BigInt value;
    Word witness;  // lexicographically least maximizing pattern
};

struct MuOptions {
    // Evaluate one representative per autocorrelation class instead of every
    // pattern.  Patterns with the same set of border lengths have identical
    // avoidance counts, so the sweep result is unchanged.
    bool group_by_autocorrelation = false;
    std::uint64_t budget = kDefaultBudget;
};

// max over all patterns w of length m of count_avoiding(w, n), with the
// lexicographically least maximizing witness.  Sweeps q^m patterns; throws
// BudgetError when that exceeds the budget.
MuResult mu(int q, std::uint64_t n, std::uint32_t m, const MuOptions& opts = {});

namespace detail {

// Fixed-representation DP paths, exposed so tests can compare them across
// the automatic switch boundary.
std::uint64_t count_avoiding_u64(const AvoidanceAutomaton& aut, std::uint64_t n);
BigInt count_avoiding_big(const AvoidanceAutomaton& aut, std::uint64_t n);

// True when q^n is guaranteed to fit in 64 bits, i.e. the u64 path is safe.
bool fits_u64(int q, std::uint64_t n);

}  // namespace detail

}  // namespace privword

#endif
