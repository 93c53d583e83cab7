#include "privword/avoidance.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "privword/border.hpp"
#include "privword/errors.hpp"

namespace privword {

AvoidanceAutomaton::AvoidanceAutomaton(const Word& pattern)
    : q_(pattern.q()), m_(static_cast<std::uint32_t>(pattern.size())) {
    if (pattern.empty())
        throw std::invalid_argument("AvoidanceAutomaton: empty pattern");
    const auto ba = border_array(pattern.span());
    delta_.assign(static_cast<std::size_t>(m_ + 1) * q_, 0);
    for (std::uint32_t s = 0; s <= m_; ++s) {
        for (int c = 0; c < q_; ++c) {
            std::uint32_t& out = delta_[s * q_ + c];
            if (s == m_) {
                out = m_;  // death state absorbs
            } else if (static_cast<Symbol>(c) == pattern[s]) {
                out = s + 1;
            } else if (s == 0) {
                out = 0;
            } else {
                out = delta_[ba[s - 1] * q_ + c];
            }
        }
    }
}

namespace detail {

bool fits_u64(int q, std::uint64_t n) {
    // Counts never exceed q^n; keep a safety margin below 2^63.
    return static_cast<double>(n) * std::log2(static_cast<double>(q)) <= 62.0;
}

template <typename Count>
static Count run_dp(const AvoidanceAutomaton& aut, std::uint64_t n) {
    const std::uint32_t m = aut.pattern_length();
    const int q = aut.q();
    std::vector<Count> cur(m, Count(0)), next(m, Count(0));
    cur[0] = Count(1);
    for (std::uint64_t step = 0; step < n; ++step) {
        for (std::uint32_t s = 0; s < m; ++s) next[s] = Count(0);
        for (std::uint32_t s = 0; s < m; ++s) {
            if (cur[s] == Count(0)) continue;
            for (int c = 0; c < q; ++c) {
                const std::uint32_t t = aut.next(s, static_cast<Symbol>(c));
                if (t < m) next[t] += cur[s];
            }
        }
        cur.swap(next);
    }
    Count total(0);
    for (const Count& v : cur) total += v;
    return total;
}

std::uint64_t count_avoiding_u64(const AvoidanceAutomaton& aut, std::uint64_t n) {
    return run_dp<std::uint64_t>(aut, n);
}

BigInt count_avoiding_big(const AvoidanceAutomaton& aut, std::uint64_t n) {
    return run_dp<BigInt>(aut, n);
}

}  // namespace detail

BigInt count_avoiding(const Word& w, std::uint64_t n) {
    const AvoidanceAutomaton aut(w);
    if (detail::fits_u64(w.q(), n))
        return BigInt(detail::count_avoiding_u64(aut, n));
    return detail::count_avoiding_big(aut, n);
}

double mu_upper_bound(int q, std::uint64_t n, std::uint64_t m) {
    if (q < 2) throw std::invalid_argument("mu_upper_bound: q must be >= 2");
    if (n < 1 || m < 1) throw std::invalid_argument("mu_upper_bound: n, m must be >= 1");
    const double qd = static_cast<double>(q);
    const double factor = 1.0 - std::pow(qd, -static_cast<double>(m));
    return std::pow(qd, static_cast<double>(n)) *
           std::pow(factor, static_cast<double>(n / m));
}

namespace {

// Base-q odometer over a fixed-length buffer; returns false after the last
// pattern.
bool next_pattern(std::vector<Symbol>& w, int q) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1 < q) {
            ++w[i];
            return true;
        }
        w[i] = 0;
    }
    return false;
}

// Border lengths of w as a bitmask; patterns sharing this mask share their
// whole autocorrelation structure and hence all avoidance counts.
std::uint64_t autocorrelation_key(std::span<const Symbol> w) {
    const auto ba = border_array(w);
    std::uint64_t key = 0;
    std::uint32_t b = ba.empty() ? 0 : ba.back();
    while (b > 0) {
        key |= std::uint64_t{1} << b;
        b = ba[b - 1];
    }
    return key;
}

}  // namespace

MuResult mu(int q, std::uint64_t n, std::uint32_t m, const MuOptions& opts) {
    if (q < 2) throw std::invalid_argument("mu: q must be >= 2");
    if (m < 1) throw std::invalid_argument("mu: m must be >= 1");
    const double sweep = std::pow(static_cast<double>(q), static_cast<double>(m));
    if (sweep > static_cast<double>(opts.budget))
        throw BudgetError("mu: pattern sweep q^m exceeds budget", sweep, opts.budget);

    std::vector<Symbol> w(m, 0);
    std::map<std::uint64_t, BigInt> class_counts;
    BigInt best(-1);
    std::vector<Symbol> witness;
    do {
        BigInt count;
        if (opts.group_by_autocorrelation) {
            const std::uint64_t key = autocorrelation_key(w);
            auto it = class_counts.find(key);
            if (it == class_counts.end()) {
                count = count_avoiding(Word(w, q), n);
                class_counts.emplace(key, count);
            } else {
                continue;  // same class: cannot beat its representative
            }
        } else {
            count = count_avoiding(Word(w, q), n);
        }
        if (count > best) {  // strict: keeps the lexicographically least witness
            best = count;
            witness = w;
        }
    } while (next_pattern(w, q));

    return {best, Word(witness, q)};
}

}  // namespace privword
