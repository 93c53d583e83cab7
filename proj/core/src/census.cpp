#include "privword/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "privword/avoidance.hpp"
#include "privword/border.hpp"
#include "privword/errors.hpp"

namespace privword {

void require_within_budget(double estimated_work, std::uint64_t budget,
                           const char* what) {
    if (estimated_work > static_cast<double>(budget)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "%s: estimated work %.3g exceeds budget %llu", what,
                      estimated_work, static_cast<unsigned long long>(budget));
        throw BudgetError(msg, estimated_work, budget);
    }
}

std::uint64_t CountRow::priv_border_sum() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : priv_by_border) total += c;
    return total;
}

const CountRow* CountTable::find(std::uint32_t n) const {
    for (const CountRow& row : rows)
        if (row.n == n) return &row;
    return nullptr;
}

const CountRow& CountTable::at(std::uint32_t n) const {
    const CountRow* row = find(n);
    if (!row) throw std::out_of_range("CountTable: row for n not present");
    return *row;
}

std::uint32_t CountTable::max_n() const {
    return rows.empty() ? 0 : rows.back().n;
}

namespace {

// Lexicographic odometer over positions [first, n); returns false when the
// range wraps around.
bool advance(std::vector<Symbol>& word, std::size_t first, int q) {
    for (std::size_t i = word.size(); i-- > first;) {
        if (word[i] + 1 < q) {
            ++word[i];
            return true;
        }
        word[i] = 0;
    }
    return false;
}

struct PartialCounts {
    std::uint64_t privileged = 0;
    std::uint64_t closed = 0;
    std::vector<std::uint64_t> priv_by_border;
};

// Classifies every word in the half-open index range [begin, end) of the
// enumeration whose positions [first, n) run as a base-q counter while
// positions [0, first) stay fixed to the given prefix value.
PartialCounts scan_range(int q, std::uint32_t n, std::size_t first,
                         std::uint64_t prefix_index, std::uint64_t begin,
                         std::uint64_t end) {
    PartialCounts out;
    out.priv_by_border.assign(n, 0);

    std::vector<Symbol> word(n, 0);
    // Decode the fixed prefix (positions [0, first)) and the starting value
    // of the free positions, most significant first.
    std::uint64_t p = prefix_index;
    for (std::size_t i = first; i-- > 0;) {
        word[i] = static_cast<Symbol>(p % q);
        p /= q;
    }
    std::uint64_t b = begin;
    for (std::size_t i = n; i-- > first;) {
        word[i] = static_cast<Symbol>(b % q);
        b /= q;
    }

    detail::Classifier classifier;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto r = classifier.classify(word);
        if (r.closed) ++out.closed;
        if (r.privileged) {
            ++out.privileged;
            if (n >= 2) ++out.priv_by_border[r.max_border];
        }
        if (idx + 1 < end) advance(word, first, q);
    }
    return out;
}

std::uint64_t pow_u64(int q, std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) v *= static_cast<std::uint64_t>(q);
    return v;
}

CountRow census_scan(int q, std::uint32_t n, std::size_t first,
                     unsigned threads) {
    // first = number of fixed leading positions (0 or 1); the fixed prefix is
    // all zeros here, scaling happens in the caller.
    const std::uint32_t free_positions = n - static_cast<std::uint32_t>(first);
    const std::uint64_t total = pow_u64(q, free_positions);

    CountRow row;
    row.n = n;
    row.q = q;
    row.priv_by_border.assign(n >= 2 ? n : 0, 0);

    std::vector<PartialCounts> parts;
    if (threads <= 1 || total < 1024) {
        parts.push_back(scan_range(q, n, first, 0, 0, total));
    } else {
        // Partition on leading free symbols so that there are at least
        // 4 * threads shared-nothing chunks.
        std::uint32_t k = 0;
        while (k < free_positions && pow_u64(q, k) < std::uint64_t{4} * threads)
            ++k;
        const std::uint64_t chunk_count = pow_u64(q, k);
        const std::uint64_t chunk_size = pow_u64(q, free_positions - k);
        parts.resize(chunk_count);

        std::vector<std::thread> pool;
        // Static round-robin assignment keeps the partition -> result slot
        // mapping independent of scheduling.
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (std::size_t c = t; c < chunk_count; c += threads) {
                    parts[c] = scan_range(q, n, first, 0, c * chunk_size,
                                          (c + 1) * chunk_size);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const PartialCounts& part : parts) {
        row.privileged += part.privileged;
        row.closed += part.closed;
        for (std::size_t m = 0; m < part.priv_by_border.size() && n >= 2; ++m)
            row.priv_by_border[m] += part.priv_by_border[m];
    }
    return row;
}

}  // namespace

CountRow census(int q, std::uint32_t n, const CensusOptions& opts) {
    if (q < 2) throw std::invalid_argument("census: q must be >= 2");
    if (n < 1) throw std::invalid_argument("census: n must be >= 1");
    require_within_budget(std::pow(double(q), double(n)), opts.budget, "census");

    if (!opts.symmetry_reduction)
        return census_scan(q, n, 0, opts.threads);

    // First symbol fixed to 0; every count is q-fold by permutation closure.
    CountRow row = census_scan(q, n, 1, opts.threads);
    row.privileged *= q;
    row.closed *= q;
    for (std::uint64_t& c : row.priv_by_border) c *= q;
    return row;
}

CountTable census_table(int q, std::uint32_t max_n, const CensusOptions& opts) {
    if (max_n < 1) throw std::invalid_argument("census_table: max_n must be >= 1");
    // Guard the whole requested range up front, not row by row.
    require_within_budget(std::pow(double(q), double(max_n)), opts.budget,
                          "census");
    CountTable table;
    table.q = q;
    table.rows.reserve(max_n);
    for (std::uint32_t n = 1; n <= max_n; ++n)
        table.rows.push_back(census(q, n, opts));
    return table;
}

std::vector<std::uint64_t> priv_table(int q, std::uint32_t n,
                                      const CensusOptions& opts) {
    if (n < 2) throw std::invalid_argument("priv_table: n must be >= 2");
    return census(q, n, opts).priv_by_border;
}

std::vector<Word> privileged_words(int q, std::uint32_t n,
                                   std::uint64_t budget) {
    if (q < 2) throw std::invalid_argument("privileged_words: q must be >= 2");
    require_within_budget(std::pow(double(q), double(n)), budget,
                          "privileged_words");
    std::vector<Word> out;
    if (n == 0) return out;
    std::vector<Symbol> word(n, 0);
    detail::Classifier classifier;
    do {
        if (classifier.classify(word).privileged) out.emplace_back(word, q);
    } while (advance(word, 0, q));
    return out;
}

std::vector<Word> construct_T(int q, std::uint32_t n, std::uint32_t m,
                              std::uint64_t budget) {
    if (m < 1 || n < 2 * m)
        throw std::invalid_argument("construct_T: requires n >= 2m >= 2");
    const std::vector<Word> borders = privileged_words(q, m, budget);
    const std::uint32_t mid = n - 2 * m;
    require_within_budget(std::pow(double(q), double(mid)) *
                              static_cast<double>(borders.size()),
                          budget, "construct_T");

    std::vector<Word> out;
    std::vector<Symbol> middle(mid, 0);
    for (const Word& w : borders) {
        std::fill(middle.begin(), middle.end(), Symbol{0});
        bool more = true;
        while (more) {
            if (count_occurrences(w.span(), std::span<const Symbol>(middle)) == 0) {
                std::vector<Symbol> glued;
                glued.reserve(n);
                glued.insert(glued.end(), w.symbols().begin(), w.symbols().end());
                glued.insert(glued.end(), middle.begin(), middle.end());
                glued.insert(glued.end(), w.symbols().begin(), w.symbols().end());
                out.emplace_back(std::move(glued), q);
            }
            more = advance(middle, 0, q);
        }
    }
    // w-major generation is already lexicographic: distinct border words
    // differ within the first m symbols.
    return out;
}

std::vector<RecursiveBoundRow> verify_recursive_bound(const CountTable& table,
                                                      std::uint32_t n,
                                                      std::uint64_t budget) {
    if (n < 2) throw std::invalid_argument("verify_recursive_bound: n must be >= 2");
    const CountRow& row = table.at(n);
    std::vector<RecursiveBoundRow> out;
    out.reserve(n - 1);
    for (std::uint32_t m = 1; m < n; ++m) {
        RecursiveBoundRow r;
        r.m = m;
        r.lhs = row.priv_by_border[m];
        if (2 * m > n) {
            r.overlapping_branch = true;
            r.rhs = bigint_pow(static_cast<std::uint64_t>(table.q), (n + 1) / 2);
        } else {
            MuOptions mu_opts;
            mu_opts.budget = budget;
            r.rhs = BigInt(table.at(m).privileged) *
                    mu(table.q, n - 2 * m, m, mu_opts).value;
        }
        r.ok = BigInt(r.lhs) <= r.rhs;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace privword
