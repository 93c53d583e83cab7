#include "privword/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

#include "privword/avoidance.hpp"
#include "privword/bounds.hpp"
#include "privword/census.hpp"
#include "privword/errors.hpp"

namespace privword {

ReportValue ReportValue::integer(BigInt v) {
    ReportValue r;
    r.kind_ = Kind::Integer;
    r.int_ = std::move(v);
    return r;
}

ReportValue ReportValue::real(double v) {
    ReportValue r;
    r.kind_ = Kind::Real;
    r.real_ = v;
    return r;
}

ReportValue ReportValue::text(std::string v) {
    ReportValue r;
    r.kind_ = Kind::Text;
    r.text_ = std::move(v);
    return r;
}

std::string ReportValue::table_string() const {
    switch (kind_) {
        case Kind::None: return "-";
        case Kind::Integer: return int_.str();
        case Kind::Text: return text_;
        case Kind::Real: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6g", real_);
            return buf;
        }
    }
    return "-";
}

std::string ReportValue::full_string() const {
    if (kind_ != Kind::Real) return table_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", real_);
    return buf;
}

std::size_t VerifyReport::checks_run() const {
    std::size_t n = 0;
    for (const CheckRecord& r : records)
        if (r.ok.has_value()) ++n;
    return n;
}

std::size_t VerifyReport::violations() const {
    std::size_t n = 0;
    for (const CheckRecord& r : records)
        if (r.ok.has_value() && !*r.ok) ++n;
    return n;
}

namespace {

std::string strf(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

bool next_word(std::vector<Symbol>& word, int q) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] + 1 < q) {
            ++word[i];
            return true;
        }
        word[i] = 0;
    }
    return false;
}

// Definitional re-implementations used as in-suite oracles; they share no
// code with the library paths they check.
bool prefix_is_suffix(std::span<const Symbol> u, std::size_t len) {
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < len; ++i)
        if (u[i] != u[n - len + i]) return false;
    return true;
}

std::uint64_t scan_prefix_occurrences(std::span<const Symbol> u, std::size_t m) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + m <= u.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < m; ++j)
            if (u[i + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

std::vector<std::size_t> scan_border_lengths(std::span<const Symbol> u) {
    std::vector<std::size_t> out;
    for (std::size_t len = 1; len < u.size(); ++len)
        if (prefix_is_suffix(u, len)) out.push_back(len);
    return out;
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(const VerifyConfig& cfg) : cfg_(cfg) {}

    void check(std::string id, std::string params, ReportValue lhs,
               ReportValue rhs, bool ok) {
        records_.push_back({std::move(id), std::move(params), std::move(lhs),
                            std::move(rhs), ok});
    }

    void info(std::string id, std::string params, ReportValue lhs,
              ReportValue rhs = {}) {
        records_.push_back({std::move(id), std::move(params), std::move(lhs),
                            std::move(rhs), std::nullopt});
    }

    const CountTable& census_rows(std::uint32_t up_to) {
        if (!table_ || table_->max_n() < up_to) {
            CensusOptions opts{.budget = cfg_.budget,
                               .threads = cfg_.threads,
                               .symmetry_reduction = true};
            table_ = census_table(cfg_.q, up_to, opts);
        }
        return *table_;
    }

    const VerifyConfig& cfg() const { return cfg_; }
    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    VerifyConfig cfg_;
    std::optional<CountTable> table_;
    std::vector<CheckRecord> records_;
};

// ---------------------------------------------------------------------------
// definitions: closed/privileged equivalences, oracle agreement, the
// maximal-border privilege, border-array completeness, permutation closure.
// ---------------------------------------------------------------------------
void suite_definitions(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    if (cfg.max_n > cfg.oracle_cap)
        throw std::invalid_argument(
            "definitions suite: max_n exceeds the oracle length cap");
    require_within_budget(std::pow(double(cfg.q), double(cfg.max_n)),
                          cfg.budget, "definitions suite");

    detail::Classifier classifier, prefix_classifier;
    for (std::uint32_t n = 1; n <= cfg.max_n; ++n) {
        std::uint64_t oracle_mismatch = 0;
        std::uint64_t priv_not_closed = 0;
        std::uint64_t closed_equiv_mismatch = 0;
        std::uint64_t maxborder_not_priv = 0;
        std::uint64_t border_set_mismatch = 0;
        const bool check_border_sets = n <= 12;

        std::vector<Symbol> word(n, 0);
        do {
            const std::span<const Symbol> u(word);
            const auto r = classifier.classify(u);
            if (is_privileged_oracle(u, cfg.oracle_cap) != r.privileged)
                ++oracle_mismatch;
            if (n >= 2 && r.privileged && !r.closed) ++priv_not_closed;

            bool any_border_twice = false;
            for (std::size_t len : scan_border_lengths(u))
                if (scan_prefix_occurrences(u, len) == 2) {
                    any_border_twice = true;
                    break;
                }
            if (any_border_twice != r.closed) ++closed_equiv_mismatch;

            if (n >= 2 && r.privileged &&
                !prefix_classifier.classify(u.first(r.max_border)).privileged)
                ++maxborder_not_priv;

            if (check_border_sets) {
                const auto direct = scan_border_lengths(u);
                std::vector<std::size_t> via_chain;
                const auto ba = border_array(u);
                std::uint32_t b = ba.empty() ? 0 : ba.back();
                while (b > 0) {
                    via_chain.push_back(b);
                    b = ba[b - 1];
                }
                std::sort(via_chain.begin(), via_chain.end());
                if (via_chain != direct) ++border_set_mismatch;
            }
        } while (next_word(word, cfg.q));

        const std::string np = strf("n=%u", n);
        sb.check("def.oracle_agree", np, ReportValue::integer(oracle_mismatch),
                 ReportValue::integer(0), oracle_mismatch == 0);
        if (n >= 2) {
            sb.check("def.priv_implies_closed", np,
                     ReportValue::integer(priv_not_closed),
                     ReportValue::integer(0), priv_not_closed == 0);
            sb.check("def.maxborder_privileged", np,
                     ReportValue::integer(maxborder_not_priv),
                     ReportValue::integer(0), maxborder_not_priv == 0);
        }
        sb.check("def.closed_equivalence", np,
                 ReportValue::integer(closed_equiv_mismatch),
                 ReportValue::integer(0), closed_equiv_mismatch == 0);
        if (check_border_sets)
            sb.check("def.border_chain_complete", np,
                     ReportValue::integer(border_set_mismatch),
                     ReportValue::integer(0), border_set_mismatch == 0);
    }

    // Permutation closure on sampled words.
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, cfg.q - 1);
    for (std::uint32_t n = 1; n <= cfg.max_n; ++n) {
        std::uint64_t mismatch = 0;
        const int samples = 64;
        for (int s = 0; s < samples; ++s) {
            std::vector<Symbol> word(n);
            for (auto& sym : word) sym = static_cast<Symbol>(pick(rng));
            std::vector<Symbol> perm(cfg.q);
            for (int i = 0; i < cfg.q; ++i) perm[i] = static_cast<Symbol>(i);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Symbol> mapped(n);
            for (std::uint32_t i = 0; i < n; ++i) mapped[i] = perm[word[i]];
            const auto a = classifier.classify(word);
            const auto b = prefix_classifier.classify(mapped);
            if (a.privileged != b.privileged || a.closed != b.closed)
                ++mismatch;
        }
        sb.check("def.permutation_closure", strf("n=%u samples=64", n),
                 ReportValue::integer(mismatch), ReportValue::integer(0),
                 mismatch == 0);
    }
}

// ---------------------------------------------------------------------------
// partition: disjoint-union identity, B <= C, counts <= q^n, symmetry
// reduction equals full enumeration.
// ---------------------------------------------------------------------------
void suite_partition(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    const CountTable& table = sb.census_rows(cfg.max_n);

    for (const CountRow& row : table.rows) {
        const std::string np = strf("n=%u", row.n);
        if (row.n >= 2) {
            sb.check("part.border_sum", np,
                     ReportValue::integer(row.priv_border_sum()),
                     ReportValue::integer(row.privileged),
                     row.priv_border_sum() == row.privileged);
            sb.check("part.priv_le_closed", np,
                     ReportValue::integer(row.privileged),
                     ReportValue::integer(row.closed),
                     row.privileged <= row.closed);
        }
        const BigInt qn = bigint_pow(cfg.q, row.n);
        sb.check("part.counts_le_qn", np,
                 ReportValue::integer(std::max(row.privileged, row.closed)),
                 ReportValue::integer(qn),
                 BigInt(row.privileged) <= qn && BigInt(row.closed) <= qn);
    }

    const std::uint32_t full_max = std::min<std::uint32_t>(cfg.max_n, 10);
    for (std::uint32_t n = 1; n <= full_max; ++n) {
        CensusOptions reduced{.budget = cfg.budget,
                              .threads = cfg.threads,
                              .symmetry_reduction = true};
        CensusOptions full{.budget = cfg.budget,
                           .threads = cfg.threads,
                           .symmetry_reduction = false};
        const CountRow a = census(cfg.q, n, reduced);
        const CountRow b = census(cfg.q, n, full);
        const bool equal = a.privileged == b.privileged && a.closed == b.closed &&
                           a.priv_by_border == b.priv_by_border;
        sb.check("part.symmetry_reduction", strf("n=%u", n),
                 ReportValue::text(equal ? "equal" : "differs"),
                 ReportValue::text("equal"), equal);
    }
}

// ---------------------------------------------------------------------------
// recursive-bound: priv(n,m) <= q^ceil(n/2) or priv(m) mu(n-2m, m); the
// T(n,m) superset relation and its counting bound.
// ---------------------------------------------------------------------------
void suite_recursive_bound(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    const CountTable& table = sb.census_rows(cfg.max_n);

    for (std::uint32_t n = 2; n <= cfg.max_n; ++n) {
        for (const RecursiveBoundRow& row :
             verify_recursive_bound(table, n, cfg.budget)) {
            sb.check("rb.bound",
                     strf("n=%u m=%u branch=%s", n, row.m,
                          row.overlapping_branch ? "2m>n" : "2m<=n"),
                     ReportValue::integer(row.lhs), ReportValue::integer(row.rhs),
                     row.ok);
        }
    }

    const std::uint32_t set_max = std::min<std::uint32_t>(cfg.max_n, 12);
    for (std::uint32_t n = 2; n <= set_max; ++n) {
        // Privileged words of length n bucketed by maximal border length.
        std::map<std::uint32_t, std::vector<Word>> by_border;
        for (Word& w : privileged_words(cfg.q, n, cfg.budget)) {
            const auto ba = border_array(w.span());
            by_border[ba.back()].push_back(std::move(w));
        }
        for (std::uint32_t m = 1; 2 * m <= n; ++m) {
            const std::vector<Word> t_set = construct_T(cfg.q, n, m, cfg.budget);
            std::uint64_t missing = 0;
            const auto it = by_border.find(m);
            if (it != by_border.end()) {
                for (const Word& w : it->second)
                    if (!std::binary_search(t_set.begin(), t_set.end(), w))
                        ++missing;
            }
            const std::string params = strf("n=%u m=%u", n, m);
            sb.check("rb.subset", params, ReportValue::integer(missing),
                     ReportValue::integer(0), missing == 0);

            MuOptions mu_opts;
            mu_opts.budget = cfg.budget;
            const BigInt cap = BigInt(table.at(m).privileged) *
                               mu(cfg.q, n - 2 * m, m, mu_opts).value;
            sb.check("rb.t_count", params,
                     ReportValue::integer(BigInt(t_set.size())),
                     ReportValue::integer(cap), BigInt(t_set.size()) <= cap);
        }
    }
}

// ---------------------------------------------------------------------------
// avoidance: DP vs exhaustive, the closed-form mu bound, monotonicity,
// autocorrelation grouping.
// ---------------------------------------------------------------------------
void suite_avoidance(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    const int q = cfg.q;

    // Exhaustive cross-checks scan q^n words per pattern; keep that bounded
    // for larger alphabets.
    std::uint32_t brute_cap = 0;
    for (std::uint64_t work = q; work <= 4096; work *= q) ++brute_cap;
    const std::uint32_t brute_n =
        std::min({cfg.max_n, std::uint32_t{12}, brute_cap});
    for (std::uint32_t m = 1; m <= 4; ++m) {
        for (std::uint32_t n = 0; n <= brute_n; ++n) {
            std::uint64_t mismatch = 0;
            std::vector<Symbol> pattern(m, 0);
            do {
                const BigInt dp = count_avoiding(Word(pattern, q), n);
                // Direct enumeration of all q^n words.
                std::uint64_t brute = 0;
                std::vector<Symbol> word(n, 0);
                do {
                    bool contains = false;
                    for (std::size_t i = 0; !contains && i + m <= n; ++i) {
                        bool hit = true;
                        for (std::size_t j = 0; j < m; ++j)
                            if (word[i + j] != pattern[j]) { hit = false; break; }
                        contains = hit;
                    }
                    if (!contains) ++brute;
                } while (next_word(word, q));
                if (dp != BigInt(brute)) ++mismatch;
            } while (next_word(pattern, q));
            sb.check("av.dp_exhaustive", strf("m=%u n=%u", m, n),
                     ReportValue::integer(mismatch), ReportValue::integer(0),
                     mismatch == 0);
        }
    }

    MuOptions mu_opts;
    mu_opts.budget = cfg.budget;
    for (std::uint32_t m = 1; m <= std::min<std::uint32_t>(cfg.max_n, 6); ++m) {
        for (std::uint32_t n = 1; n <= cfg.max_n; ++n) {
            const MuResult r = mu(q, n, m, mu_opts);
            const double bound = mu_upper_bound(q, n, m);
            sb.check("av.mu_bound",
                     strf("m=%u n=%u witness=%s", m, n,
                          r.witness.to_letters().c_str()),
                     ReportValue::integer(r.value), ReportValue::real(bound),
                     count_leq_bound(r.value, bound));
        }
    }

    for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(cfg.max_n, 16); ++n) {
        std::uint64_t failures = 0;
        BigInt prev = mu(q, n, 1, mu_opts).value;
        for (std::uint32_t m = 2; m <= 8; ++m) {
            const BigInt cur = mu(q, n, m, mu_opts).value;
            if (prev > cur) ++failures;
            prev = cur;
        }
        sb.check("av.mu_monotone_m", strf("n=%u m_max=8", n),
                 ReportValue::integer(failures), ReportValue::integer(0),
                 failures == 0);
    }

    for (std::uint32_t m = 1; m <= 4; ++m) {
        std::uint64_t failures = 0;
        std::vector<Symbol> pattern(m, 0);
        do {
            const Word w(pattern, q);
            BigInt prev = count_avoiding(w, 0);
            for (std::uint32_t n = 1; n <= brute_n; ++n) {
                const BigInt cur = count_avoiding(w, n);
                if (cur < prev || cur > prev * q) ++failures;
                prev = cur;
            }
        } while (next_word(pattern, q));
        sb.check("av.growth", strf("m=%u n_max=%u", m, brute_n),
                 ReportValue::integer(failures), ReportValue::integer(0),
                 failures == 0);
    }

    for (std::uint32_t m = 1; m <= std::min<std::uint32_t>(cfg.max_n, 5); ++m) {
        const std::uint32_t n = std::min<std::uint32_t>(cfg.max_n, 14);
        MuOptions grouped = mu_opts;
        grouped.group_by_autocorrelation = true;
        const MuResult full = mu(q, n, m, mu_opts);
        const MuResult fast = mu(q, n, m, grouped);
        const bool equal =
            full.value == fast.value && full.witness == fast.witness;
        sb.check("av.autocorrelation_grouping", strf("m=%u n=%u", m, n),
                 ReportValue::integer(fast.value),
                 ReportValue::integer(full.value), equal);
    }

    for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(cfg.max_n, 10); ++n) {
        const MuResult r = mu(q, n, n, mu_opts);
        const BigInt expect = bigint_pow(q, n) - 1;
        sb.check("av.mu_full_length", strf("n=%u", n),
                 ReportValue::integer(r.value), ReportValue::integer(expect),
                 r.value == expect);
    }
}

// ---------------------------------------------------------------------------
// bounds: validity thresholds, fitted constants, the bound-function
// membership properties, and the prior closed-word bound shape.
// ---------------------------------------------------------------------------
void suite_bounds(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    const BoundParams params{cfg.q, cfg.kappa};
    const CountTable& table = sb.census_rows(cfg.max_n);

    for (int j = 1; j <= 4; ++j) {
        const std::uint64_t nj = ln_positivity_threshold(j);
        const bool above = iterated_ln(j, static_cast<double>(nj)) > 0.0;
        const bool below =
            nj < 2 || !(iterated_ln(j, static_cast<double>(nj - 1)) > 0.0);
        sb.check("bnd.threshold", strf("j=%d", j), ReportValue::integer(nj),
                 ReportValue::text("boundary"), above && below);
    }

    for (int j = 1; j <= 2; ++j) {
        const std::uint64_t nj = ln_positivity_threshold(j);
        if (cfg.max_n < nj) continue;
        const double alpha = empirical_alpha(j, table, params);
        sb.info("bnd.alpha", strf("j=%d range=[%llu,%u]", j,
                                  static_cast<unsigned long long>(nj), cfg.max_n),
                ReportValue::real(alpha));
        for (const CountRow& row : table.rows) {
            if (row.n < nj) continue;
            const double bound = alpha * rho(j, row.n) *
                                 std::pow(double(cfg.q), double(row.n));
            const double slack = bound / static_cast<double>(row.privileged);
            sb.check("bnd.priv_bound", strf("j=%d n=%u slack=%.6g", j, row.n, slack),
                     ReportValue::integer(row.privileged),
                     ReportValue::real(bound),
                     count_leq_bound(BigInt(row.privileged), bound));
        }

        const std::uint64_t up_lo = std::max<std::uint64_t>(nj, 2);
        const std::uint64_t up_hi = 64;
        const UpReport up = up_membership_check(
            [j](double x) { return rho(j, x); }, alpha, up_lo, up_hi, &table,
            params);
        for (const UpPoint& pt : up.points)
            if (!pt.p2)
                sb.info("bnd.up.p2_false",
                        strf("j=%d n=%llu", j,
                             static_cast<unsigned long long>(pt.n)),
                        ReportValue::boolean(pt.p2));
        sb.check("bnd.up.p1_census_range", strf("j=%d", j),
                 ReportValue::boolean(up.p1_all), ReportValue::boolean(true),
                 up.p1_all);
        sb.check("bnd.up.p2_holds_from",
                 strf("j=%d range=[%llu,%llu]", j,
                      static_cast<unsigned long long>(up_lo),
                      static_cast<unsigned long long>(up_hi)),
                 up.p2_holds_from
                     ? ReportValue::integer(*up.p2_holds_from)
                     : ReportValue::text("never"),
                 ReportValue::text("exists"), up.p2_holds_from.has_value());
        sb.check("bnd.up.p3_all",
                 strf("j=%d range=[%llu,%llu]", j,
                      static_cast<unsigned long long>(up_lo),
                      static_cast<unsigned long long>(up_hi)),
                 up.p3_holds_from
                     ? ReportValue::integer(*up.p3_holds_from)
                     : ReportValue::text("never"),
                 ReportValue::integer(up_lo),
                 up.p3_holds_from && *up.p3_holds_from == up_lo);
    }

    // Prior bound shape for closed words: C(n) <= c ln(n) q^n / sqrt(n) with
    // the smallest constant that fits the census.
    double c_hat = 0.0;
    for (const CountRow& row : table.rows) {
        if (row.n < 2) continue;
        const double shape = std::log(double(row.n)) *
                             std::pow(double(cfg.q), double(row.n)) /
                             std::sqrt(double(row.n));
        c_hat = std::max(c_hat, static_cast<double>(row.closed) / shape);
    }
    sb.info("bnd.closed_bound.c_hat", strf("range=[2,%u]", cfg.max_n),
            ReportValue::real(c_hat));
    for (const CountRow& row : table.rows) {
        if (row.n < 2) continue;
        const double bound = c_hat * std::log(double(row.n)) *
                             std::pow(double(cfg.q), double(row.n)) /
                             std::sqrt(double(row.n));
        sb.check("bnd.closed_bound", strf("n=%u", row.n),
                 ReportValue::integer(row.closed), ReportValue::real(bound),
                 count_leq_bound(BigInt(row.closed), bound));
    }

    std::uint64_t hbar_violations = 0;
    for (double n = 16; n <= 1e6; n *= 2)
        if (threshold_hbar(n, params) > threshold_h(n, params))
            ++hbar_violations;
    sb.check("bnd.hbar_le_h", "grid=16..1e6 factor=2",
             ReportValue::integer(hbar_violations), ReportValue::integer(0),
             hbar_violations == 0);

    // rho[j] / rho[j+1] = sqrt(ln^[j](n)) / ln^[j+1](n) for every j, a
    // function that is increasing only once ln^[j](n) > e^2.  That regime is
    // representable for j = 1 (n > e^(e^2) ~ 1619) but sits beyond double
    // range for j >= 2, so the divergence is checked directly for j = 1 and
    // via the shared structural identity plus pointwise improvement for the
    // higher levels.
    {
        bool increasing = true;
        double prev = -1.0;
        for (int k = 0; k < 6; ++k) {
            const double n = 2000.0 * std::pow(10.0, k);
            const double ratio = rho(1, n) / rho(2, n);
            if (prev >= 0.0 && ratio <= prev) increasing = false;
            prev = ratio;
        }
        sb.check("bnd.rho_ratio_increasing", "j=1 grid=2e3..2e8",
                 ReportValue::boolean(increasing), ReportValue::boolean(true),
                 increasing);
    }
    for (int j = 1; j <= 3; ++j) {
        const double start = std::max<double>(
            16.0, static_cast<double>(ln_positivity_threshold(j + 1)) + 1.0);
        bool improves = true;
        bool structural = true;
        for (int k = 0; k < 6; ++k) {
            const double n = start * std::pow(10.0, k);
            const double ratio = rho(j, n) / rho(j + 1, n);
            if (!(ratio > 1.0)) improves = false;
            const double expected = std::sqrt(iterated_ln(j, n)) /
                                    iterated_ln(j + 1, n);
            if (std::fabs(ratio - expected) > 1e-9 * std::fabs(expected))
                structural = false;
        }
        sb.check("bnd.rho_ratio_gt_1", strf("j=%d", j),
                 ReportValue::boolean(improves), ReportValue::boolean(true),
                 improves);
        sb.check("bnd.rho_ratio_identity", strf("j=%d", j),
                 ReportValue::boolean(structural), ReportValue::boolean(true),
                 structural);
    }
}

// ---------------------------------------------------------------------------
// limits: the two ratio diagnostics on a fixed geometric grid.
// ---------------------------------------------------------------------------
void suite_limits(SuiteBuilder& sb) {
    const VerifyConfig& cfg = sb.cfg();
    const BoundParams params{cfg.q, cfg.kappa};
    const std::vector<double> grid{1e6, 1e9, 1e12, 1e15};

    for (int j = 1; j <= 3; ++j) {
        const auto pts = ratio_diagnostics(j, grid, params);
        bool decreasing = true;
        double prev_dev = -1.0;
        for (const RatioPoint& pt : pts) {
            sb.info("lim.y",
                    strf("j=%d n=%.0e hbar=%llu strict_domain=%s", j, pt.n,
                         static_cast<unsigned long long>(pt.hbar),
                         pt.strict_domain ? "true" : "false"),
                    ReportValue::real(pt.y));
            const double dev = std::fabs(pt.y - 1.0);
            if (prev_dev >= 0.0 && dev >= prev_dev) decreasing = false;
            prev_dev = dev;
        }
        sb.check("lim.y_deviation_decreasing", strf("j=%d", j),
                 ReportValue::boolean(decreasing), ReportValue::boolean(true),
                 decreasing);
    }

    const auto pts = ratio_diagnostics(1, grid, params);
    for (const RatioPoint& pt : pts)
        sb.info("lim.tech_ratio", strf("n=%.0e", pt.n),
                ReportValue::real(pt.tech_ratio));
    const double limit = technical_ratio_limit(params);
    const double at_end = pts.back().tech_ratio;
    sb.check("lim.tech_ratio_within_25pct", strf("n=%.0e limit=%.6g", 1e15, limit),
             ReportValue::real(at_end), ReportValue::real(limit),
             std::fabs(at_end - limit) <= 0.25 * limit);
}

using SuiteFn = void (*)(SuiteBuilder&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"definitions", suite_definitions},
        {"partition", suite_partition},
        {"recursive-bound", suite_recursive_bound},
        {"avoidance", suite_avoidance},
        {"bounds", suite_bounds},
        {"limits", suite_limits},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_registry()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

VerifyReport run_suite(const std::string& suite, const VerifyConfig& config) {
    VerifyReport report;
    report.suite = suite;
    report.config = config;

    SuiteBuilder sb(config);
    if (suite == "all") {
        for (const auto& [name, fn] : suite_registry()) fn(sb);
    } else {
        bool found = false;
        for (const auto& [name, fn] : suite_registry()) {
            if (name == suite) {
                fn(sb);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("unknown verify suite: " + suite);
    }
    report.records = sb.take();
    return report;
}

}  // namespace privword
