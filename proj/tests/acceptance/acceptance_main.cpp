// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold.  Counting criteria are checked against from-scratch
// definitional recounts that share no code with the library paths.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "privword/avoidance.hpp"
#include "privword/border.hpp"
#include "privword/bounds.hpp"
#include "privword/census.hpp"
#include "privword/report_io.hpp"
#include "privword/verify.hpp"

using namespace privword;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %-28s %s\n", pass ? "PASS" : "FAIL", index, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
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

// Definitional helpers (direct scans, no shared code with the library).
std::vector<std::size_t> borders_direct(std::span<const Symbol> u) {
    std::vector<std::size_t> out;
    for (std::size_t len = 1; len < u.size(); ++len) {
        bool eq = true;
        for (std::size_t i = 0; i < len; ++i)
            if (u[i] != u[u.size() - len + i]) { eq = false; break; }
        if (eq) out.push_back(len);
    }
    return out;
}

std::uint64_t occ_direct(std::span<const Symbol> u, std::size_t m) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + m <= u.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < m; ++j)
            if (u[i + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

// ---------------------------------------------------------------- 1 & 2 ---
void criteria_oracle_and_maxborder() {
    const auto start = Clock::now();
    std::uint64_t oracle_mismatch = 0, maxborder_violations = 0, words = 0;
    for (const auto& [q, n_max] : std::vector<std::pair<int, std::uint32_t>>{
             {2, 14}, {3, 9}}) {
        detail::Classifier classifier, prefix_classifier;
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            std::vector<Symbol> word(n, 0);
            do {
                ++words;
                const std::span<const Symbol> u(word);
                const auto r = classifier.classify(u);
                if (r.privileged != is_privileged_oracle(u)) ++oracle_mismatch;
                if (n >= 2 && r.privileged &&
                    !prefix_classifier.classify(u.first(r.max_border)).privileged)
                    ++maxborder_violations;
            } while (next_word(word, q));
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "oracle equivalence", oracle_mismatch == 0 && elapsed <= 60.0,
           "binary n<=14 + ternary n<=9: " + std::to_string(words) +
               " words, mismatches=" + std::to_string(oracle_mismatch) +
               ", " + std::to_string(elapsed) + "s (limit 60s)");
    report(2, "maximal-border privilege", maxborder_violations == 0,
           "violations=" + std::to_string(maxborder_violations));
}

// -------------------------------------------------------------------- 3 ---
void criterion_census_vs_oracle() {
    bool pass = true;
    std::string note;
    const CountTable table = census_table(2, 14);

    if (table.at(1).privileged != 2 || table.at(2).privileged != 2 ||
        table.at(3).privileged != 4) {
        pass = false;
        note += " anchor-mismatch";
    }

    for (std::uint32_t n = 1; n <= 14 && pass; ++n) {
        std::uint64_t b = 0, c = 0;
        std::vector<std::uint64_t> by_border(n, 0);
        std::vector<Symbol> word(n, 0);
        do {
            const std::span<const Symbol> u(word);
            const auto borders = borders_direct(u);
            bool closed = false;
            for (std::size_t len : borders)
                if (occ_direct(u, len) == 2) { closed = true; break; }
            if (closed) ++c;
            if (is_privileged_oracle(u)) {
                ++b;
                if (n >= 2) ++by_border[borders.back()];
            }
        } while (next_word(word, 2));

        const CountRow& row = table.at(n);
        if (row.privileged != b || row.closed != c) pass = false;
        for (std::uint32_t m = 1; m < n; ++m)
            if (row.priv_by_border[m] != by_border[m]) pass = false;
        if (!pass) note += " n=" + std::to_string(n);
    }
    report(3, "census vs oracle recount", pass,
           "q=2 n<=14 exact equality of B, C, priv(n,m);" + note +
               " B(14)=" + std::to_string(table.at(14).privileged));
}

// -------------------------------------------------------------------- 4 ---
void criterion_partition() {
    const CountTable table = census_table(2, 18);
    bool pass = true;
    for (std::uint32_t n = 2; n <= 18; ++n)
        if (table.at(n).priv_border_sum() != table.at(n).privileged) pass = false;
    report(4, "partition identity", pass,
           "sum_m priv(n,m) = B(n) for 2<=n<=18, B(18)=" +
               std::to_string(table.at(18).privileged));
}

// -------------------------------------------------------------------- 5 ---
void criterion_recursive_bound() {
    const CountTable table = census_table(2, 18);
    std::uint64_t bound_violations = 0, subset_violations = 0;
    for (std::uint32_t n = 2; n <= 18; ++n)
        for (const auto& row : verify_recursive_bound(table, n))
            if (!row.ok) ++bound_violations;

    for (std::uint32_t n = 2; n <= 12; ++n) {
        std::map<std::uint32_t, std::vector<Word>> buckets;
        for (Word& w : privileged_words(2, n))
            buckets[border_array(w.span()).back()].push_back(std::move(w));
        for (std::uint32_t m = 1; 2 * m <= n; ++m) {
            const auto t = construct_T(2, n, m);
            if (const auto it = buckets.find(m); it != buckets.end())
                for (const Word& w : it->second)
                    if (!std::binary_search(t.begin(), t.end(), w))
                        ++subset_violations;
        }
    }
    report(5, "recursive bound", bound_violations == 0 && subset_violations == 0,
           "both branches 2<=n<=18: violations=" +
               std::to_string(bound_violations) +
               "; subset n<=12: violations=" + std::to_string(subset_violations));
}

// -------------------------------------------------------------------- 6 ---
void criterion_avoidance() {
    std::uint64_t dp_mismatch = 0;
    for (std::uint32_t m = 1; m <= 4; ++m) {
        std::vector<Symbol> pattern(m, 0);
        do {
            const Word w(pattern, 2);
            for (std::uint32_t n = 0; n <= 12; ++n) {
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
                } while (next_word(word, 2));
                if (count_avoiding(w, n) != BigInt(brute)) ++dp_mismatch;
            }
        } while (next_word(pattern, 2));
    }

    std::uint64_t bound_violations = 0;
    for (std::uint32_t m = 1; m <= 6; ++m)
        for (std::uint32_t n = 1; n <= 18; ++n)
            if (!count_leq_bound(mu(2, n, m).value, mu_upper_bound(2, n, m)))
                ++bound_violations;

    const MuResult anchor = mu(2, 4, 2);
    const bool anchor_ok = anchor.value == 8 &&
                           std::fabs(mu_upper_bound(2, 4, 2) - 9.0) < 1e-12;

    std::uint64_t monotone_violations = 0;
    for (std::uint32_t n = 1; n <= 16; ++n) {
        BigInt prev = mu(2, n, 1).value;
        for (std::uint32_t m = 2; m <= 8; ++m) {
            const BigInt cur = mu(2, n, m).value;
            if (prev > cur) ++monotone_violations;
            prev = cur;
        }
    }

    report(6, "avoidance",
           dp_mismatch == 0 && bound_violations == 0 && anchor_ok &&
               monotone_violations == 0,
           "dp mismatches=" + std::to_string(dp_mismatch) +
               ", bound violations=" + std::to_string(bound_violations) +
               ", mu(4,2)=" + anchor.value.str() +
               " bound=9.0, monotone violations=" +
               std::to_string(monotone_violations));
}

// -------------------------------------------------------------------- 7 ---
void criterion_bound_family() {
    bool identities = true;
    const double sample[10] = {100, 143, 200, 271, 314, 400, 500, 628, 800, 1000};
    for (double n : sample) {
        const double qn = std::pow(2.0, n);
        const double rhs1 = qn * std::log(n) / std::sqrt(n);
        if (std::fabs(rho(1, n) * qn - rhs1) > 1e-12 * rhs1) identities = false;
        const double rhs2 =
            qn * std::sqrt(std::log(n)) * std::log(std::log(n)) / std::sqrt(n);
        if (std::fabs(rho(2, n) * qn - rhs2) > 1e-12 * rhs2) identities = false;
    }

    bool thresholds = true;
    const std::uint64_t expected[4] = {2, 3, 16, 3814280};
    for (int j = 1; j <= 4; ++j) {
        const std::uint64_t nj = ln_positivity_threshold(j);
        if (nj != expected[j - 1]) thresholds = false;
        if (!(iterated_ln(j, double(nj)) > 0.0)) thresholds = false;
        if (iterated_ln(j, double(nj - 1)) > 0.0) thresholds = false;
    }

    report(7, "bound family", identities && thresholds,
           std::string("rho[1..2] q^n identities at 10 n (rel 1e-12): ") +
               (identities ? "ok" : "BAD") + "; thresholds {2,3,16,3814280}: " +
               (thresholds ? "ok" : "BAD"));
}

// -------------------------------------------------------------------- 8 ---
void criterion_fitted_constants() {
    const CountTable table = census_table(2, 20);
    const BoundParams params{2, 2.0};
    bool pass = true;
    std::string note;

    for (int j = 1; j <= 2; ++j) {
        const std::uint64_t nj = ln_positivity_threshold(j);
        const double alpha = empirical_alpha(j, table, params);
        note += " alpha_" + std::to_string(j) + "=" +
                std::to_string(alpha).substr(0, 7);
        std::printf("    slack ratios alpha_%d * rho[%d](n) q^n / B(n), "
                    "n in [%llu, 20]:\n      ",
                    j, j, static_cast<unsigned long long>(nj));
        for (const CountRow& row : table.rows) {
            if (row.n < nj) continue;
            const double bound =
                alpha * rho(j, row.n) * std::pow(2.0, double(row.n));
            if (!count_leq_bound(BigInt(row.privileged), bound)) pass = false;
            std::printf("%.3f ", bound / double(row.privileged));
        }
        std::printf("\n");

        const UpReport up = up_membership_check(
            [j](double x) { return rho(j, x); }, alpha,
            std::max<std::uint64_t>(nj, 2), 64, &table, params);
        if (!up.p1_all) pass = false;
        const std::uint64_t expect_p2 = j == 1 ? 7 : 18;
        if (!up.p2_holds_from || *up.p2_holds_from != expect_p2) pass = false;
        if (!up.p3_holds_from ||
            *up.p3_holds_from != std::max<std::uint64_t>(nj, 2))
            pass = false;
        note += " p2_from=" +
                (up.p2_holds_from ? std::to_string(*up.p2_holds_from)
                                  : std::string("never"));
    }
    report(8, "fitted bound constants", pass, "q=2 n<=20:" + note);
}

// -------------------------------------------------------------------- 9 ---
void criterion_limits() {
    const BoundParams params{2, 2.0};
    const std::vector<double> grid{1e6, 1e9, 1e12, 1e15};
    bool pass = true;
    for (int j = 1; j <= 3; ++j) {
        double prev = -1.0;
        for (const RatioPoint& pt : ratio_diagnostics(j, grid, params)) {
            const double dev = std::fabs(pt.y - 1.0);
            if (prev >= 0.0 && dev >= prev) pass = false;
            prev = dev;
        }
    }
    const auto pts = ratio_diagnostics(1, grid, params);
    const double limit = technical_ratio_limit(params);
    const double tech = pts.back().tech_ratio;
    if (std::fabs(tech - limit) > 0.25 * limit) pass = false;
    report(9, "limit diagnostics", pass,
           "|y_j - 1| strictly decreasing for j=1..3; tech ratio " +
               std::to_string(tech) + " vs sqrt(2 ln 2) = " +
               std::to_string(limit));
}

// ------------------------------------------------------------------- 10 ---
void criterion_determinism_performance() {
    VerifyConfig cfg;
    cfg.q = 2;
    cfg.max_n = 14;
    const auto verify_start = Clock::now();
    const VerifyReport all = run_suite("all", cfg);
    const double verify_elapsed = seconds_since(verify_start);
    const bool verify_ok = all.violations() == 0 && verify_elapsed <= 300.0;

    CensusOptions single;
    single.threads = 1;
    const auto t1 = Clock::now();
    const CountRow row1 = census(2, 22, single);
    const double e1 = seconds_since(t1);

    CensusOptions eight;
    eight.threads = 8;
    const auto t8 = Clock::now();
    const CountRow row8 = census(2, 22, eight);
    const double e8 = seconds_since(t8);

    CountTable a{2, {row1}}, b{2, {row8}};
    const bool identical = census_csv_string(a) == census_csv_string(b);
    const double speedup = e8 > 0 ? e1 / e8 : 0.0;
    const bool speedup_ok = speedup >= 3.0;

    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "verify-all: %zu checks, %zu violations, %.1fs (limit 300); "
                  "census n=22: 1thr=%.2fs 8thr=%.2fs speedup=%.2fx "
                  "(need >=3, hw threads=%u), outputs %s",
                  all.checks_run(), all.violations(), verify_elapsed, e1, e8,
                  speedup, std::thread::hardware_concurrency(),
                  identical ? "byte-identical" : "DIFFER");
    report(10, "determinism and performance",
           verify_ok && identical && speedup_ok, detail);
}

}  // namespace

int main() {
    std::printf("privword acceptance suite\n");
    criteria_oracle_and_maxborder();
    criterion_census_vs_oracle();
    criterion_partition();
    criterion_recursive_bound();
    criterion_avoidance();
    criterion_bound_family();
    criterion_fitted_constants();
    criterion_limits();
    criterion_determinism_performance();
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
