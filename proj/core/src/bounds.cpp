#include "privword/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace privword {

double BoundParams::beta() const { return 1.0 / std::log(static_cast<double>(q)); }

namespace {

void validate(const BoundParams& params) {
    if (params.q < 2) throw std::invalid_argument("BoundParams: q must be >= 2");
    if (!(params.kappa > 1.0))
        throw std::invalid_argument("BoundParams: kappa must be > 1");
}

[[noreturn]] void domain_fail(int level, double value) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "iterated_ln: ln^[%d] = %.6g is non-positive, next level "
                  "undefined",
                  level, value);
    throw DomainError(msg, level);
}

}  // namespace

double iterated_ln(int level, double x) {
    if (level < 0) throw std::invalid_argument("iterated_ln: negative level");
    for (int k = 1; k <= level; ++k) {
        if (!(x > 0.0)) domain_fail(k - 1, x);
        x = std::log(x);
    }
    return x;
}

std::uint64_t ln_positivity_threshold(int level) {
    if (level < 1) throw std::invalid_argument("ln_positivity_threshold: level must be >= 1");
    if (level >= 5)
        throw DomainError(
            "ln_positivity_threshold: N_5 and beyond exceed the representable "
            "integer range",
            level);
    // N_j sits just above the (j-1)-fold iterated exponential of 1.  Seed
    // with the float estimate, then settle the boundary exactly.
    double tower = 1.0;
    for (int i = 1; i < level; ++i) tower = std::exp(tower);
    std::uint64_t n = static_cast<std::uint64_t>(std::floor(tower)) + 1;
    while (n > 2 && iterated_ln(level, static_cast<double>(n - 1)) > 0.0) --n;
    while (!(iterated_ln(level, static_cast<double>(n)) > 0.0)) ++n;
    return n;
}

double sigma_unchecked(int level, double x) {
    if (level < 1) throw std::invalid_argument("sigma: level must be >= 1");
    if (level == 1) {
        const double l = iterated_ln(1, x);
        if (l < 0.0) throw DomainError("sigma: sqrt of negative ln", 1);
        return std::sqrt(l);
    }
    // Compute the ladder ln^[1..level](x) once.
    double value = iterated_ln(level, x);
    double ladder = iterated_ln(2, x);
    for (int i = 2; i < level; ++i) {
        if (ladder < 0.0) throw DomainError("sigma: sqrt of negative factor", i);
        value *= std::sqrt(ladder);
        ladder = std::log(ladder);
    }
    return value;
}

double sigma(int level, double n) {
    const std::uint64_t threshold = ln_positivity_threshold(level);
    if (n < static_cast<double>(threshold)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "sigma/rho level %d requires n >= %llu (got %.6g)", level,
                      static_cast<unsigned long long>(threshold), n);
        throw DomainError(msg, level);
    }
    return sigma_unchecked(level, n);
}

double rho(int level, double n) {
    return sigma(level, n) * std::sqrt(std::log(n)) / std::sqrt(n);
}

double omega(double n, const BoundParams& params) {
    validate(params);
    if (n < 2.0) throw DomainError("omega: requires n >= 2", 1);
    const double ln_n = std::log(n);
    return (ln_n - std::log(ln_n)) / std::log(static_cast<double>(params.q));
}

std::int64_t threshold_h(double n, const BoundParams& params) {
    validate(params);
    if (n < 2.0) throw DomainError("h: requires n >= 2", 1);
    return static_cast<std::int64_t>(std::floor(params.beta() * std::log(n)));
}

std::int64_t threshold_hbar(double n, const BoundParams& params) {
    const double w = omega(n, params);
    const std::int64_t floored =
        static_cast<std::int64_t>(std::floor(w / params.kappa));
    return floored < 1 ? 1 : floored;
}

double empirical_alpha(int level, const CountTable& table,
                       const BoundParams& params) {
    validate(params);
    const std::uint64_t threshold = ln_positivity_threshold(level);
    double best = -1.0;
    for (const CountRow& row : table.rows) {
        if (row.n < threshold) continue;
        const double qn = std::pow(static_cast<double>(params.q),
                                   static_cast<double>(row.n));
        const double denom = rho(level, static_cast<double>(row.n)) * qn;
        const double ratio = static_cast<double>(row.privileged) / denom;
        if (ratio > best) best = ratio;
    }
    if (best < 0.0)
        throw std::invalid_argument(
            "empirical_alpha: census covers no n above the validity threshold");
    return best;
}

bool count_leq_bound(const BigInt& count, double bound) {
    return to_double(count) <= bound * (1.0 + 1e-9);
}

UpReport up_membership_check(const std::function<double(double)>& rho_fn,
                             double alpha, std::uint64_t n_lo,
                             std::uint64_t n_hi, const CountTable* census,
                             const BoundParams& params) {
    validate(params);
    if (n_lo > n_hi)
        throw std::invalid_argument("up_membership_check: empty range");
    UpReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    const double q = static_cast<double>(params.q);
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        UpPoint pt;
        pt.n = n;
        const double cur = alpha * rho_fn(static_cast<double>(n));
        const double nxt = alpha * rho_fn(static_cast<double>(n + 1));
        pt.p2 = cur >= nxt;
        // q^n rho(n) <= q^(n+1) rho(n+1), compared as rho(n) <= q rho(n+1)
        // to keep q^n out of the float range.
        pt.p3 = cur <= q * nxt;
        if (census) {
            if (const CountRow* row = census->find(static_cast<std::uint32_t>(n))) {
                const double bound = cur * std::pow(q, static_cast<double>(n));
                pt.p1 = count_leq_bound(BigInt(row->privileged), bound);
                if (pt.p1 == false) report.p1_all = false;
            }
        }
        report.points.push_back(pt);
    }
    auto holds_from = [&](auto&& get) -> std::optional<std::uint64_t> {
        std::optional<std::uint64_t> from;
        for (std::size_t i = report.points.size(); i-- > 0;) {
            if (!get(report.points[i])) break;
            from = report.points[i].n;
        }
        return from;
    };
    report.p2_holds_from = holds_from([](const UpPoint& p) { return p.p2; });
    report.p3_holds_from = holds_from([](const UpPoint& p) { return p.p3; });
    return report;
}

std::vector<RatioPoint> ratio_diagnostics(int level,
                                          const std::vector<double>& grid,
                                          const BoundParams& params) {
    validate(params);
    if (level < 1) throw std::invalid_argument("ratio_diagnostics: level must be >= 1");
    std::vector<RatioPoint> out;
    out.reserve(grid.size());
    const std::uint64_t n_threshold =
        level + 1 <= 4 ? ln_positivity_threshold(level + 1) : 0;
    const std::uint64_t h_threshold = ln_positivity_threshold(level);
    for (double n : grid) {
        RatioPoint pt;
        pt.n = n;
        pt.hbar = static_cast<std::uint64_t>(threshold_hbar(n, params));
        const double hb = static_cast<double>(pt.hbar);
        pt.y = sigma_unchecked(level, hb) * std::sqrt(std::log(hb)) /
               sigma_unchecked(level + 1, n);
        pt.tech_ratio = std::sqrt(std::log(n)) / std::sqrt(hb);
        pt.strict_domain = n_threshold != 0 &&
                           n >= static_cast<double>(n_threshold) &&
                           pt.hbar >= h_threshold;
        out.push_back(pt);
    }
    return out;
}

double technical_ratio_limit(const BoundParams& params) {
    validate(params);
    return std::sqrt(params.kappa * std::log(static_cast<double>(params.q)));
}

}  // namespace privword
