#ifndef PRIVWORD_BOUNDS_HPP
#define PRIVWORD_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "privword/census.hpp"
#include "privword/errors.hpp"

namespace privword {

struct BoundParams {
    int q = 2;
    double kappa = 2.0;  // must be > 1

    double beta() const;  // 1 / ln q
};

// j-fold iterated natural logarithm; level 0 is the identity.  The result
// may be non-positive; a DomainError fires only when some intermediate level
// needed as a logarithm argument is itself non-positive, and names that
// level.
double iterated_ln(int level, double x);

// N_j: the smallest integer n with iterated_ln(j, n) > 0.  N_1 = 2, N_2 = 3,
// N_3 = 16, N_4 = 3814280; levels >= 5 exceed the representable range and
// throw DomainError.
std::uint64_t ln_positivity_threshold(int level);

// sigma[1](n) = sqrt(ln n); sigma[2](n) = ln ln n;
// sigma[j](n) = ln^[j](n) * prod_{i=2}^{j-1} sqrt(ln^[i](n)) for j >= 3.
// rho[j](n) = sigma[j](n) * sqrt(ln n) / sqrt(n); rho[j](n) q^n is the
// bound shape for the number of privileged words.  Both require
// n >= ln_positivity_threshold(level) so that every factor is positive,
// and throw DomainError below it.
double sigma(int level, double n);
double rho(int level, double n);

// Unguarded evaluation used by the limit diagnostics: values below the
// validity threshold are returned as long as no logarithm or square root
// leaves its own domain (the leading ln^[j] factor may be negative).
double sigma_unchecked(int level, double x);

// omega(n) = (ln n - ln ln n) / ln q.  Requires n >= 2.
double omega(double n, const BoundParams& params);

// h(n) = floor(beta * ln n): the border length below which avoidance
// clamps word counts to roughly q^(n - h(n)).  Requires n >= 2.
std::int64_t threshold_h(double n, const BoundParams& params);

// hbar(n) = max{1, floor(omega(n) / kappa)}: the cut between "short" and
// "long" maximal borders.  Requires n >= 2; always >= 1.
std::int64_t threshold_hbar(double n, const BoundParams& params);

// Largest ratio B(n) / (rho[j](n) q^n) over the census rows with
// n >= ln_positivity_threshold(j).  With this constant the bound
// B(n) <= alpha * rho[j](n) q^n holds on the covered range by construction;
// the value itself is the scientific output.  Throws std::invalid_argument
// when no row qualifies.
double empirical_alpha(int level, const CountTable& table,
                       const BoundParams& params);

// Multiplies a float bound by (1 + 1e-9) before comparing against an exact
// count, so float error can never report a false violation.
bool count_leq_bound(const BigInt& count, double bound);

struct UpPoint {
    std::uint64_t n = 0;
    std::optional<bool> p1;  // q^n rho(n) >= B(n); empty where census has no row
    bool p2 = false;         // rho(n) >= rho(n+1)
    bool p3 = false;         // q^n rho(n) <= q^(n+1) rho(n+1)
};

struct UpReport {
    std::uint64_t n_lo = 0, n_hi = 0;
    std::vector<UpPoint> points;
    // Smallest n such that the property holds at every point from n to n_hi;
    // empty when it fails at n_hi itself.
    std::optional<std::uint64_t> p2_holds_from;
    std::optional<std::uint64_t> p3_holds_from;
    bool p1_all = true;  // over the points where census data exists
};

// Evaluates the three membership properties of the bound-function set for
// rho_fn = alpha * rho[j] (or any candidate) on the integer range
// [n_lo, n_hi].  census may be null when only p2/p3 are of interest.
UpReport up_membership_check(const std::function<double(double)>& rho_fn,
                             double alpha, std::uint64_t n_lo,
                             std::uint64_t n_hi, const CountTable* census,
                             const BoundParams& params);

struct RatioPoint {
    double n = 0;
    std::uint64_t hbar = 0;
    // sigma[j](hbar(n)) * sqrt(ln hbar(n)) / sigma[j+1](n); tends to 1.
    double y = 0;
    // sqrt(ln n) / sqrt(hbar(n)); tends to sqrt(kappa ln q).
    double tech_ratio = 0;
    // n >= N_{j+1} and hbar(n) >= N_j, i.e. the strict validity domain.
    bool strict_domain = false;
};

// Evaluates both limit diagnostics on the grid.  Points outside the strict
// validity domain are still evaluated (flagged) so that convergence can be
// observed from below; errors propagate from iterated_ln only.
std::vector<RatioPoint> ratio_diagnostics(int level,
                                          const std::vector<double>& grid,
                                          const BoundParams& params);

// sqrt(kappa ln q), the limit of tech_ratio.
double technical_ratio_limit(const BoundParams& params);

}  // namespace privword

#endif
