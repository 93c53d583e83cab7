#ifndef PRIVWORD_ERRORS_HPP
#define PRIVWORD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace privword {

// Thrown when an analytic evaluation leaves its validity domain, e.g. an
// iterated logarithm hits a non-positive intermediate value or an argument
// falls below a validity threshold.  Maps to CLI exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string msg, int level = -1)
        : std::runtime_error(std::move(msg)), level_(level) {}

    // Iterated-log level at which the domain was left, or -1 if not
    // level-related.
    int level() const noexcept { return level_; }

private:
    int level_;
};

// Thrown when an enumeration would exceed the configured work budget.
// Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string msg, double estimated_work, std::uint64_t budget)
        : std::runtime_error(std::move(msg)),
          estimated_work_(estimated_work),
          budget_(budget) {}

    double estimated_work() const noexcept { return estimated_work_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    double estimated_work_;
    std::uint64_t budget_;
};

}  // namespace privword

#endif
