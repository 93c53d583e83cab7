#ifndef PRIVWORD_BUDGET_HPP
#define PRIVWORD_BUDGET_HPP

#include <cstdint>

#include "privword/errors.hpp"

namespace privword {

// Soft cap on enumeration work, measured in words visited (q^n and friends).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 34;

// Throws BudgetError when the estimated work exceeds the budget.
void require_within_budget(double estimated_work, std::uint64_t budget,
                           const char* what);

}  // namespace privword

#endif
