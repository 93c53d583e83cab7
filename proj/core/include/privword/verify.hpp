#ifndef PRIVWORD_VERIFY_HPP
#define PRIVWORD_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "privword/bigint.hpp"
#include "privword/border.hpp"
#include "privword/budget.hpp"

namespace privword {

struct VerifyConfig {
    int q = 2;
    std::uint32_t max_n = 14;
    double kappa = 2.0;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::uint32_t seed = 12345;
};

// One value cell of a report: an exact integer, a real (printed with 6
// significant digits in tables, full precision in JSON), plain text, or
// nothing.
class ReportValue {
public:
    ReportValue() = default;
    static ReportValue integer(BigInt v);
    static ReportValue integer(std::uint64_t v) { return integer(BigInt(v)); }
    static ReportValue real(double v);
    static ReportValue text(std::string v);
    static ReportValue boolean(bool v) { return text(v ? "true" : "false"); }

    bool is_real() const { return kind_ == Kind::Real; }
    bool empty() const { return kind_ == Kind::None; }
    double real_value() const { return real_; }

    std::string table_string() const;  // 6 significant digits for reals
    std::string full_string() const;   // 17 significant digits for reals

private:
    enum class Kind { None, Integer, Real, Text };
    Kind kind_ = Kind::None;
    BigInt int_ = 0;
    double real_ = 0;
    std::string text_;
};

// One line of a verification report.  A record with an empty verdict is
// informational and never counts as a violation.
struct CheckRecord {
    std::string id;
    std::string params;  // "key=value key=value", comma-free by construction
    ReportValue lhs;
    ReportValue rhs;
    std::optional<bool> ok;
};

struct VerifyReport {
    std::string suite;
    VerifyConfig config;
    std::vector<CheckRecord> records;

    std::size_t checks_run() const;
    std::size_t violations() const;
};

// Suite names accepted by run_suite: definitions, partition,
// recursive-bound, avoidance, bounds, limits, all.
const std::vector<std::string>& suite_names();

// Runs one named verification suite (or every suite for "all").  Throws
// std::invalid_argument for unknown names or configs outside a suite's
// requirements, and BudgetError when the work guard trips.
VerifyReport run_suite(const std::string& suite, const VerifyConfig& config);

}  // namespace privword

#endif
