#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "privword/errors.hpp"
#include "privword/report_io.hpp"
#include "privword/verify.hpp"

using namespace privword;

TEST_CASE("every suite runs clean at desk scale") {
    VerifyConfig cfg;
    cfg.q = 2;

    cfg.max_n = 10;
    CHECK(run_suite("definitions", cfg).violations() == 0);

    cfg.max_n = 12;
    CHECK(run_suite("partition", cfg).violations() == 0);
    CHECK(run_suite("recursive-bound", cfg).violations() == 0);
    CHECK(run_suite("avoidance", cfg).violations() == 0);

    cfg.max_n = 14;
    CHECK(run_suite("bounds", cfg).violations() == 0);
    CHECK(run_suite("limits", cfg).violations() == 0);
}

TEST_CASE("the ternary definitions sweep is clean too") {
    VerifyConfig cfg;
    cfg.q = 3;
    cfg.max_n = 7;
    CHECK(run_suite("definitions", cfg).violations() == 0);
}

TEST_CASE("aggregate suite concatenates all records") {
    VerifyConfig cfg;
    cfg.max_n = 8;
    const VerifyReport all = run_suite("all", cfg);
    CHECK(all.violations() == 0);
    CHECK(all.checks_run() > 100);
    CHECK(all.suite == "all");
}

TEST_CASE("suite names and config validation") {
    CHECK_THROWS_AS(run_suite("bogus", VerifyConfig{}), std::invalid_argument);
    VerifyConfig cfg;
    cfg.max_n = 25;  // above the oracle cap
    CHECK_THROWS_AS(run_suite("definitions", cfg), std::invalid_argument);
    const auto& names = suite_names();
    CHECK(names.size() == 7);
    CHECK(names.back() == "all");

    VerifyConfig tiny;
    tiny.max_n = 20;
    tiny.budget = 1000;
    CHECK_THROWS_AS(run_suite("partition", tiny), BudgetError);
}

TEST_CASE("reports are reproducible byte for byte outside the meta lines") {
    VerifyConfig cfg;
    cfg.max_n = 8;
    const VerifyReport a = run_suite("bounds", cfg);
    const VerifyReport b = run_suite("bounds", cfg);
    std::ostringstream sa, sb;
    write_verify_csv(a, sa, /*include_meta=*/false);
    write_verify_csv(b, sb, /*include_meta=*/false);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("check_id,params,lhs,rhs,ok\n") != std::string::npos);
    CHECK(sa.str().find("# summary: checks=") != std::string::npos);
}

TEST_CASE("JSON reports parse and carry the config echo and summary") {
    VerifyConfig cfg;
    cfg.max_n = 6;
    cfg.seed = 777;
    const VerifyReport rep = run_suite("limits", cfg);
    std::ostringstream os;
    write_verify_json(rep, os);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["suite"] == "limits");
    CHECK(doc["config"]["q"] == 2);
    CHECK(doc["config"]["seed"] == 777);
    CHECK(doc["summary"]["violations"] == 0);
    CHECK(doc["checks"].is_array());
    CHECK(doc["checks"].size() == rep.records.size());
    CHECK(doc["meta"]["tool"] == "privword");
}

TEST_CASE("violations count exactly the failed asserts") {
    VerifyReport rep;
    rep.records.push_back({"a", "", ReportValue::integer(1),
                           ReportValue::integer(1), true});
    rep.records.push_back({"b", "", ReportValue::integer(1),
                           ReportValue::integer(2), false});
    rep.records.push_back({"c", "", ReportValue::real(0.5), {}, std::nullopt});
    CHECK(rep.checks_run() == 2);
    CHECK(rep.violations() == 1);
}

TEST_CASE("report values format with six significant digits in tables") {
    const ReportValue v = ReportValue::real(0.46051701859880917);
    CHECK(v.table_string() == "0.460517");
    CHECK(v.full_string() == "0.46051701859880917");
    CHECK(ReportValue::integer(std::uint64_t{1} << 40).table_string() ==
          "1099511627776");
    CHECK(ReportValue().table_string() == "-");
}
