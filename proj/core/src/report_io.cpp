#include "privword/report_io.hpp"

#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "privword/version.hpp"

namespace privword {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_meta_csv(std::ostream& os, const char* kind) {
    os << "# meta: tool=privword version=" << kVersion << " report=" << kind
       << "\n";
    os << "# meta: generated=" << utc_timestamp() << "\n";
}

ordered_json meta_json(const char* kind) {
    return ordered_json{{"tool", "privword"},
                        {"version", kVersion},
                        {"report", kind},
                        {"generated", utc_timestamp()}};
}

std::string config_line(const VerifyConfig& c) {
    std::ostringstream os;
    os << "q=" << c.q << " max_n=" << c.max_n << " kappa=" << c.kappa
       << " budget=" << c.budget << " threads=" << c.threads
       << " oracle_cap=" << c.oracle_cap << " seed=" << c.seed;
    return os.str();
}

ordered_json config_json(const VerifyConfig& c) {
    return ordered_json{{"q", c.q},           {"max_n", c.max_n},
                        {"kappa", c.kappa},   {"budget", c.budget},
                        {"threads", c.threads}, {"oracle_cap", c.oracle_cap},
                        {"seed", c.seed}};
}

}  // namespace

void write_census_csv(const CountTable& table, std::ostream& os,
                      bool include_meta) {
    if (include_meta) write_meta_csv(os, "census");
    const std::uint32_t max_n = table.max_n();
    os << "n,q,B,C";
    for (std::uint32_t m = 1; m + 1 <= max_n; ++m) os << ",m" << m;
    os << "\n";
    for (const CountRow& row : table.rows) {
        os << row.n << "," << row.q << "," << row.privileged << ","
           << row.closed;
        for (std::uint32_t m = 1; m + 1 <= max_n; ++m) {
            const std::uint64_t c =
                m < row.priv_by_border.size() ? row.priv_by_border[m] : 0;
            os << "," << c;
        }
        os << "\n";
    }
}

std::string census_csv_string(const CountTable& table, bool include_meta) {
    std::ostringstream os;
    write_census_csv(table, os, include_meta);
    return os.str();
}

void write_census_json(const CountTable& table, std::ostream& os) {
    ordered_json doc;
    doc["meta"] = meta_json("census");
    doc["q"] = table.q;
    ordered_json rows = ordered_json::array();
    for (const CountRow& row : table.rows) {
        ordered_json r{{"n", row.n},
                       {"q", row.q},
                       {"B", row.privileged},
                       {"C", row.closed}};
        ordered_json borders = ordered_json::object();
        for (std::size_t m = 1; m < row.priv_by_border.size(); ++m)
            borders["m" + std::to_string(m)] = row.priv_by_border[m];
        r["priv_by_border"] = std::move(borders);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

void write_verify_csv(const VerifyReport& report, std::ostream& os,
                      bool include_meta) {
    if (include_meta) write_meta_csv(os, "verify");
    os << "# suite: " << report.suite << "\n";
    os << "# config: " << config_line(report.config) << "\n";
    os << "check_id,params,lhs,rhs,ok\n";
    for (const CheckRecord& rec : report.records) {
        os << rec.id << "," << rec.params << "," << rec.lhs.table_string()
           << "," << rec.rhs.table_string() << ",";
        if (rec.ok.has_value())
            os << (*rec.ok ? "pass" : "FAIL");
        else
            os << "-";
        os << "\n";
    }
    os << "# summary: checks=" << report.checks_run()
       << " violations=" << report.violations() << "\n";
}

void write_verify_json(const VerifyReport& report, std::ostream& os) {
    ordered_json doc;
    doc["meta"] = meta_json("verify");
    doc["suite"] = report.suite;
    doc["config"] = config_json(report.config);
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& rec : report.records) {
        ordered_json c{{"id", rec.id}, {"params", rec.params}};
        c["lhs"] = rec.lhs.full_string();
        c["rhs"] = rec.rhs.full_string();
        if (rec.ok.has_value())
            c["ok"] = *rec.ok;
        else
            c["ok"] = nullptr;
        checks.push_back(std::move(c));
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = ordered_json{{"checks", report.checks_run()},
                                  {"violations", report.violations()}};
    os << doc.dump(2) << "\n";
}

}  // namespace privword
