#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privword/border.hpp"
#include "privword/bounds.hpp"
#include "privword/census.hpp"
#include "privword/errors.hpp"
#include "privword/report_io.hpp"
#include "privword/verify.hpp"
#include "privword/version.hpp"

namespace {

using namespace privword;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct OutputTarget {
    std::string path;  // empty = stdout

    template <typename Fn>
    void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream os(path, std::ios::binary);
            if (!os) throw std::invalid_argument("cannot open output file: " + path);
            fn(os);
        }
    }
};

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int run_check(const std::string& text, int q_flag) {
    const Word word = Word::from_letters(text, q_flag);
    const BorderChain chain = compute_border_chain(word);

    std::cout << "word: \"" << word.to_letters() << "\"\n";
    std::cout << "q: " << word.q() << "\n";
    std::cout << "length: " << word.size() << "\n";
    std::cout << "border_array: [";
    for (std::size_t i = 0; i < chain.border_array.size(); ++i)
        std::cout << (i ? "," : "") << chain.border_array[i];
    std::cout << "]\n";
    std::cout << "chain: ";
    if (chain.chain.empty()) {
        std::cout << "(no borders)\n";
    } else {
        std::cout << "[";
        for (std::size_t k = 0; k < chain.chain.size(); ++k) {
            const Word prefix = word.prefix(chain.chain[k]);
            std::cout << (k ? ", " : "") << chain.chain[k] << ":\""
                      << prefix.to_letters() << "\"x" << chain.occ[k];
        }
        std::cout << "]\n";
    }
    std::cout << "closed: " << (is_closed(word) ? "true" : "false") << "\n";
    std::cout << "privileged: " << (is_privileged(word) ? "true" : "false")
              << "\n";
    return kExitOk;
}

int run_census(int q, std::uint32_t max_n, unsigned threads,
               std::uint64_t budget, const std::string& format,
               const OutputTarget& out) {
    const CensusOptions opts{.budget = budget,
                             .threads = threads,
                             .symmetry_reduction = true};
    const CountTable table = census_table(q, max_n, opts);
    out.write([&](std::ostream& os) {
        if (format == "json")
            write_census_json(table, os);
        else
            write_census_csv(table, os);
    });
    return kExitOk;
}

int run_verify(const std::string& suite, const VerifyConfig& config,
               const std::string& format, const OutputTarget& out) {
    const VerifyReport report = run_suite(suite, config);
    out.write([&](std::ostream& os) {
        if (format == "json")
            write_verify_json(report, os);
        else
            write_verify_csv(report, os);
    });
    if (!out.path.empty())
        std::cerr << "verify " << suite << ": checks=" << report.checks_run()
                  << " violations=" << report.violations() << " -> " << out.path
                  << "\n";
    return report.violations() == 0 ? kExitOk : kExitViolations;
}

int run_bounds(int q, int level, const std::vector<std::uint64_t>& ns,
               double kappa) {
    const BoundParams params{q, kappa};
    std::cout << "n,omega,h,hbar,sigma,rho,log10_rho_qn\n";
    for (std::uint64_t n : ns) {
        const double nd = static_cast<double>(n);
        const double s = sigma(level, nd);
        const double r = rho(level, nd);
        const double log10_bound =
            std::log10(r) + nd * std::log10(static_cast<double>(q));
        std::cout << n << "," << fmt6(omega(nd, params)) << ","
                  << threshold_h(nd, params) << "," << threshold_hbar(nd, params)
                  << "," << fmt6(s) << "," << fmt6(r) << ","
                  << fmt6(log10_bound) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"privword: privileged and closed word census, factor "
                 "avoidance counts, and upper-bound verification"};
    app.set_version_flag("--version", privword::kVersion);
    app.require_subcommand(1);

    // check ------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "Classify one word (border array, chain, closed, privileged)");
    std::string check_word;
    int check_q = -1;
    check->add_option("word", check_word,
                      "word over letters a..z (may be empty)");
    check->add_option("--q", check_q, "alphabet size (default: inferred)");

    // census -----------------------------------------------------------
    auto* census_cmd =
        app.add_subcommand("census", "Exact counts B(n), C(n), priv(n,m)");
    int census_q = 2;
    std::uint32_t census_max_n = 8;
    unsigned threads = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string census_format = "csv";
    std::string census_out;
    census_cmd->add_option("--q", census_q, "alphabet size")->check(CLI::Range(2, 36));
    census_cmd->add_option("--max-n", census_max_n, "largest word length")
        ->required();
    census_cmd->add_option("--threads", threads, "worker threads")
        ->envname("PRIVWORD_THREADS")
        ->check(CLI::Range(1u, 1024u));
    census_cmd->add_option("--budget", budget, "work budget (max q^n)")
        ->envname("PRIVWORD_BUDGET");
    census_cmd->add_option("--format", census_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    census_cmd->add_option("--out", census_out, "output file (default stdout)");

    // verify -----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand(
        "verify", "Run a verification suite and report violations");
    std::string suite;
    privword::VerifyConfig vcfg;
    std::string verify_format = "csv";
    std::string verify_out;
    verify_cmd->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(privword::suite_names()));
    verify_cmd->add_option("--q", vcfg.q, "alphabet size")->check(CLI::Range(2, 36));
    verify_cmd->add_option("--max-n", vcfg.max_n, "largest word length");
    verify_cmd->add_option("--kappa", vcfg.kappa, "short/long border split constant")
        ->check(CLI::Range(1.0 + 1e-9, 64.0));
    verify_cmd->add_option("--threads", vcfg.threads, "worker threads")
        ->envname("PRIVWORD_THREADS")
        ->check(CLI::Range(1u, 1024u));
    verify_cmd->add_option("--budget", vcfg.budget, "work budget (max q^n)")
        ->envname("PRIVWORD_BUDGET");
    verify_cmd->add_option("--oracle-cap", vcfg.oracle_cap,
                           "length cap for the definitional oracle");
    verify_cmd->add_option("--seed", vcfg.seed, "seed for sampled properties");
    verify_cmd->add_option("--format", verify_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--out", verify_out, "output file (default stdout)");

    // bounds -----------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Evaluate omega, h, hbar and the sigma/rho bound family");
    int bounds_q = 2;
    int bounds_j = 1;
    double bounds_kappa = 2.0;
    std::vector<std::uint64_t> bounds_n;
    bounds_cmd->add_option("--q", bounds_q, "alphabet size")->check(CLI::Range(2, 36));
    bounds_cmd->add_option("--j", bounds_j, "iterated-log level")
        ->required()
        ->check(CLI::Range(1, 8));
    bounds_cmd->add_option("--n", bounds_n, "word lengths to evaluate")
        ->required()
        ->expected(-1);
    bounds_cmd->add_option("--kappa", bounds_kappa,
                           "short/long border split constant")
        ->check(CLI::Range(1.0 + 1e-9, 64.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_word, check_q);
        if (census_cmd->parsed())
            return run_census(census_q, census_max_n, threads, budget,
                              census_format, OutputTarget{census_out});
        if (verify_cmd->parsed())
            return run_verify(suite, vcfg, verify_format,
                              OutputTarget{verify_out});
        if (bounds_cmd->parsed())
            return run_bounds(bounds_q, bounds_j, bounds_n, bounds_kappa);
    } catch (const privword::BudgetError& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return kExitBudget;
    } catch (const privword::DomainError& e) {
        std::cerr << "error (domain): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error (usage): " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
