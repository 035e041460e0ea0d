// hk -- exact Hilbert-Kunz functions and multiplicities on Hirzebruch
// surfaces, computed by three mutually verifying engines:
//
//   enum    per-degree cokernel census summed over degrees
//   oracle  lattice-point colength (prime-power q only)
//   closed  assembled quasi-polynomial in q
//
// Exit codes: 0 success, 1 usage/validation error, 2 tier mismatch,
// 3 internal inconsistency (an assembled exact value failed a guarantee).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hk/grid.hpp"
#include "hk/oracle.hpp"

namespace {

using hk::i64;
using hk::Int;

// Smallest prime whose powers reach q, if any.
i64 prime_base_of(i64 q) {
    for (i64 p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        i64 rest = q;
        while (rest % p == 0) rest /= p;
        return rest == 1 ? p : -1;
    }
    return -1;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

int run_compute(i64 a, i64 c, i64 d, i64 q, const std::string& tier, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    const bool all = tier == "all";
    std::vector<std::pair<std::string, Int>> results;
    if (all || tier == "enum")
        results.emplace_back("enum", hk::hilbert_kunz(a, c, d, q).value);
    if (all || tier == "oracle") {
        i64 p = prime_base_of(q);
        if (p < 0) {
            std::cerr << "oracle tier needs a prime-power q, got " << q << "\n";
            return 1;
        }
        results.emplace_back("oracle", hk::hk_colength(a, c, d, q, p));
    }
    if (all || tier == "closed")
        results.emplace_back("closed", hk::hk_closed(a, c, d, q).value);
    if (results.empty()) {
        std::cerr << "unknown tier: " << tier << "\n";
        return 1;
    }
    for (const auto& [name, value] : results)
        os << "a=" << a << " c=" << c << " d=" << d << " q=" << q
           << " tier=" << name << " hk=" << value.get_str() << "\n";
    for (size_t i = 1; i < results.size(); ++i)
        if (results[i].second != results[0].second)
            throw hk::tier_mismatch_error("tiers disagree; see output above");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-Kunz functions of Hirzebruch surfaces"};
    app.require_subcommand(1);

    // compute
    i64 a = 1, c = 1, d = 1, q = 2, p = 2, nmax = 4, jobs = 0;
    std::string tier = "all", format = "csv", out_path;
    std::string a_range = "1", c_range = "1", d_range = "1";

    auto* compute = app.add_subcommand("compute", "one HK value (one line per tier)");
    compute->add_option("--a", a, "surface parameter a >= 1")->required();
    compute->add_option("--c", c, "bundle coefficient c >= 1")->required();
    compute->add_option("--d", d, "bundle coefficient d >= 1")->required();
    compute->add_option("--q", q, "scale q >= 2")->required();
    compute->add_option("--tier", tier, "enum | oracle | closed | all [all]");
    compute->add_option("--out", out_path, "output path [stdout]");

    auto* table = app.add_subcommand("table", "HK/e_HK table over a grid");
    table->add_option("--a", a_range, "a range, e.g. 1..3")->required();
    table->add_option("--c", c_range, "c range")->required();
    table->add_option("--d", d_range, "d range")->required();
    table->add_option("--p", p, "prime p")->required();
    table->add_option("--nmax", nmax, "max exponent n (q = p^n)")->required();
    table->add_option("--tier", tier, "enum | oracle | closed | all [all]");
    table->add_option("--format", format, "csv | json [csv]");
    table->add_option("--out", out_path, "output path [stdout]");
    table->add_option("--jobs", jobs, "worker threads [hardware]");

    auto* verify = app.add_subcommand("verify", "cross-tier verification over a grid");
    std::string v_a = "1..3", v_c = "1..4", v_d = "1..4";
    std::vector<i64> primes{2, 3, 5};
    i64 q_oracle_max = 81, q_closed_max = 729;
    verify->add_option("--a", v_a, "a range [1..3]");
    verify->add_option("--c", v_c, "c range [1..4]");
    verify->add_option("--d", v_d, "d range [1..4]");
    verify->add_option("--primes", primes, "primes [2 3 5]");
    verify->add_option("--q-oracle-max", q_oracle_max, "oracle phase q cap [81]");
    verify->add_option("--q-closed-max", q_closed_max, "closed phase q cap [729]");
    verify->add_option("--jobs", jobs, "worker threads [hardware]");
    verify->add_option("--out", out_path, "output path [stdout]");

    auto* ehk_cmd = app.add_subcommand("ehk", "exact multiplicity as num/den");
    ehk_cmd->add_option("--a", a, "surface parameter a >= 1")->required();
    ehk_cmd->add_option("--c", c, "bundle coefficient c >= 1")->required();
    ehk_cmd->add_option("--d", d, "bundle coefficient d >= 1")->required();

    auto* probe = app.add_subcommand("probe", "quasi-polynomial residual probe");
    probe->add_option("--a", a, "surface parameter a >= 1")->required();
    probe->add_option("--c", c, "bundle coefficient c >= 1")->required();
    probe->add_option("--d", d, "bundle coefficient d >= 1")->required();
    probe->add_option("--p", p, "prime p")->required();
    probe->add_option("--nmax", nmax, "number of scales (n = 1..nmax)")->required();
    probe->add_option("--out", out_path, "output path [stdout]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's exit codes: 0 stays 0 (--help), all errors are 1
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return run_compute(a, c, d, q, tier, out_path);

        if (table->parsed()) {
            hk::TableSpec spec;
            spec.a = hk::parse_range(a_range);
            spec.c = hk::parse_range(c_range);
            spec.d = hk::parse_range(d_range);
            spec.p = p;
            spec.n_max = nmax;
            spec.tier = tier;
            spec.jobs = jobs;
            auto rows = hk::table_rows(spec);
            std::ofstream file;
            std::ostream& os = open_output(out_path, file);
            if (format == "csv") {
                hk::emit_csv(rows, os);
            } else if (format == "json") {
                hk::emit_json(rows, os);
            } else {
                std::cerr << "unknown format: " << format << "\n";
                return 1;
            }
            return 0;
        }

        if (verify->parsed()) {
            hk::VerifySpec spec;
            spec.a = hk::parse_range(v_a);
            spec.c = hk::parse_range(v_c);
            spec.d = hk::parse_range(v_d);
            spec.primes = primes;
            spec.q_oracle_max = q_oracle_max;
            spec.q_closed_max = q_closed_max;
            spec.jobs = jobs;
            auto report = hk::run_verify(spec);
            std::ofstream file;
            std::ostream& os = open_output(out_path, file);
            os << hk::verify_to_text(report);
            return report.ok() ? 0 : 2;
        }

        if (ehk_cmd->parsed()) {
            hk::Rat e = hk::ehk(a, c, d);
            std::cout << e.get_num().get_str() << "/" << e.get_den().get_str() << "\n";
            return 0;
        }

        if (probe->parsed()) {
            auto report = hk::quasipoly_probe(a, c, d, p, nmax);
            std::ofstream file;
            std::ostream& os = open_output(out_path, file);
            os << hk::probe_to_text(report);
            return report.violations.empty() ? 0 : 2;
        }
    } catch (const hk::tier_mismatch_error& e) {
        std::cerr << "tier mismatch: " << e.what() << "\n";
        return 2;
    } catch (const hk::internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
