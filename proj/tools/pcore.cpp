// Command-line front end: compute the largest p-core p'-partition, emit the
// reference tables as CSV, run the verification suites, and draw abaci.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcore/pcore.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> ascending_primes_arg(std::vector<long long> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    for (long long v : values) {
        pcore::require_odd_prime(v);  // throws with the constraint named
        out.push_back(static_cast<int>(v));
    }
    return out;
}

int run_largest(const std::vector<long long>& p_values, const std::string& format) {
    const std::vector<int> primes = ascending_primes_arg(p_values);
    if (format == "json") {
        nlohmann::ordered_json payload;
        for (int p : primes) payload.push_back(pcore::to_json(pcore::make_output_record(p)));
        if (primes.size() == 1)
            std::cout << payload.front().dump(2) << '\n';
        else
            std::cout << payload.dump(2) << '\n';
    } else {
        bool first = true;
        for (int p : primes) {
            if (!first) std::cout << '\n';
            first = false;
            std::cout << pcore::to_text(pcore::make_output_record(p));
        }
    }
    return 0;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pcore::Error("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw pcore::Error("failed while writing " + path.string());
}

int run_tables(int max_p, const std::string& out_dir, bool paper_faithful) {
    if (pcore::odd_primes_through(max_p).empty())
        throw pcore::PreconditionError("no odd primes up to " + std::to_string(max_p) +
                                       "; need max-p >= 3");
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "table1.csv", pcore::table1_csv(max_p));
    write_file(dir / "table2.csv", pcore::table2_csv(max_p, paper_faithful));
    std::cout << "wrote " << (dir / "table1.csv").string() << " and "
              << (dir / "table2.csv").string() << '\n';
    return 0;
}

int run_verify(const std::vector<long long>& p_values, bool oracle, bool override_feasibility) {
    const std::vector<int> primes = ascending_primes_arg(p_values);
    if (oracle) {
        for (int p : primes) {
            if (p > 11 && !(p == 13 && override_feasibility))
                throw pcore::FeasibilityError(
                    "oracle mode is gated to p <= 11 (p = 13 with --override-feasibility); got " +
                    std::to_string(p));
        }
    }
    std::string first_failure;
    for (int p : primes) {
        std::vector<pcore::CheckResult> checks = pcore::run_invariant_suite(p);
        if (oracle) {
            auto extra = pcore::run_oracle_suite(p, override_feasibility);
            checks.insert(checks.end(), extra.begin(), extra.end());
        }
        for (const auto& check : checks) {
            std::cout << (check.ok ? "ok   " : "FAIL ") << "p=" << p << ' ' << check.name;
            if (!check.detail.empty()) std::cout << " (" << check.detail << ')';
            std::cout << '\n';
            if (!check.ok && first_failure.empty())
                first_failure = check.name + " at p=" + std::to_string(p);
        }
    }
    if (!first_failure.empty()) {
        std::cerr << "verification failed; first failing invariant: " << first_failure << '\n';
        return kExitVerificationFailure;
    }
    std::cout << "all invariants hold\n";
    return 0;
}

int run_render(long long p) {
    pcore::require_odd_prime(p);
    for (const std::string& line : pcore::render_largest_with_residues(static_cast<int>(p)))
        std::cout << line << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"largest p-core p'-partitions via longest restricted walks"};
    app.require_subcommand(1);

    std::vector<long long> p_values;
    std::string format = "text";
    auto* largest = app.add_subcommand("largest", "compute the largest p-core p'-partition");
    largest->add_option("--p", p_values, "odd prime, or comma-separated list")
        ->required()
        ->delimiter(',');
    largest->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int max_p = 0;
    std::string out_dir = ".";
    std::string tables_format = "csv";
    bool paper_faithful = false;
    auto* tables = app.add_subcommand("tables", "emit table1.csv and table2.csv");
    tables->add_option("--max-p", max_p, "largest prime to include")->required();
    tables->add_option("--out", out_dir, "output directory (created if absent)");
    tables->add_option("--format", tables_format, "output format")
        ->check(CLI::IsMember({"csv"}));
    tables->add_flag("--paper-faithful", paper_faithful,
                     "emit the published explicit-family value where the computed one disagrees");

    std::vector<long long> verify_p;
    bool oracle = false;
    bool override_feasibility = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--p", verify_p, "odd prime, or comma-separated list")
        ->required()
        ->delimiter(',');
    verify->add_flag("--oracle", oracle, "also run the exhaustive-search checks (p <= 11)");
    verify->add_flag("--override-feasibility", override_feasibility,
                     "allow the exhaustive search at p = 13");

    long long render_p = 0;
    auto* render = app.add_subcommand("render", "draw the abacus of the largest partition");
    render->add_option("--p", render_p, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (largest->parsed()) return run_largest(p_values, format);
        if (tables->parsed()) return run_tables(max_p, out_dir, paper_faithful);
        if (verify->parsed()) return run_verify(verify_p, oracle, override_feasibility);
        if (render->parsed()) return run_render(render_p);
    } catch (const pcore::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
