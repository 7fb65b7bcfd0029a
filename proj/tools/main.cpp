// Command-line surface over the pellwall library: per-d reports, wall and
// function data export, and the batch verification suites. All output is
// deterministic: exact values (rationals as p/q) accompany fixed 12-digit
// decimal renderings, JSON keys are sorted, CSV uses LF endings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 mathematically empty result.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pellwall/report.hpp"
#include "pellwall/verify_suites.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 2;
    }
    out << text;
    return 0;
}

int run_report(long d, int solutions, bool table) {
    if (d < 1) {
        std::cerr << "error: --d must be a positive integer\n";
        return 2;
    }
    pellwall::Report report = pellwall::build_report(d, solutions);
    std::cout << (table ? pellwall::report_to_table(report)
                        : pellwall::report_to_json_string(report));
    return 0;
}

int run_walls(long d, int solutions, const std::string& csv_path) {
    if (d < 1) {
        std::cerr << "error: --d must be a positive integer\n";
        return 2;
    }
    if (pellwall::is_perfect_square(pellwall::Integer(d))) {
        std::cerr << "no walls: Pell equation has only trivial solutions\n";
        return 3;
    }
    return write_output(pellwall::walls_to_csv(d, solutions), csv_path);
}

int run_plot(long d, int candidate, const std::string& xmax_text, int samples,
             const std::string& csv_path) {
    if (d < 1 || samples < 1) {
        std::cerr << "error: --d and --samples must be positive\n";
        return 2;
    }
    pellwall::Rational xmax;
    try {
        xmax = pellwall::Rational::from_string(xmax_text);
    } catch (const std::exception&) {
        std::cerr << "error: --xmax expects a rational like 3/4, 2, or 0.75\n";
        return 2;
    }
    if (xmax.sign() <= 0) {
        std::cerr << "error: --xmax must be positive\n";
        return 2;
    }
    auto cands = pellwall::candidates(d, 2, /*apply_char_narrowing=*/true);
    if (candidate < 0 || candidate >= static_cast<int>(cands.size())) {
        std::cerr << "error: --candidate must index the candidate list (0.."
                  << cands.size() - 1 << " for d = " << d << ")\n";
        return 2;
    }
    return write_output(pellwall::plot_to_csv(cands[candidate], xmax, samples), csv_path);
}

int run_verify(long dmax, bool deep) {
    if (dmax < 1) {
        std::cerr << "error: --dmax must be positive\n";
        return 2;
    }
    pellwall::VerifyOptions options;
    options.dmax = dmax;
    options.deep = deep;
    pellwall::VerifySummary summary = pellwall::run_verify_suites(options, std::cout);
    return summary.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around Pell-parametrized stability walls,\n"
                 "candidate cohomological rank functions, basepoint-freeness\n"
                 "thresholds, syzygy verdicts, and theta-group certificates for\n"
                 "(1,d)-polarized abelian surfaces."};
    app.require_subcommand(1);

    long d = 0;
    int solutions = 2;
    bool table = false, json_flag = false;
    auto* report_cmd = app.add_subcommand("report", "Full report for one d");
    report_cmd->add_option("--d", d, "Polarization type d >= 1")->required();
    report_cmd->add_option("--solutions", solutions, "How many Pell solutions/walls to list");
    auto* json_opt = report_cmd->add_flag("--json", json_flag, "JSON output (default)");
    report_cmd->add_flag("--table", table, "Human-readable table output")->excludes(json_opt);

    long wd = 0;
    int wsolutions = 0;
    std::string wcsv;
    auto* walls_cmd = app.add_subcommand("walls", "Wall data as CSV");
    walls_cmd->add_option("--d", wd, "Polarization type d >= 1")->required();
    walls_cmd->add_option("--solutions", wsolutions, "Number of walls")->required();
    walls_cmd->add_option("--csv", wcsv, "Write CSV to this file instead of stdout");

    long pd = 0;
    int pcandidate = 0, psamples = 0;
    std::string pxmax, pcsv;
    auto* plot_cmd = app.add_subcommand("plot", "Sampled h0/h1 data of one candidate as CSV");
    plot_cmd->add_option("--d", pd, "Polarization type d >= 1")->required();
    plot_cmd->add_option("--candidate", pcandidate, "Candidate index (0-based)")->required();
    plot_cmd->add_option("--xmax", pxmax, "Right end of the sample range (exact rational)")
        ->required();
    plot_cmd->add_option("--samples", psamples, "Number of sample intervals")->required();
    plot_cmd->add_option("--csv", pcsv, "Write CSV to this file instead of stdout");

    long dmax = 1000;
    bool deep = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run every oracle and invariant suite");
    verify_cmd->add_option("--dmax", dmax,
                           "Range size: suites run over non-square d in [2, dmax+1]");
    verify_cmd->add_flag("--deep", deep, "Raise scan bounds and enumeration caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report_cmd->parsed()) return run_report(d, solutions, table);
        if (walls_cmd->parsed()) return run_walls(wd, wsolutions, wcsv);
        if (plot_cmd->parsed()) return run_plot(pd, pcandidate, pxmax, psamples, pcsv);
        if (verify_cmd->parsed()) return run_verify(dmax, deep);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
