#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellwall/crf.hpp"
#include "pellwall/syzygy.hpp"
#include "pellwall/theta.hpp"
#include "pellwall/walls.hpp"

namespace pellwall {

/// Everything the toolkit can say about one polarization type d, in a
/// fixed deterministic order. JSON serialization is lossless: rationals
/// travel as {"num", "den"} strings, quadratic numbers as
/// {"a", "b", "rad"}, big integers as decimal strings.
struct Report {
    long d = 0;
    bool perfect_square = false;
    std::optional<PellSolution> pell_minimal_solution;
    std::vector<PellSolution> pell_solutions_list;  // first n, minimal first
    std::vector<std::pair<PellSolution, Wall>> walls;
    std::vector<CrfCandidate> candidates;  // narrowed candidate set
    SyzygyVerdict verdict;
    std::optional<Prop41Certificate> certificate;
    std::vector<Integer> excluded_chars;

    friend bool operator==(const Report& a, const Report& b);
};

/// Assembles the full report; n_solutions controls how many Pell
/// solutions and walls are listed (the candidate set is always the
/// narrowed one).
Report build_report(long d, int n_solutions);

std::string report_to_json_string(const Report& r, int indent = 2);
Report report_from_json_string(const std::string& text);

std::string report_to_table(const Report& r);

/// CSV described in the CLI contract: one row per wall plus a terminal
/// row for the accumulation point -sqrt(d)/d. Exact columns are
/// accompanied by 12-digit decimal renderings. LF line endings.
std::string walls_to_csv(long d, int n_solutions);

/// CSV of sampled h0/h1 values of one candidate at x = xmax * i / samples
/// for i = 0..samples; exact rationals next to 12-digit decimals.
std::string plot_to_csv(const CrfCandidate& c, const Rational& xmax, int samples);

}  // namespace pellwall
