#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pellwall {

/// Batch self-verification: every oracle-vs-implementation equivalence and
/// every structural invariant, run over non-square d in [2, dmax + 1].
/// `deep` raises the scan bounds and enumeration caps.
struct VerifyOptions {
    long dmax = 1000;
    bool deep = false;
};

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::optional<std::string> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

struct VerifySummary {
    std::vector<SuiteResult> suites;
    bool all_passed = false;
    long total_checks = 0;
};

/// Runs all suites, printing one pass/fail line per suite plus a summary
/// line to `out`. Deterministic output for fixed options.
VerifySummary run_verify_suites(const VerifyOptions& options, std::ostream& out);

}  // namespace pellwall
