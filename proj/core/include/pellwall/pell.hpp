#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pellwall/integer.hpp"

namespace pellwall {

/// Nonnegative solution (x, y) of x^2 - 4d y^2 = 1 for a fixed d >= 1.
/// y = 0 is the trivial solution (1, 0); every nontrivial solution has
/// x odd and gcd(x, 2y) = 1, both forced by the equation.
struct PellSolution {
    Integer x, y;
    long d;

    PellSolution(Integer x, Integer y, long d);

    bool is_trivial() const { return y == 0; }
    static PellSolution trivial(long d) { return PellSolution(1, 0, d); }

    friend bool operator==(const PellSolution& a, const PellSolution& b) {
        return a.d == b.d && a.x == b.x && a.y == b.y;
    }

    friend std::ostream& operator<<(std::ostream& os, const PellSolution& s);
};

/// Minimal positive solution of x^2 - 4d y^2 = 1, or nullopt iff d is a
/// perfect square (then only the trivial solution exists). Computed from
/// the continued fraction of sqrt(4d); whenever y0 <= certify_bound the
/// result is additionally certified minimal against the brute-force scan.
std::optional<PellSolution> pell_minimal(long d, const Integer& certify_bound = 1000000);

/// Composition of s with the minimal solution of the same d; starting from
/// the minimal solution this enumerates all positive solutions in
/// increasing order. Accepts the trivial solution as seed.
PellSolution pell_next(const PellSolution& s);

/// First `count` positive solutions, smallest first. Empty iff d square.
std::vector<PellSolution> pell_solutions(long d, int count);

/// Exhaustive scan: all solutions with 1 <= y <= y_bound, sorted by y,
/// found by testing whether 4d y^2 + 1 is a perfect square. Independent of
/// the continued-fraction path; serves as its oracle.
std::vector<PellSolution> pell_bruteforce_oracle(long d, const Integer& y_bound);

}  // namespace pellwall
