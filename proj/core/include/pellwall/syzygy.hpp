#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellwall/crf.hpp"

namespace pellwall {

/// Positivity status of the ideal-point sheaf twisted by x*l, read off a
/// candidate function. Values are ordered: each status implies the ones
/// below it.
enum class RegularityStatus {
    not_gv,
    gv_not_mregular,
    mregular_not_it0,
    it0,
};

std::string to_string(RegularityStatus s);

/// Exact status at rational x > 0: not GV while h^1 > 0; IT(0) strictly
/// beyond the threshold; M-regular exactly at the threshold when h^1 is
/// C^1 there; GV otherwise.
RegularityStatus status_at(const CrfCandidate& c, const Rational& x);

/// Whether the twist by (1/m) l is M-regular: true iff m^2 < d.
bool mregular_fraction_test(long d, long m);

enum class TriState { yes, no, candidate_dependent };

std::string to_string(TriState t);

/// Conclusions the candidate functions support for line bundles of type
/// (1,d), with every conditional stated as a caveat rather than silently
/// assumed. For projective normality and N_p the criteria are sufficient
/// only, so "no" means "not guaranteed by these criteria".
struct SyzygyVerdict {
    long d;
    TriState basepoint_free;
    TriState projectively_normal;
    std::optional<int> np_guaranteed;  // largest p >= 1 with (p+2)^2 < d
    std::vector<std::string> caveats;

    friend bool operator==(const SyzygyVerdict& a, const SyzygyVerdict& b) {
        return a.d == b.d && a.basepoint_free == b.basepoint_free &&
               a.projectively_normal == b.projectively_normal &&
               a.np_guaranteed == b.np_guaranteed && a.caveats == b.caveats;
    }
};

SyzygyVerdict verdict(long d);

/// Arithmetic backbone of the threshold-versus-1/m comparison: writes
/// d = m^2 + k with m = floor(sqrt(d)) and records the two equivalent
/// inequalities k y0 >= m and 2y0/(x0-1) <= 1/m, checked exactly.
struct FloorSqrtRecord {
    long d;
    Integer m, k;
    Integer x0, y0;
    bool ky0_ge_m;
    bool threshold_le_inv_m;
};

FloorSqrtRecord verify_floor_sqrt_inequality(long d);

}  // namespace pellwall
