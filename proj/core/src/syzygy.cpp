#include "pellwall/syzygy.hpp"

#include <sstream>
#include <stdexcept>

namespace pellwall {

std::string to_string(RegularityStatus s) {
    switch (s) {
        case RegularityStatus::not_gv: return "not-GV";
        case RegularityStatus::gv_not_mregular: return "GV-not-M-regular";
        case RegularityStatus::mregular_not_it0: return "M-regular-not-IT0";
        case RegularityStatus::it0: return "IT0";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::candidate_dependent: return "candidate-dependent";
    }
    throw std::logic_error("unreachable");
}

RegularityStatus status_at(const CrfCandidate& c, const Rational& x) {
    if (x.sign() <= 0) throw std::invalid_argument("status_at: x must be positive");
    PiecewisePolynomial h1 = h1_of(c);
    if (h1.eval(x).sign() > 0) return RegularityStatus::not_gv;
    QuadraticNumber eps = epsilon1_of(c);
    auto cmp = eps.compare_to(x);
    // IT(0) needs vanishing on a left neighborhood, hence strictly beyond
    // the threshold.
    if (cmp == std::strong_ordering::less) return RegularityStatus::it0;
    if (cmp == std::strong_ordering::equal && h1.is_c1_at(eps))
        return RegularityStatus::mregular_not_it0;
    return RegularityStatus::gv_not_mregular;
}

bool mregular_fraction_test(long d, long m) {
    if (m < 1) throw std::invalid_argument("mregular_fraction_test: m must be >= 1");
    return Integer(m) * Integer(m) < Integer(d);
}

SyzygyVerdict verdict(long d) {
    if (d < 1) throw std::invalid_argument("verdict: d must be >= 1");
    SyzygyVerdict v;
    v.d = d;

    bool square = is_perfect_square(Integer(d));
    std::vector<CrfCandidate> cands = candidates(d, 2, /*apply_char_narrowing=*/true);

    // Basepoint freeness: threshold < 1 exactly when representatives are
    // basepoint-free, an equivalence, so all three outcomes are decidable
    // per candidate.
    std::size_t below_one = 0;
    for (const auto& c : cands) {
        if (epsilon1_of(c).compare_to(Rational(1)) == std::strong_ordering::less) ++below_one;
    }
    v.basepoint_free = below_one == cands.size() ? TriState::yes
                       : below_one == 0          ? TriState::no
                                                 : TriState::candidate_dependent;

    // Projective normality: the d >= 7 bound, cross-checked against the
    // candidate route (IT(0) at 1/2, i.e. threshold < 1/2 for every
    // candidate). A disagreement would mean a convention error upstream.
    bool by_bound = d >= 7;
    std::size_t it0_at_half = 0;
    for (const auto& c : cands) {
        if (epsilon1_of(c).compare_to(Rational(1, 2)) == std::strong_ordering::less)
            ++it0_at_half;
    }
    bool by_candidates = it0_at_half == cands.size();
    if (by_bound != by_candidates)
        throw std::logic_error("verdict: d >= 7 bound disagrees with the candidate route");
    v.projectively_normal = by_bound ? TriState::yes : TriState::no;

    // Largest p >= 1 with (p+2)^2 < d; matches M-regularity at 1/(p+2).
    v.np_guaranteed = std::nullopt;
    for (int p = 1; Integer(p + 2) * Integer(p + 2) < Integer(d); ++p) {
        if (!mregular_fraction_test(d, p + 2))
            throw std::logic_error("verdict: N_p bound disagrees with the fraction test");
        v.np_guaranteed = p;
    }

    v.caveats.push_back("requires D.l divisible by l^2 for every divisor class D"
                        " (holds e.g. for Picard rank 1)");
    if (!square) {
        std::ostringstream os;
        os << "candidate set narrowed to the two smallest solutions; valid unless char(K) in {";
        auto primes = excluded_characteristics(d);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (i) os << ", ";
            os << primes[i].get_str();
        }
        os << "}";
        v.caveats.push_back(os.str());
        if (v.basepoint_free == TriState::candidate_dependent)
            v.caveats.push_back("basepoint freeness depends on which candidate occurs");
    }
    if (v.projectively_normal == TriState::no)
        v.caveats.push_back("projective normality criterion is sufficient only;"
                            " 'no' means not guaranteed");
    return v;
}

FloorSqrtRecord verify_floor_sqrt_inequality(long d) {
    auto minimal = pell_minimal(d, /*certify_bound=*/0);
    if (!minimal)
        throw std::invalid_argument("verify_floor_sqrt_inequality: d must not be a square");
    FloorSqrtRecord rec;
    rec.d = d;
    rec.m = isqrt(Integer(d));
    rec.k = Integer(d) - rec.m * rec.m;
    rec.x0 = minimal->x;
    rec.y0 = minimal->y;
    rec.ky0_ge_m = rec.k * rec.y0 >= rec.m;
    rec.threshold_le_inv_m =
        Rational(2 * rec.y0, rec.x0 - 1) <= Rational(Integer(1), rec.m);
    return rec;
}

}  // namespace pellwall
