#include "pellwall/verify_suites.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "pellwall/crf.hpp"
#include "pellwall/syzygy.hpp"
#include "pellwall/theta.hpp"
#include "pellwall/walls.hpp"

namespace pellwall {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    template <typename MakeMessage>
    void check(bool ok, MakeMessage&& message) {
        ++result_.checks;
        if (!ok && !result_.first_failure) result_.first_failure = message();
    }

    void fail(std::string message) {
        ++result_.checks;
        if (!result_.first_failure) result_.first_failure = std::move(message);
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string at_d(const char* what, long d) {
    std::ostringstream os;
    os << what << " at d = " << d;
    return os.str();
}

std::vector<long> nonsquare_range(long dmax) {
    std::vector<long> out;
    for (long d = 2; d <= dmax + 1; ++d) {
        if (!is_perfect_square(Integer(d))) out.push_back(d);
    }
    return out;
}

// ---- suite bodies ------------------------------------------------------

void suite_pell_oracle(Suite& s, const std::vector<long>& range, const Integer& scan_bound) {
    for (long d : range) {
        auto minimal = pell_minimal(d, /*certify_bound=*/scan_bound);
        s.check(minimal.has_value(), [&] { return at_d("missing minimal solution", d); });
        if (!minimal) continue;
        std::vector<PellSolution> iterates = pell_solutions(d, 5);
        Integer y_bound = minimal->y < scan_bound ? iterates[2].y : minimal->y;
        if (y_bound > scan_bound) y_bound = scan_bound;
        std::vector<PellSolution> scanned = pell_bruteforce_oracle(d, y_bound);
        std::vector<PellSolution> expected;
        for (const auto& it : iterates)
            if (it.y <= y_bound) expected.push_back(it);
        s.check(scanned == expected,
                [&] { return at_d("scan disagrees with continued-fraction solutions", d); });
        const Integer dd(d);
        const PellSolution* prev = nullptr;
        for (const auto& it : iterates) {
            s.check(it.x * it.x - 4 * dd * it.y * it.y == 1,
                    [&] { return at_d("iterate violates the equation", d); });
            s.check(mpz_odd_p(it.x.get_mpz_t()) != 0, [&] { return at_d("even x", d); });
            Integer g;
            mpz_gcd(g.get_mpz_t(), Integer(2 * it.y).get_mpz_t(), it.x.get_mpz_t());
            s.check(g == 1, [&] { return at_d("gcd(2y, x) != 1", d); });
            if (prev)
                s.check(prev->x < it.x && prev->y < it.y,
                        [&] { return at_d("iterates not strictly increasing", d); });
            prev = &it;
        }
    }
}

void suite_wall_endpoints(Suite& s, const std::vector<long>& range, int n_solutions) {
    for (long d : range) {
        std::vector<std::pair<PellSolution, Wall>> walls;
        try {
            // enumerate_walls itself asserts strict nesting and that every
            // interval straddles -sqrt(d)/d.
            walls = enumerate_walls(d, n_solutions);
        } catch (const std::exception& e) {
            s.fail(at_d(e.what(), d));
            continue;
        }
        s.check(walls.size() == static_cast<std::size_t>(n_solutions),
                [&] { return at_d("wrong wall count", d); });
        for (const auto& [sol, wall] : walls) {
            auto [p_quot, p_sub] = wall.rational_endpoints();
            auto [f_quot, f_sub] = wall_endpoints_formula(sol);
            s.check(p_quot == f_quot && p_sub == f_sub,
                    [&] { return at_d("wall_between endpoints differ from formula", d); });
            DestabilizingPair pair = pell_to_pair(d, sol);
            s.check(slope(pair.sub).value() == p_sub,
                    [&] { return at_d("right endpoint is not the sub slope", d); });
            s.check(slope(pair.quot).value() == p_quot,
                    [&] { return at_d("left endpoint is not the quot slope", d); });
            s.check(discriminant(pair.sub).is_zero() && discriminant(pair.quot).is_zero(),
                    [&] { return at_d("wall class with nonzero discriminant", d); });
            Rational delta_ipc = discriminant(ideal_point_class(d));
            s.check(delta_ipc == Rational(4 * Integer(d)),
                    [&] { return at_d("ideal point discriminant is not 4d", d); });
        }
    }
}

void suite_wall_scan_oracle(Suite& s, const std::vector<long>& range, long c_bound,
                            long scan_dmax) {
    for (long d : range) {
        if (d > scan_dmax) break;
        std::vector<DestabilizingPair> scanned = bruteforce_wall_scan(d, c_bound);
        std::vector<DestabilizingPair> expected;
        for (int n = 1;; ++n) {
            std::vector<PellSolution> sols = pell_solutions(d, n);
            if (static_cast<int>(sols.size()) < n || sols.back().y > c_bound) break;
            expected.push_back(pell_to_pair(d, sols.back()));
        }
        s.check(scanned == expected,
                [&] { return at_d("exhaustive scan disagrees with Pell pairs", d); });
    }
    for (long d : {4L, 9L}) {
        s.check(bruteforce_wall_scan(d, c_bound).empty(),
                [&] { return at_d("square d produced a wall", d); });
    }
}

// Rational samples covering one piece: exact endpoints when rational,
// otherwise bracketed through floor(value * 10^6)/10^6.
std::vector<Rational> piece_samples(const QuadraticNumber* lo, const QuadraticNumber* hi,
                                    const Rational& tail_width, int count) {
    const Integer scale = 1000000;
    Rational lo_r = lo == nullptr ? Rational(0)
                    : lo->is_rational()
                        ? lo->as_rational()
                        : Rational(lo->floor_times(scale) + 1, scale);
    Rational hi_r;
    if (hi == nullptr) {
        hi_r = lo_r + tail_width;
    } else {
        hi_r = hi->is_rational() ? hi->as_rational() : Rational(hi->floor_times(scale), scale);
    }
    std::vector<Rational> out;
    out.reserve(count);
    Rational width = hi_r - lo_r;
    for (int i = 0; i < count; ++i)
        out.push_back(lo_r + width * Rational(Integer(i), Integer(count)));
    return out;
}

void check_candidate_shape(Suite& s, long d, const CrfCandidate& c, int grid) {
    PiecewisePolynomial h1 = h1_of(c);
    const auto& bps = c.h0.breakpoints();
    bool expect_c1 = c.shape == ShapeKind::pell;
    for (const auto& bp : bps) {
        s.check(c.h0.is_c1_at(bp) == expect_c1,
                [&] { return at_d(expect_c1 ? "pell shape not C1" : "kink shape is C1", d); });
        s.check(h1.is_c1_at(bp) == expect_c1,
                [&] { return at_d("h1 smoothness disagrees with h0", d); });
    }
    s.check(h1.pieces().back().is_zero(), [&] { return at_d("h1 tail not zero", d); });
    s.check(h1.eval(Rational(0)) == Rational(1), [&] { return at_d("h1(0) != 1", d); });
    QuadraticNumber eps = epsilon1_of(c);
    for (std::size_t i = 0; i < c.h0.pieces().size(); ++i) {
        const QuadraticNumber* lo = i == 0 ? nullptr : &bps[i - 1];
        const QuadraticNumber* hi = i < bps.size() ? &bps[i] : nullptr;
        for (const Rational& x : piece_samples(lo, hi, Rational(1), grid)) {
            Rational v = h1.eval(x);
            s.check(v.sign() >= 0, [&] { return at_d("h1 negative on grid", d); });
            // h1 vanishes exactly from epsilon1 on.
            bool beyond = eps.compare_to(x) != std::strong_ordering::greater;
            if (beyond)
                s.check(v.is_zero(), [&] { return at_d("h1 nonzero beyond epsilon1", d); });
            else if (x.sign() > 0 && i + 1 < c.h0.pieces().size())
                s.check(v.sign() > 0, [&] { return at_d("h1 vanishes before epsilon1", d); });
        }
    }
}

void suite_crf_shapes(Suite& s, const std::vector<long>& range, long dmax, int n_solutions,
                      int grid) {
    for (long d : range) {
        std::vector<CrfCandidate> cands;
        try {
            cands = candidates(d, n_solutions, /*apply_char_narrowing=*/false);
        } catch (const std::exception& e) {
            s.fail(at_d(e.what(), d));
            continue;
        }
        s.check(cands.size() == static_cast<std::size_t>(n_solutions) + 1,
                [&] { return at_d("wrong candidate count", d); });
        for (const auto& c : cands) check_candidate_shape(s, d, c, grid);
        // Monotone thresholds across the narrowed candidates.
        auto narrowed = candidates(d, 2, /*apply_char_narrowing=*/true);
        QuadraticNumber eps0 = epsilon1_of(narrowed[0]);
        QuadraticNumber eps1 = epsilon1_of(narrowed[1]);
        QuadraticNumber sqrt_dd = QuadraticNumber::sqrt_multiple(Rational(1, Integer(d)), d);
        s.check(eps1 < eps0, [&] { return at_d("epsilon1(x1) not below epsilon1(x0)", d); });
        s.check(sqrt_dd < eps1 && sqrt_dd < eps0,
                [&] { return at_d("threshold candidates not above sqrt(d)/d", d); });
    }
    for (long m = 1; m * m <= dmax + 1; ++m) {
        long d = m * m;
        auto cands = candidates(d, n_solutions, false);
        if (cands.size() != 1 || cands[0].shape != ShapeKind::perfect_square) {
            s.fail(at_d("square d must have exactly the square shape", d));
            continue;
        }
        check_candidate_shape(s, d, cands[0], grid);
        s.check(epsilon1_of(cands[0]) == QuadraticNumber::from_rational(Rational(1, m), d),
                [&] { return at_d("square-shape threshold is not 1/sqrt(d)", d); });
    }
}

void suite_second_solution_identities(Suite& s, const std::vector<long>& range) {
    for (long d : range) {
        auto sols = pell_solutions(d, 2);
        const Integer &x0 = sols[0].x, &y0 = sols[0].y;
        const Integer &x1 = sols[1].x, &y1 = sols[1].y;
        Integer dd(d);
        s.check(x1 == x0 * x0 + 4 * dd * y0 * y0, [&] { return at_d("x1 recurrence", d); });
        s.check(y1 == 2 * x0 * y0, [&] { return at_d("y1 recurrence", d); });
        s.check(Rational(2 * y0, x0) == Rational(2 * y1, x1 + 1),
                [&] { return at_d("2y0/x0 != 2y1/(x1+1)", d); });
        // Middle piece of the second shape is d x0^2 (x - 2y0/x0)^2.
        CrfCandidate second = h0_pell_shape(d, sols[1]);
        const QuadraticPolynomial& middle = second.h0.pieces()[1];
        Rational lead(dd * x0 * x0);
        Rational shift_over = Rational(2 * y0, x0);
        s.check(middle.a2 == lead && middle.a1 == -(Rational(2) * lead * shift_over) &&
                    middle.a0 == lead * shift_over * shift_over,
                [&] { return at_d("middle piece is not d x0^2 (x - 2y0/x0)^2", d); });
    }
}

void suite_floor_sqrt(Suite& s, const std::vector<long>& range) {
    for (long d : range) {
        FloorSqrtRecord rec = verify_floor_sqrt_inequality(d);
        s.check(rec.ky0_ge_m, [&] { return at_d("k y0 >= m fails", d); });
        s.check(rec.threshold_le_inv_m, [&] { return at_d("2y0/(x0-1) <= 1/m fails", d); });
    }
}

void suite_theta(Suite& s, const std::vector<long>& range, const Integer& enum_cap) {
    for (long d : range) {
        auto minimal = pell_minimal(d, /*certify_bound=*/0);
        const PellSolution& sol = *minimal;
        ThetaGenerators g = generators(d, sol);
        const Integer& x0 = sol.x;
        Integer dd(d);
        auto unit = [&](const Integer& e) {
            Integer gc;
            mpz_gcd(gc.get_mpz_t(), e.get_mpz_t(), x0.get_mpz_t());
            return gc == 1;
        };
        auto expect_phase = [&](const MonomialOperator& a, const MonomialOperator& b,
                                const Integer& e, const char* what) {
            auto got = commutator_phase(a, b);
            Integer want;
            mpz_fdiv_r(want.get_mpz_t(), e.get_mpz_t(), x0.get_mpz_t());
            s.check(got.has_value() && *got == want, [&] { return at_d(what, d); });
        };
        expect_phase(g.a1, g.a3, 2 * sol.y, "commutator (a1, a3) != 2 y0");
        expect_phase(g.a2, g.a4, 2 * dd * sol.y, "commutator (a2, a4) != 2 d y0");
        expect_phase(g.a1, g.a2, 0, "(a1, a2) must commute");
        expect_phase(g.a1, g.a4, 0, "(a1, a4) must commute");
        expect_phase(g.a2, g.a3, 0, "(a2, a3) must commute");
        expect_phase(g.a3, g.a4, 0, "(a3, a4) must commute");
        s.check(unit(2 * sol.y) && unit(2 * dd * sol.y),
                [&] { return at_d("commutator phases not units mod x0", d); });
        s.check(g.a1.pow(x0).is_identity() && g.a2.pow(x0).is_identity() &&
                    g.a3.pow(x0).is_identity() && g.a4.pow(x0).is_identity(),
                [&] { return at_d("generator order != x0", d); });
        s.check((g.inv * g.inv).is_identity(), [&] { return at_d("inv^2 != id", d); });
        s.check(g.inv * g.a3 * g.inv == g.a3.inverse(),
                [&] { return at_d("inv a3 inv != a3^-1", d); });
        s.check(g.inv * g.a4 * g.inv == g.a4.inverse(),
                [&] { return at_d("inv a4 inv != a4^-1", d); });

        Integer dim = eigenspace_dimension(d, sol, EigenspaceLabel{0, 0}, enum_cap);
        s.check(dim == x0 * x0 - 1, [&] { return at_d("eigenspace dim != x0^2 - 1", d); });
        s.check(dim * x0 * x0 == 4 * dd * x0 * x0 * sol.y * sol.y,
                [&] { return at_d("dimension bookkeeping", d); });
        InvolutionSplit split = involution_split(d, sol, enum_cap);
        s.check(split.dim_plus == 2 * dd * sol.y * sol.y + 2 &&
                    split.dim_minus == 2 * dd * sol.y * sol.y - 2,
                [&] { return at_d("involution split", d); });
        s.check(split.dim_plus + split.dim_minus == dim,
                [&] { return at_d("involution split does not partition", d); });
        Prop41Certificate cert = prop41_certificate(d);
        s.check(cert.dim_exceeds_conditions && cert.orbits.transitive &&
                    cert.h0_lower_bound == x0 * x0,
                [&] { return at_d("certificate", d); });
    }
}

}  // namespace

VerifySummary run_verify_suites(const VerifyOptions& options, std::ostream& out) {
    const std::vector<long> range = nonsquare_range(options.dmax);
    const Integer pell_scan_bound = options.deep ? 1000000 : 10000;
    const long wall_c_bound = options.deep ? 200 : 50;
    const int wall_solutions = options.deep ? 5 : 3;
    const int grid = 100;
    const Integer theta_cap = options.deep ? 1000000 : 10000;

    VerifySummary summary;
    auto run = [&](const char* name, const std::function<void(Suite&)>& body) {
        Suite suite(name);
        try {
            body(suite);
        } catch (const std::exception& e) {
            suite.fail(std::string("unexpected exception: ") + e.what());
        }
        SuiteResult result = suite.take();
        if (result.passed()) {
            out << result.name << ": pass (" << result.checks << " checks)\n";
        } else {
            out << result.name << ": FAIL: " << *result.first_failure << "\n";
        }
        summary.total_checks += result.checks;
        summary.suites.push_back(std::move(result));
    };

    run("pell-oracle", [&](Suite& s) { suite_pell_oracle(s, range, pell_scan_bound); });
    run("wall-endpoints", [&](Suite& s) { suite_wall_endpoints(s, range, wall_solutions); });
    run("wall-scan-oracle",
        [&](Suite& s) { suite_wall_scan_oracle(s, range, wall_c_bound, options.deep ? 50 : 20); });
    run("crf-shapes",
        [&](Suite& s) { suite_crf_shapes(s, range, options.dmax, wall_solutions, grid); });
    run("second-solution-identities", [&](Suite& s) { suite_second_solution_identities(s, range); });
    run("floor-sqrt-inequality", [&](Suite& s) { suite_floor_sqrt(s, range); });
    run("theta-bookkeeping", [&](Suite& s) { suite_theta(s, range, theta_cap); });

    summary.all_passed = true;
    for (const auto& r : summary.suites) summary.all_passed = summary.all_passed && r.passed();
    out << (summary.all_passed ? "verify: all suites passed (" : "verify: FAILURES (")
        << summary.total_checks << " checks)\n";
    return summary;
}

}  // namespace pellwall
