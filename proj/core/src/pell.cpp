#include "pellwall/pell.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace pellwall {

PellSolution::PellSolution(Integer x_, Integer y_, long d_)
    : x(std::move(x_)), y(std::move(y_)), d(d_) {
    if (d < 1) throw std::invalid_argument("PellSolution: d must be >= 1");
    if (x < 1 || y < 0) throw std::invalid_argument("PellSolution: x >= 1, y >= 0 required");
    if (x * x - 4 * Integer(d) * y * y != 1)
        throw std::invalid_argument("PellSolution: x^2 - 4d y^2 != 1");
}

std::ostream& operator<<(std::ostream& os, const PellSolution& s) {
    return os << "(" << s.x.get_str() << ", " << s.y.get_str() << ")";
}

namespace {

// Fast perfect-square test for 64-bit candidates: cheap residue filters,
// then one floating sqrt refined exactly.
bool is_square_u64(std::uint64_t n, std::uint64_t& root) {
    static constexpr std::uint64_t mask64 = []() {
        std::uint64_t m = 0;
        for (unsigned r = 0; r < 32; ++r) m |= std::uint64_t(1) << ((r * r) % 64);
        return m;
    }();
    if (!(mask64 >> (n % 64) & 1)) return false;
    static const auto mod_table = [](unsigned m) {
        std::uint64_t bits = 0;
        for (unsigned r = 0; r <= m / 2; ++r) bits |= std::uint64_t(1) << ((r * r) % m);
        return bits;
    };
    static const std::uint64_t m63 = mod_table(63), m65 = mod_table(65);
    if (!(m63 >> (n % 63) & 1)) return false;
    if (!(m65 >> (n % 65) & 1)) return false;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

// Scans y = from..to checking 4d y^2 + 1 for squareness; appends hits.
// Uses the 64-bit path when the largest candidate fits.
void scan_range(long d, const Integer& from, const Integer& to, std::vector<PellSolution>& out,
                bool stop_at_first) {
    if (to < from) return;
    Integer largest = 4 * Integer(d) * to * to + 1;
    if (mpz_sizeinbase(largest.get_mpz_t(), 2) > 62) {
        Integer step = 4 * Integer(d);
        Integer n = step * from * from + 1;
        for (Integer y = from; y <= to; ++y) {
            Integer root;
            if (is_perfect_square(n, root)) {
                out.emplace_back(root, y, d);
                if (stop_at_first) return;
            }
            n += step * (2 * y + 1);
        }
        return;
    }
    std::uint64_t fd = 4 * static_cast<std::uint64_t>(d);
    std::uint64_t y0 = mpz_get_ui(from.get_mpz_t());
    std::uint64_t y1 = mpz_get_ui(to.get_mpz_t());
    for (std::uint64_t y = y0; y <= y1; ++y) {
        std::uint64_t root;
        if (is_square_u64(fd * y * y + 1, root)) {
            out.emplace_back(Integer(root), Integer(y), d);
            if (stop_at_first) return;
        }
    }
}

// Fundamental solution of p^2 - D q^2 = 1 via the continued fraction of
// sqrt(D), D not a perfect square: the first convergent satisfying the
// equation is the fundamental one (convergent denominators increase).
PellSolution fundamental_by_continued_fraction(long d) {
    Integer D = 4 * Integer(d);
    Integer a0 = isqrt(D);
    Integer P = 0, Q = 1, a = a0;
    Integer p_prev = 1, p_cur = a0;
    Integer q_prev = 0, q_cur = 1;
    for (long guard = 0; guard < 100000000L; ++guard) {
        if (p_cur * p_cur - D * q_cur * q_cur == 1) return PellSolution(p_cur, q_cur, d);
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (a0 + P) / Q;
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    throw std::logic_error("pell_minimal: continued fraction did not terminate");
}

}  // namespace

std::optional<PellSolution> pell_minimal(long d, const Integer& certify_bound) {
    if (d < 1) throw std::invalid_argument("pell_minimal: d must be >= 1");
    if (is_perfect_square(Integer(d))) return std::nullopt;
    PellSolution fundamental = fundamental_by_continued_fraction(d);
    if (fundamental.y <= certify_bound) {
        std::vector<PellSolution> seen;
        scan_range(d, 1, fundamental.y, seen, /*stop_at_first=*/true);
        if (seen.size() != 1 || !(seen.front() == fundamental))
            throw std::logic_error("pell_minimal: oracle certification failed");
    }
    return fundamental;
}

PellSolution pell_next(const PellSolution& s) {
    auto minimal = pell_minimal(s.d, /*certify_bound=*/0);
    if (!minimal) throw std::domain_error("pell_next: d is a perfect square");
    const Integer& x0 = minimal->x;
    const Integer& y0 = minimal->y;
    return PellSolution(x0 * s.x + 4 * Integer(s.d) * y0 * s.y, x0 * s.y + y0 * s.x, s.d);
}

std::vector<PellSolution> pell_solutions(long d, int count) {
    std::vector<PellSolution> out;
    if (count <= 0) return out;
    auto minimal = pell_minimal(d, /*certify_bound=*/0);
    if (!minimal) return out;
    const Integer& x0 = minimal->x;
    const Integer& y0 = minimal->y;
    out.push_back(*minimal);
    while (static_cast<int>(out.size()) < count) {
        const PellSolution& s = out.back();
        out.emplace_back(x0 * s.x + 4 * Integer(d) * y0 * s.y, x0 * s.y + y0 * s.x, d);
    }
    return out;
}

std::vector<PellSolution> pell_bruteforce_oracle(long d, const Integer& y_bound) {
    if (d < 1) throw std::invalid_argument("pell_bruteforce_oracle: d must be >= 1");
    if (is_perfect_square(Integer(d)))
        throw std::invalid_argument("pell_bruteforce_oracle: d must not be a perfect square");
    std::vector<PellSolution> out;
    scan_range(d, 1, y_bound, out, /*stop_at_first=*/false);
    return out;
}

}  // namespace pellwall
