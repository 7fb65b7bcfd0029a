#include "pellwall/theta.hpp"

#include <stdexcept>

namespace pellwall {

namespace {

Integer mod_reduce(const Integer& v, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;  // in [0, m)
}

void require_nontrivial(const PellSolution& s, const char* who) {
    if (s.is_trivial())
        throw std::invalid_argument(std::string(who) + ": solution must be nontrivial");
}

}  // namespace

ThetaModuli::ThetaModuli(Integer mj, Integer mk, Integer pm)
    : mod_j(std::move(mj)), mod_k(std::move(mk)), phase_mod(std::move(pm)) {
    if (mod_j < 1 || mod_k < 1 || phase_mod < 1)
        throw std::invalid_argument("ThetaModuli: moduli must be positive");
    // Phases pj*j + pk*k are exponents mod phase_mod evaluated on residues
    // mod (mod_j, mod_k); well-defined only when phase_mod divides both.
    if (mod_j % phase_mod != 0 || mod_k % phase_mod != 0)
        throw std::invalid_argument("ThetaModuli: phase_mod must divide both index moduli");
}

MonomialOperator::MonomialOperator(ThetaModuli m, bool negate, Integer sj, Integer sk, Integer pj,
                                   Integer pk, Integer pc)
    : mod_(std::move(m)),
      negate_(negate),
      sj_(mod_reduce(sj, mod_.mod_j)),
      sk_(mod_reduce(sk, mod_.mod_k)),
      pj_(mod_reduce(pj, mod_.phase_mod)),
      pk_(mod_reduce(pk, mod_.phase_mod)),
      pc_(mod_reduce(pc, mod_.phase_mod)) {}

MonomialOperator MonomialOperator::identity(ThetaModuli m) {
    return MonomialOperator(std::move(m), false, 0, 0, 0, 0, 0);
}

MonomialOperator MonomialOperator::shift(ThetaModuli m, const Integer& sj, const Integer& sk) {
    return MonomialOperator(std::move(m), false, sj, sk, 0, 0, 0);
}

MonomialOperator MonomialOperator::diagonal_phase(ThetaModuli m, const Integer& pj,
                                                  const Integer& pk) {
    return MonomialOperator(std::move(m), false, 0, 0, pj, pk, 0);
}

MonomialOperator MonomialOperator::inversion(ThetaModuli m) {
    return MonomialOperator(std::move(m), true, 0, 0, 0, 0, 0);
}

MonomialOperator operator*(const MonomialOperator& a, const MonomialOperator& b) {
    if (!(a.mod_ == b.mod_))
        throw std::invalid_argument("MonomialOperator: mismatched index contexts");
    // (A o B)(delta_v) = xi^{L_B(v) + L_A(eps_B v + s_B)} delta_{eps_A(eps_B v + s_B) + s_A}
    long eps_a = a.negate_ ? -1 : 1;
    long eps_b = b.negate_ ? -1 : 1;
    bool negate = a.negate_ != b.negate_;
    Integer sj = eps_a * b.sj_ + a.sj_;
    Integer sk = eps_a * b.sk_ + a.sk_;
    Integer pj = b.pj_ + eps_b * a.pj_;
    Integer pk = b.pk_ + eps_b * a.pk_;
    Integer pc = b.pc_ + a.pc_ + a.pj_ * b.sj_ + a.pk_ * b.sk_;
    return MonomialOperator(a.mod_, negate, sj, sk, pj, pk, pc);
}

MonomialOperator MonomialOperator::pow(Integer e) const {
    if (e < 0) throw std::invalid_argument("MonomialOperator::pow: negative exponent");
    MonomialOperator result = identity(mod_);
    MonomialOperator base = *this;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

MonomialOperator MonomialOperator::inverse() const {
    long eps = negate_ ? -1 : 1;
    Integer sj = -eps * sj_;
    Integer sk = -eps * sk_;
    Integer pj = -eps * pj_;
    Integer pk = -eps * pk_;
    Integer pc = -pc_ + eps * (pj_ * sj_ + pk_ * sk_);
    return MonomialOperator(mod_, negate_, sj, sk, pj, pk, pc);
}

bool MonomialOperator::is_identity() const { return *this == identity(mod_); }

std::pair<Integer, ThetaIndex> MonomialOperator::apply(const ThetaIndex& v) const {
    Integer phase = mod_reduce(pj_ * v.j + pk_ * v.k + pc_, mod_.phase_mod);
    long eps = negate_ ? -1 : 1;
    ThetaIndex image{mod_reduce(eps * v.j + sj_, mod_.mod_j),
                     mod_reduce(eps * v.k + sk_, mod_.mod_k)};
    return {phase, image};
}

ThetaGenerators generators(long d, const PellSolution& s) {
    require_nontrivial(s, "generators");
    if (s.d != d) throw std::invalid_argument("generators: solution belongs to another d");
    Integer dd(d);
    ThetaModuli m(2 * s.x * s.y, 2 * dd * s.x * s.y, s.x);
    return ThetaGenerators{m,
                           MonomialOperator::shift(m, -2 * s.y, 0),
                           MonomialOperator::shift(m, 0, -2 * dd * s.y),
                           MonomialOperator::diagonal_phase(m, 1, 0),
                           MonomialOperator::diagonal_phase(m, 0, 1),
                           MonomialOperator::inversion(m)};
}

std::optional<Integer> commutator_phase(const MonomialOperator& a, const MonomialOperator& b) {
    MonomialOperator ab = a * b;
    MonomialOperator ba = b * a;
    if (ab.negates() != ba.negates() || !(ab.shift_j() == ba.shift_j()) ||
        !(ab.shift_k() == ba.shift_k()) || !(ab.phase_j_coef() == ba.phase_j_coef()) ||
        !(ab.phase_k_coef() == ba.phase_k_coef()))
        return std::nullopt;
    Integer e = ab.phase_const() - ba.phase_const();
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), a.moduli().phase_mod.get_mpz_t());
    return r;
}

Integer eigenspace_dimension(long d, const PellSolution& s, const EigenspaceLabel& label,
                             const Integer& enum_cap) {
    require_nontrivial(s, "eigenspace_dimension");
    const Integer& x0 = s.x;
    if (label.l < 0 || label.l >= x0 || label.m < 0 || label.m >= x0)
        throw std::invalid_argument("eigenspace_dimension: label outside (Z/x0)^2");
    Integer dd(d);
    Integer closed_form = 4 * dd * s.y * s.y;  // (2y)(2dy)
    Integer total = closed_form * x0 * x0;
    if (total <= enum_cap) {
        Integer mod_j = 2 * s.x * s.y, mod_k = 2 * dd * s.x * s.y;
        Integer count = 0;
        for (Integer j = 0; j < mod_j; ++j) {
            if (j % x0 != label.l) continue;
            for (Integer k = 0; k < mod_k; ++k) {
                if (k % x0 == label.m) ++count;
            }
        }
        if (count != closed_form)
            throw std::logic_error("eigenspace_dimension: enumeration disagrees with 4dy^2");
    }
    return closed_form;
}

InvolutionSplit involution_split(long d, const PellSolution& s, const Integer& enum_cap) {
    require_nontrivial(s, "involution_split");
    Integer dd(d);
    const Integer& x0 = s.x;
    const Integer& y0 = s.y;
    Integer n = 4 * dd * y0 * y0;  // dim E_{(0,0)}
    InvolutionSplit split;
    split.dim_plus = (n + 4) / 2;   // = 2dy^2 + 2
    split.dim_minus = (n - 4) / 2;  // = 2dy^2 - 2
    // E_{(0,0)} = {(sigma x0, tau x0)}; the inversion fixes exactly the four
    // points with 2 sigma = 0 (mod 2y0) and 2 tau = 0 (mod 2dy0).
    split.fixed_indices = {ThetaIndex{0, 0}, ThetaIndex{y0 * x0, 0}, ThetaIndex{0, dd * y0 * x0},
                           ThetaIndex{y0 * x0, dd * y0 * x0}};
    if (n <= enum_cap) {
        Integer two_y = 2 * y0, two_dy = 2 * dd * y0;
        Integer fixed = 0, moved = 0;
        std::vector<ThetaIndex> fixed_seen;
        for (Integer sigma = 0; sigma < two_y; ++sigma) {
            for (Integer tau = 0; tau < two_dy; ++tau) {
                Integer si = mod_reduce(-sigma, two_y);
                Integer ti = mod_reduce(-tau, two_dy);
                if (si == sigma && ti == tau) {
                    ++fixed;
                    fixed_seen.push_back(ThetaIndex{sigma * x0, tau * x0});
                } else {
                    ++moved;
                }
            }
        }
        Integer plus = fixed + moved / 2;  // one symmetric vector per orbit
        Integer minus = moved / 2;
        if (fixed != 4 || plus != split.dim_plus || minus != split.dim_minus)
            throw std::logic_error("involution_split: enumeration disagrees with orbit count");
        for (const ThetaIndex& t : split.fixed_indices) {
            bool found = false;
            for (const ThetaIndex& u : fixed_seen) found = found || u == t;
            if (!found) throw std::logic_error("involution_split: fixed index set mismatch");
        }
    }
    return split;
}

OrbitStructure label_action_orbits(long d, const PellSolution& s, const Integer& enum_cap) {
    require_nontrivial(s, "label_action_orbits");
    Integer dd(d);
    const Integer& x0 = s.x;
    Integer g1, g2;
    Integer shift1 = mod_reduce(2 * s.y, x0);
    Integer shift2 = mod_reduce(2 * dd * s.y, x0);
    mpz_gcd(g1.get_mpz_t(), shift1.get_mpz_t(), x0.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), shift2.get_mpz_t(), x0.get_mpz_t());
    OrbitStructure orbits;
    orbits.orbit_size = (x0 / g1) * (x0 / g2);
    orbits.orbit_count = g1 * g2;
    orbits.transitive = orbits.orbit_count == 1;
    if (x0 * x0 <= enum_cap) {
        // Walk the subgroup generated by the two shifts from (0, 0); its
        // size must be the closed-form orbit size.
        Integer size1 = 0, cur = 0;
        do {
            cur = mod_reduce(cur + shift1, x0);
            ++size1;
        } while (cur != 0);
        Integer size2 = 0;
        cur = 0;
        do {
            cur = mod_reduce(cur + shift2, x0);
            ++size2;
        } while (cur != 0);
        if (size1 * size2 != orbits.orbit_size)
            throw std::logic_error("label_action_orbits: orbit walk disagrees with gcd count");
    }
    return orbits;
}

Prop41Certificate prop41_certificate(long d) {
    auto minimal = pell_minimal(d, /*certify_bound=*/0);
    if (!minimal)
        throw std::invalid_argument("prop41_certificate: d must not be a perfect square");
    const Integer& x0 = minimal->x;
    Prop41Certificate cert{d,
                           *minimal,
                           (x0 * x0 - 1) / 2 + 2,
                           (x0 * x0 - 1) / 2 + 1,
                           false,
                           label_action_orbits(d, *minimal),
                           x0 * x0};
    cert.dim_exceeds_conditions = cert.dim_e1_00 > cert.conditions_bound;
    if (!cert.dim_exceeds_conditions)
        throw std::logic_error("prop41_certificate: dimension count failed");
    if (!cert.orbits.transitive)
        throw std::logic_error("prop41_certificate: label action not transitive");
    // The symmetric eigenvalue-one subspace of E_{(0,0)} is what the
    // dimension count lives on; its closed form must match the involution
    // split, which ties the certificate back to the Pell relation.
    InvolutionSplit split = involution_split(d, *minimal);
    if (split.dim_plus != cert.dim_e1_00)
        throw std::logic_error("prop41_certificate: involution split disagrees");
    return cert;
}

}  // namespace pellwall
