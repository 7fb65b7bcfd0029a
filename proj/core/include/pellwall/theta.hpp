#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pellwall/pell.hpp"

namespace pellwall {

/// Index context for the standard theta representation attached to a Pell
/// solution (x0, y0) of x^2 - 4d y^2 = 1: basis vectors delta_{j,k} with
/// j mod 2 x0 y0 and k mod 2 d x0 y0, phases valued in Z/x0. The full index
/// set has 4 d x0^2 y0^2 elements and is never materialized above a cap;
/// all counting is closed-form with capped enumeration cross-checks.
struct ThetaModuli {
    Integer mod_j, mod_k;
    Integer phase_mod;  // order of the primitive root carried by phases

    ThetaModuli(Integer mod_j, Integer mod_k, Integer phase_mod);

    friend bool operator==(const ThetaModuli& a, const ThetaModuli& b) {
        return a.mod_j == b.mod_j && a.mod_k == b.mod_k && a.phase_mod == b.phase_mod;
    }
};

struct ThetaIndex {
    Integer j, k;

    friend bool operator==(const ThetaIndex& a, const ThetaIndex& b) {
        return a.j == b.j && a.k == b.k;
    }
};

/// Permutation-with-phase endomorphism of the theta basis:
///
///     delta_v  |->  xi^{pj*j + pk*k + pc} delta_{eps*v + (sj, sk)}
///
/// with eps = +-1 and all phases exponents in Z/phase_mod (no roots of
/// unity are ever evaluated). Closed under composition, which is what the
/// Heisenberg relations are checked against.
class MonomialOperator {
public:
    static MonomialOperator identity(ThetaModuli m);
    static MonomialOperator shift(ThetaModuli m, const Integer& sj, const Integer& sk);
    static MonomialOperator diagonal_phase(ThetaModuli m, const Integer& pj, const Integer& pk);
    static MonomialOperator inversion(ThetaModuli m);

    const ThetaModuli& moduli() const { return mod_; }
    bool negates() const { return negate_; }
    const Integer& shift_j() const { return sj_; }
    const Integer& shift_k() const { return sk_; }
    const Integer& phase_j_coef() const { return pj_; }
    const Integer& phase_k_coef() const { return pk_; }
    const Integer& phase_const() const { return pc_; }

    /// A * B applies B first.
    friend MonomialOperator operator*(const MonomialOperator& a, const MonomialOperator& b);

    MonomialOperator pow(Integer e) const;  // e >= 0
    MonomialOperator inverse() const;
    bool is_identity() const;

    /// Phase exponent and image index of delta_v.
    std::pair<Integer, ThetaIndex> apply(const ThetaIndex& v) const;

    friend bool operator==(const MonomialOperator& a, const MonomialOperator& b) {
        return a.mod_ == b.mod_ && a.negate_ == b.negate_ && a.sj_ == b.sj_ && a.sk_ == b.sk_ &&
               a.pj_ == b.pj_ && a.pk_ == b.pk_ && a.pc_ == b.pc_;
    }

private:
    MonomialOperator(ThetaModuli m, bool negate, Integer sj, Integer sk, Integer pj, Integer pk,
                     Integer pc);

    ThetaModuli mod_;
    bool negate_;
    Integer sj_, sk_;      // reduced mod (mod_j, mod_k)
    Integer pj_, pk_, pc_; // reduced mod phase_mod
};

/// The five distinguished endomorphisms attached to a solution: two index
/// shifts by (-2y, 0) and (0, -2dy), the two diagonal characters, and the
/// inversion delta_{j,k} -> delta_{-j,-k}.
struct ThetaGenerators {
    ThetaModuli moduli;
    MonomialOperator a1, a2, a3, a4, inv;
};

ThetaGenerators generators(long d, const PellSolution& s);

/// Exponent e with A B = xi^e B A, when the two composites differ by a
/// scalar; nullopt otherwise. Decided symbolically from the composition
/// law, never by matrix enumeration.
std::optional<Integer> commutator_phase(const MonomialOperator& a, const MonomialOperator& b);

struct EigenspaceLabel {
    Integer l, m;  // in (Z/x0)^2
};

inline constexpr long kDefaultEnumerationCap = 1000000;

/// Dimension of the simultaneous eigenspace E_{(l,m)} of the two diagonal
/// generators: closed form (2y)(2dy) = 4dy^2, cross-checked by full index
/// enumeration while the index set is at most enum_cap.
Integer eigenspace_dimension(long d, const PellSolution& s, const EigenspaceLabel& label,
                             const Integer& enum_cap = kDefaultEnumerationCap);

/// Restriction of the inversion to E_{(0,0)}: eigenvalue +1 and -1
/// dimensions by orbit counting (exactly four fixed basis vectors), with
/// enumeration cross-check while dim E_{(0,0)} = 4dy^2 <= enum_cap.
struct InvolutionSplit {
    Integer dim_plus, dim_minus;
    std::vector<ThetaIndex> fixed_indices;
};

InvolutionSplit involution_split(long d, const PellSolution& s,
                                 const Integer& enum_cap = kDefaultEnumerationCap);

/// Action of the shift generators on eigenspace labels: l -> l - 2y,
/// m -> m - 2dy (mod x0). For Pell solutions both shifts are units, so the
/// action is transitive; the structure is computed from gcds either way
/// and verified by walking the orbit of (0,0) while x0^2 <= enum_cap.
struct OrbitStructure {
    Integer orbit_size, orbit_count;
    bool transitive;

    friend bool operator==(const OrbitStructure& a, const OrbitStructure& b) {
        return a.orbit_size == b.orbit_size && a.orbit_count == b.orbit_count &&
               a.transitive == b.transitive;
    }
};

OrbitStructure label_action_orbits(long d, const PellSolution& s,
                                   const Integer& enum_cap = kDefaultEnumerationCap);

/// The counting certificate behind the lower bound h^0 >= x0^2 for the
/// x0-torsion-vanishing system attached to the minimal solution: the
/// symmetric invariant subsystem of E_{(0,0)} has projective dimension
/// strictly larger than the number of conditions imposed by the x0^2
/// torsion translates (paired off by inversion, only the origin being
/// 2-torsion since x0 is odd), and the label action transports the
/// resulting curve to every eigenspace.
struct Prop41Certificate {
    long d;
    PellSolution solution;
    Integer dim_e1_00;        // (x0^2 - 1)/2 + 2
    Integer conditions_bound; // (x0^2 - 1)/2 + 1
    bool dim_exceeds_conditions;
    OrbitStructure orbits;
    Integer h0_lower_bound;   // x0^2
};

Prop41Certificate prop41_certificate(long d);

}  // namespace pellwall
