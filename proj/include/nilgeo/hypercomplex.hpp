#pragma once

#include "nilgeo/complex_structure.hpp"

#include <array>
#include <optional>

namespace nilgeo {

/// Anticommuting integrable triple with IJ = K.
struct HypercomplexStructure {
    RationalMatrix I, J, K;

    const RationalMatrix& J_alpha(int alpha) const {
        switch (alpha) {
            case 1: return I;
            case 2: return J;
            default: return K;
        }
    }
};

struct HypercomplexValidation {
    bool pass = false;
    std::vector<std::string> failures; // named failing relations, e.g. "IJ != K"
};

HypercomplexValidation validate_hypercomplex(const LieAlgebra& g, const RationalMatrix& I,
                                             const RationalMatrix& J, const RationalMatrix& K);

/// Invariant connection: per-basis-vector endomorphisms A_i = nabla_{e_i}.
struct Connection {
    enum class Kind { obata, bismut, levi_civita, custom };
    Kind kind = Kind::custom;
    std::vector<RationalMatrix> A;

    const RationalMatrix& of_basis(int i) const { return A[i]; }
    RationalMatrix of(const RationalVec& x) const {
        RationalMatrix r(int(A.size()), int(A.size()));
        for (size_t i = 0; i < A.size(); i++)
            if (!x[i].is_zero()) r = r + A[i].scaled(x[i]);
        return r;
    }
    /// T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j].
    RationalVec torsion(const LieAlgebra& g, int i, int j) const {
        return vec_sub(vec_sub(A[i].col(j), A[j].col(i)), g.bracket_basis(i, j));
    }
};

/// The unique torsion-free connection with nabla I = nabla J = nabla K = 0,
/// evaluated exactly on basis pairs. Both defining properties are
/// re-checked on the result; a violation throws (corrupted input).
Connection obata_connection(const LieAlgebra& g, const HypercomplexStructure& H);

struct CurvatureTensor {
    int dim = 0;
    std::vector<RationalMatrix> store; // (i,j) with i < j, row-major over pairs

    const RationalMatrix& at_ordered(int i, int j) const {
        return store[size_t(i) * dim - size_t(i) * (i + 1) / 2 + (j - i - 1)];
    }
    RationalMatrix at(int i, int j) const {
        if (i == j) return RationalMatrix(dim, dim);
        return i < j ? at_ordered(i, j) : -at_ordered(j, i);
    }
};

/// R(X,Y) = A_X A_Y - A_Y A_X - A_{[X,Y]} on basis pairs.
CurvatureTensor curvature(const LieAlgebra& g, const Connection& conn);

/// Ric(X,Y) = tr(Z -> R(Z,X)Y).
RationalMatrix ricci(const LieAlgebra& g, const Connection& conn);
RationalMatrix ricci(const LieAlgebra& g, const CurvatureTensor& R);

/// tr(nabla_{[e_i,e_j]}) over basis pairs, with the cross-checks
///   tr(nabla_Z) = tr(J_alpha ad_{J_alpha Z})          (each alpha)
///   tr(J_alpha ad_{J_alpha Z}) independent of alpha   (all basis Z)
struct TraceBracketReport {
    bool all_zero = true;
    bool matches_J_trace = true;      // first identity, all alpha and pairs
    bool alpha_independent = true;    // second identity, all basis vectors
    std::vector<Rational> values;     // tr(nabla_{[e_i,e_j]}) for i<j
};
TraceBracketReport trace_nabla_bracket(const LieAlgebra& g, const Connection& conn,
                                       const HypercomplexStructure& H);

/// Infinitesimal holonomy: span of curvature endomorphisms, closed under
/// m -> [A_X, m] and under commutators, with a deterministic echelon
/// basis. Terminates within dim(g)^2 insertions by dimension count; the
/// optional bound aborts earlier (used to honor NILGEO_MAX_CLOSURE).
struct HolonomyAlgebra {
    int dim = 0;
    int closure_depth = 0;       // longest chain of bracketings from a seed
    int seed_rank = 0;           // dimension spanned by curvature alone
    std::vector<RationalMatrix> generators; // echelon-ordered basis
};
HolonomyAlgebra infinitesimal_holonomy(const LieAlgebra& g, const Connection& conn,
                                       std::optional<int> max_insertions = std::nullopt);

/// tr_C(h) = (tr(h) - i tr(I h)) / 2: the trace of h on g^{1,0}, i.e.
/// the scalar of the induced action on the top (1,0)-power. Throws when
/// h does not commute with I.
GaussianRational complex_trace(const RationalMatrix& h, const RationalMatrix& I);

struct SlGeneratorRecord {
    bool commutes_I = false, commutes_J = false, commutes_K = false;
    GaussianRational trace;
    bool trace_zero = false;
    bool trace_real = false;
};

/// SL(n,H) membership at the Lie-algebra level: every holonomy generator
/// commutes with I, J, K and has complex trace exactly 0. Also verifies
/// nabla eta = 0 directly (tr_C(A_X) = 0 for all X) and d eta = 0.
struct SlMembershipReport {
    bool pass = false;
    std::vector<SlGeneratorRecord> generators;
    bool nabla_eta_zero = false;
    bool d_eta_zero = false;
    int holonomy_dim = 0;
    int closure_depth = 0;
};
SlMembershipReport sl_membership_report(const LieAlgebra& g, const HypercomplexStructure& H,
                                        std::optional<int> max_insertions = std::nullopt);

} // namespace nilgeo
