#pragma once

#include "nilgeo/coframe.hpp"

#include <optional>

namespace nilgeo {

/// Thrown when an operation's hypothesis fails (non-nilpotent input,
/// non-integrable structure, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Almost-complex structure on a Lie algebra: a real endomorphism with
/// I^2 = -Id (enforced at construction; dim must be even), plus the
/// validation verdicts filled in by validate_complex_structure.
struct ComplexStructure {
    RationalMatrix I;
    bool integrable = false;
    bool abelian = false;
};

/// Splitting of the complexified dual adapted to I. Coframe rows
/// 0..n-1 span Lambda^{1,0} = {alpha : alpha(IX) = i alpha(X)}, rows
/// n..2n-1 are their conjugates spanning Lambda^{0,1}.
struct Bigrading {
    int n = 0; // complex dimension
    Coframe cof;

    Mask top10() const { return low_mask(n); }
    std::pair<int, int> bidegree(Mask m) const {
        int p = mask_degree(m & low_mask(n));
        return {p, mask_degree(m) - p};
    }
    /// Conjugation on forms over this coframe: swap the two index
    /// blocks and conjugate coefficients.
    Form conj_form(const Form& f) const;
};

/// Checks I is square of the algebra's dimension, the dimension is even
/// and nonzero, and I^2 = -Id; throws std::invalid_argument otherwise.
void require_almost_complex(const LieAlgebra& g, const RationalMatrix& I);

Bigrading make_bigrading(const LieAlgebra& g, const RationalMatrix& I);

/// The three integrability criteria, evaluated independently:
///   (a) g^{0,1} closed under bracket,
///   (b) Nijenhuis tensor N(X,Y) = [X,Y] + I[IX,Y] + I[X,IY] - [IX,IY]
///       vanishes on basis pairs,
///   (c) d(Lambda^{1,0}) has no (0,2) component.
/// They provably agree; a mismatch aborts (internal error).
struct IntegrabilityReport {
    bool subalgebra = false;
    bool nijenhuis = false;
    bool no_02_component = false;
    std::optional<std::pair<int, int>> witness; // basis pair violating Nijenhuis
    bool pass() const { return subalgebra && nijenhuis && no_02_component; }
};
IntegrabilityReport is_integrable(const LieAlgebra& g, const RationalMatrix& I);

/// [Ix, Iy] = [x, y] on all basis pairs. When it holds, the abelianness
/// of g^{1,0} is re-verified as a cross-check.
bool is_abelian_structure(const LieAlgebra& g, const RationalMatrix& I);

/// Full validation: construction invariants plus the two verdicts.
ComplexStructure validate_complex_structure(const LieAlgebra& g, RationalMatrix I);

/// Ascending-chain coframe: (1,0)-forms omega_1..omega_n with
/// d omega_i = sum_{j<i} eta^i_j ^ omega_j, witnesses included.
/// All forms are expressed over the bigrading coframe.
struct SalamonCoframe {
    Bigrading big;
    std::vector<Form> omega;              // n forms, filtration order
    std::vector<std::vector<Form>> eta;   // eta[i][j] for j < i
    std::vector<int> stage;               // chain stage that produced omega_i
};

/// Throws PreconditionError when g is not nilpotent or I not integrable;
/// throws std::runtime_error("not a nilpotent complex structure") if the
/// chain stalls before exhausting Lambda^{1,0}.
SalamonCoframe salamon_coframe(const LieAlgebra& g, const RationalMatrix& I);

/// eta = omega_1 ^ ... ^ omega_n over the bigrading coframe, and its
/// exterior differential. Lambda^{n,0} is one-dimensional, so the
/// closedness verdict does not depend on the basis choice.
struct CanonicalFormResult {
    Bigrading big;
    Form eta;
    Form d_eta;
    bool closed = false;
};
CanonicalFormResult canonical_form(const LieAlgebra& g, const RationalMatrix& I);

/// tr(I ad_X) for X over the (complexified) standard basis; the trace
/// lemma asserts all values vanish for nilpotent g with integrable I.
std::vector<GaussianRational> trace_J_ad(const LieAlgebra& g, const RationalMatrix& I);

/// Lie-algebra Dolbeault cohomology H^{p,0}: kernel of the
/// (p+1,0)-projection of d on Lambda^{p,0} modulo the image from
/// Lambda^{p-1,0}. Representatives are reduced mod the image and
/// re-echelonized, so they are deterministic.
struct DolbeaultP0 {
    int p = 0;
    int dim = 0;
    int kernel_dim = 0;
    int image_rank = 0;
    std::vector<Form> representatives;
    std::vector<Mask> monomials; // ordered basis of Lambda^{p,0} used for coordinates
};
DolbeaultP0 dolbeault_p0(const LieAlgebra& g, const Bigrading& big, int p);
DolbeaultP0 dolbeault_p0(const LieAlgebra& g, const RationalMatrix& I, int p);

/// Matrix of the (p+1,0)-projection of d from Lambda^{p,0} to
/// Lambda^{p+1,0} in the sorted monomial bases (exposed for tests and
/// for the partial-of-partial = 0 check).
ComplexMatrix dolbeault_operator(const Bigrading& big, int p);

std::vector<Mask> bidegree_monomials(int n, int p, int q);

} // namespace nilgeo
