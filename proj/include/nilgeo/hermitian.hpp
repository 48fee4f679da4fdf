#pragma once

#include "nilgeo/hypercomplex.hpp"

#include <array>
#include <optional>

namespace nilgeo {

/// Invariant Riemannian metric: symmetric positive-definite rational
/// matrix. Both properties are verified at construction; definiteness
/// by exact leading principal minors.
struct Metric {
    RationalMatrix G;

    static Metric make(RationalMatrix G);
};

bool is_symmetric(const RationalMatrix& G);
/// Exact Sylvester test: all leading principal minors positive.
bool is_positive_definite(const RationalMatrix& G);
/// g(Sx, Sy) = g(x, y), i.e. S^T G S = G.
bool is_hermitian_for(const RationalMatrix& G, const RationalMatrix& S);

/// g'(x,y) = (g(x,y) + g(Ix,Iy) + g(Jx,Jy) + g(Kx,Ky)) / 4. The result
/// is Hermitian for all three structures, positive definite, and the
/// operation is idempotent.
Metric su2_average(const Metric& g, const HypercomplexStructure& H);

/// The 2-form g(., S.) over the standard coframe (real coefficients).
Form two_form_of(const RationalMatrix& G, const RationalMatrix& S);

/// Omega = omega_J + i omega_K in the (1,0)-coframe of I, with the
/// (2,0)-purity and nondegeneracy checks.
struct OmegaResult {
    Bigrading big;
    Form omega_adapted;   // full form in the adapted coframe
    Form pure20;          // its (2,0) part
    Form impurity;        // (1,1) + (0,2) parts; zero for quaternionic Hermitian g
    bool is_pure = false;
    bool nondegenerate = false; // Omega^{dim/4} != 0
};
OmegaResult omega_form(const LieAlgebra& g, const HypercomplexStructure& H, const Metric& metric);

/// HKT test: partial(Omega) = 0 in Lambda^{3,0}_I; also reports d Omega
/// (the metric is hyperkahler exactly when that vanishes too).
struct HktResult {
    bool hkt = false;
    bool hyperkahler = false;
    Form residual;   // partial Omega
    Form d_omega;    // full d Omega in the adapted coframe
};
HktResult hkt_check(const LieAlgebra& g, const HypercomplexStructure& H, const Metric& metric);

/// The space {h symmetric, quaternionic Hermitian : partial Omega_h = 0}.
/// The HKT condition is linear in h, so this is an exact kernel
/// computation. The positive-definiteness probe walks small integer
/// combinations of the solution basis (coefficients in [-bound, bound],
/// at most `cap` combinations) and reports the first PD solution found;
/// finding none only means none within the search bound.
struct HktMetricSpace {
    int hermitian_dim = 0;
    int solution_dim = 0;
    bool full_space = false; // solution space equals the whole Hermitian space
    std::vector<RationalMatrix> hermitian_basis;
    std::vector<RationalMatrix> solution_basis;
    std::optional<RationalMatrix> pd_example;
    long combinations_tried = 0;
};
HktMetricSpace hkt_metric_space(const LieAlgebra& g, const HypercomplexStructure& H,
                                int probe_bound = 3, long probe_cap = 20000);

/// Koszul formula on invariant fields:
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
/// Metric compatibility and vanishing torsion are asserted on the result.
Connection levi_civita(const LieAlgebra& g, const Metric& metric);

/// Bismut connection for (g, I): g(nabla^B_X Y, Z) = g(nabla^LC_X Y, Z)
/// + c(X,Y,Z)/2 with torsion 3-form c(X,Y,Z) = -d omega(IX, IY, IZ).
/// Asserted postconditions: nabla^B g = 0, nabla^B I = 0, and the
/// g-lowered torsion equals c (totally skew). A violation throws: it
/// would signal an internal sign-convention inconsistency.
struct BismutResult {
    Connection conn;
    Form torsion3; // c over the standard coframe
};
BismutResult bismut(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I);

/// Abelian shortcut g(nabla^B_X Y, Z) = -g(X, [Y,Z]); refuses non-abelian
/// structures and verifies exact agreement with the general route.
Connection bismut_abelian(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I);

/// Lee form, computed two independent ways and asserted equal:
///  (a) theta = d* omega o I with d* the exact Gram-matrix adjoint of d,
///  (b) theta(X) = -1/2 sum_{j,k} G^{jk} c(IX, e_j, I e_k).
struct LeeResult {
    RationalVec theta;
    bool balanced = false;
};
LeeResult lee_form(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I);

struct BalancedReport {
    bool balanced_all = false;
    std::array<LeeResult, 3> lee; // for I, J, K
};
BalancedReport quaternionic_balanced_check(const LieAlgebra& g, const HypercomplexStructure& H,
                                           const Metric& metric);

/// The (1,0)-form theta with partial(conj(Omega)^n) = theta ^ conj(Omega)^n,
/// where conj(Omega)^n spans Lambda^{0,2n}. For nilpotent algebras theta = 0.
struct CanonicalTorsionTheta {
    Form theta;
    bool zero = false;
};
CanonicalTorsionTheta canonical_torsion_theta(const LieAlgebra& g, const HypercomplexStructure& H,
                                              const Metric& metric);

/// Rank data for L_Omega^{n-i}: H^{i,0} -> H^{2n-i,0} (2n = complex dim),
/// computed on representatives. The induced map is well defined on
/// cohomology whenever the wedged images are closed (always the case for
/// HKT metrics); the record keeps that flag explicit.
struct LefschetzResult {
    int i = 0;
    int power = 0;
    int dim_source = 0;
    int dim_target = 0;
    int map_rank = 0;
    bool images_closed = false;
    bool isomorphism = false;
};
LefschetzResult lefschetz_map(const LieAlgebra& g, const HypercomplexStructure& H,
                              const Metric& metric, int i);

/// is_abelian_structure agrees across I, J, K (all or none).
struct AbelianEquivalence {
    bool agree = false;
    bool abelian = false; // the common verdict when agree
    std::array<bool, 3> per{};
};
AbelianEquivalence abelian_equivalence_check(const LieAlgebra& g, const HypercomplexStructure& H);

} // namespace nilgeo
