#pragma once

#include "nilgeo/hermitian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgeo {

/// Finite-dimensional complex associative algebra by multiplication
/// table: a_p * a_q = sum_r mult[p][q][r] a_r, entries in Q(i).
/// Associativity is verified on all basis triples at construction.
struct AssociativeAlgebra {
    std::string name;
    int dim = 0; // complex dimension
    std::vector<std::string> names;
    std::vector<std::vector<ComplexVec>> mult;

    static AssociativeAlgebra create(std::string name, std::vector<std::string> basis_names,
                                     std::vector<std::vector<ComplexVec>> mult);

    ComplexVec multiply(const ComplexVec& a, const ComplexVec& b) const;
    ComplexVec unit(int p) const {
        ComplexVec v(dim);
        v[p] = GaussianRational(1L);
        return v;
    }
    bool commutative() const;
    /// Largest s with A^s != 0 (1 for a nonzero algebra with zero
    /// products); nullopt when the power chain stabilizes above zero.
    std::optional<int> nilpotency_index() const;
};

/// A_k: strictly upper triangular k x k complex matrices; basis E_{pq}
/// (p < q, lexicographic), E_{pq} E_{rs} = delta_{qr} E_{ps}.
AssociativeAlgebra strictly_upper_triangular(int k); // requires k >= 2

/// t C[t]/(t^m): basis t, t^2, .., t^{m-1}.
AssociativeAlgebra truncated_polynomials(int m); // requires m >= 2

/// aff(A) = A + A with [(a,b),(a',b')] = (aa'-a'a, ab'-a'b), realified
/// with the ordered basis (a_1, i a_1, a_2, i a_2, ...) per copy, and the
/// hypercomplex triple J(a,b) = (b,-a), K(a,b) = (-ia, ib), I = JK.
struct AffAlgebra {
    LieAlgebra g;
    HypercomplexStructure H;
};
AffAlgebra aff(const AssociativeAlgebra& A, const std::string& lie_name);

/// Catalog entry: algebra, optional structures and metric, and the
/// expected-property manifest. verify_manifest() re-derives every claim
/// with the verification ops and throws on any mismatch.
struct CatalogEntry {
    std::string name;
    std::string description;
    LieAlgebra g;
    std::optional<RationalMatrix> I;            // single complex structure
    std::optional<HypercomplexStructure> triple;
    std::optional<RationalMatrix> metric;

    // manifest
    std::optional<int> expected_step;           // nullopt = not nilpotent
    std::optional<bool> expected_abelian;       // abelian structure(s)?
    std::optional<bool> expected_hkt;           // HKT for the (averaged) metric?

    void verify_manifest() const;
};

std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
CatalogEntry catalog_entry(const std::string& name);

} // namespace nilgeo
