#pragma once

#include "nilgeo/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nilgeo {

/// One bracket record [e_x, e_y] = sum_k coeff * e_k, with x < y (0-based).
struct BracketSpec {
    int x = 0, y = 0;
    std::vector<std::pair<int, Rational>> terms;
};

/// Finite-dimensional real Lie algebra given by rational structure
/// constants. Antisymmetry is built in (constants are stored for x < y
/// only); the Jacobi identity is checked by jacobi_violation(), not
/// assumed, so tampered tables can be constructed for negative tests.
class LieAlgebra {
public:
    LieAlgebra() = default; // empty placeholder; fill via create()

    static LieAlgebra create(std::string name, std::vector<std::string> basis_names,
                             const std::vector<BracketSpec>& brackets);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// [e_i, e_j] for any i, j (antisymmetry synthesized).
    const RationalVec& bracket_basis(int i, int j) const { return table_[size_t(i) * dim_ + j]; }

    RationalVec unit(int i) const {
        RationalVec v(dim_);
        v[i] = Rational(1);
        return v;
    }

    RationalVec bracket(const RationalVec& x, const RationalVec& y) const;
    ComplexVec bracket(const ComplexVec& x, const ComplexVec& y) const;

    /// nullopt when Jacobi holds on all basis triples; otherwise the
    /// first violating (i, j, k) in lexicographic order.
    std::optional<std::array<int, 3>> jacobi_violation() const;

    Matrix<Rational> ad(int i) const;
    Matrix<Rational> ad(const RationalVec& x) const;
    ComplexMatrix ad_complex(const ComplexVec& x) const;

    struct LowerCentralSeries {
        std::vector<int> dims;                      // dim g, dim [g,g], ...
        std::vector<EchelonBasis<Rational>> terms;  // matching bases
        std::optional<int> step;                    // first index reaching 0; nullopt = not nilpotent
    };
    LowerCentralSeries lower_central_series() const;

    std::optional<int> nilpotency_step() const { return lower_central_series().step; }
    bool is_nilpotent() const { return nilpotency_step().has_value(); }

    /// Brackets restricted to x < y, for serialization.
    std::vector<BracketSpec> bracket_specs() const;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<RationalVec> table_; // dense dim x dim table of bracket values
};

} // namespace nilgeo
