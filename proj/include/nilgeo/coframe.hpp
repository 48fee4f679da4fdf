#pragma once

#include "nilgeo/form.hpp"
#include "nilgeo/lie_algebra.hpp"

#include <string>
#include <vector>

namespace nilgeo {

/// A basis of the complexified dual, with the Chevalley-Eilenberg
/// differential expressed in it. Row a of the defining matrix P gives
/// the coframe element phi_a in standard dual coordinates; the dual
/// frame vectors are the columns of P^{-1}.
///
/// Convention: d alpha(X, Y) = -alpha([X, Y]) on 1-forms, extended by
/// the graded Leibniz rule. All caches are built at construction and
/// never mutated, so a Coframe is freely shareable across threads.
class Coframe {
public:
    Coframe() = default; // empty placeholder; build via the factories

    static Coframe standard(const LieAlgebra& g);
    /// Throws when the rows of P are not a basis.
    static Coframe from_rows(const LieAlgebra& g, ComplexMatrix P);

    int size() const { return m_; }
    const ComplexMatrix& rows() const { return P_; }
    const ComplexMatrix& rows_inverse() const { return Pinv_; }

    /// Coframe element a as a 1-form over this coframe (a monomial).
    Form basis_form(int a) const { return Form::monomial(1, Mask(1) << a, GaussianRational(1L)); }
    /// Coframe element a in standard dual coordinates.
    ComplexVec covector(int a) const { return P_.row(a); }
    /// Dual frame vector X_a in standard basis coordinates.
    ComplexVec frame_vector(int a) const { return Pinv_.col(a); }

    /// d of coframe element a, as a 2-form over this coframe.
    const Form& d_basis(int a) const { return d1_[a]; }

    /// Graded-Leibniz extension of d to any form over this coframe.
    Form d(const Form& f) const;

    /// Rewrites a form given over the standard coframe into this one.
    /// Intended for low degrees (the cost is product-of-expansions).
    Form from_standard(const Form& f_std) const;

    /// Coordinates of a standard-basis vector x in the dual frame:
    /// phi_a(x) for each a.
    ComplexVec frame_coordinates(const ComplexVec& x_std) const { return P_.apply(x_std); }

    /// Evaluates a form over this coframe on vectors given in standard
    /// basis coordinates.
    GaussianRational eval(const Form& f, const std::vector<ComplexVec>& std_vectors) const;

    std::vector<std::string> names() const { return names_; }
    void set_names(std::vector<std::string> names) { names_ = std::move(names); }

private:
    void build(const LieAlgebra& g);

    int m_ = 0;
    ComplexMatrix P_, Pinv_;
    std::vector<Form> d1_;
    std::vector<std::string> names_;
};

} // namespace nilgeo
