#include "nilgeo/coframe.hpp"

#include <stdexcept>

namespace nilgeo {

Coframe Coframe::standard(const LieAlgebra& g) {
    Coframe c;
    c.m_ = g.dim();
    c.P_ = ComplexMatrix::identity(c.m_);
    c.Pinv_ = c.P_;
    c.build(g);
    std::vector<std::string> nm;
    for (const auto& b : g.basis_names()) nm.push_back(b + "*");
    c.names_ = std::move(nm);
    return c;
}

Coframe Coframe::from_rows(const LieAlgebra& g, ComplexMatrix P) {
    if (P.rows() != g.dim() || P.cols() != g.dim())
        throw std::invalid_argument("Coframe: matrix must be dim x dim");
    auto inv = inverse(P);
    if (!inv) throw std::invalid_argument("Coframe: rows are not a basis of the dual");
    Coframe c;
    c.m_ = g.dim();
    c.P_ = std::move(P);
    c.Pinv_ = std::move(*inv);
    c.build(g);
    c.names_.resize(c.m_);
    for (int a = 0; a < c.m_; a++) c.names_[a] = "f" + std::to_string(a + 1);
    return c;
}

void Coframe::build(const LieAlgebra& g) {
    // Structure constants in this frame: c'_{ab}^k = phi_k([X_a, X_b]),
    // then d phi_k = - sum_{a<b} c'_{ab}^k phi_a ^ phi_b.
    std::vector<ComplexVec> frame(m_);
    for (int a = 0; a < m_; a++) frame[a] = Pinv_.col(a);
    d1_.assign(m_, Form(2));
    for (int a = 0; a < m_; a++)
        for (int b = a + 1; b < m_; b++) {
            ComplexVec br = g.bracket(frame[a], frame[b]);
            if (vec_is_zero(br)) continue;
            ComplexVec coeffs = P_.apply(br);
            Mask mono = (Mask(1) << a) | (Mask(1) << b);
            for (int k = 0; k < m_; k++)
                if (!coeffs[k].is_zero()) d1_[k].add_term(mono, -coeffs[k]);
        }
}

Form Coframe::d(const Form& f) const {
    Form out(f.degree() + 1);
    for (const auto& [mask, c] : f.terms()) {
        std::vector<int> idx = mask_to_indices(mask);
        for (size_t r = 0; r < idx.size(); r++) {
            const Form& da = d1_[idx[r]];
            if (da.is_zero()) continue;
            Mask rest = mask & ~(Mask(1) << idx[r]);
            GaussianRational sign_c = (r % 2 == 0) ? c : -c;
            for (const auto& [dm, dc] : da.terms()) {
                if (dm & rest) continue;
                GaussianRational term = sign_c * dc;
                if (wedge_sign(dm, rest) < 0) term = -term;
                out.add_term(dm | rest, term);
            }
        }
    }
    return out;
}

Form Coframe::from_standard(const Form& f_std) const {
    // e^j = sum_i Pinv[j][i] phi_i, substituted monomial by monomial.
    std::vector<Form> expansion;
    expansion.reserve(m_);
    for (int j = 0; j < m_; j++) {
        Form ej(1);
        for (int i = 0; i < m_; i++) ej.add_term(Mask(1) << i, Pinv_.at(j, i));
        expansion.push_back(std::move(ej));
    }
    Form out(f_std.degree());
    for (const auto& [mask, c] : f_std.terms()) {
        Form prod = Form::monomial(0, 0, c);
        for (int j : mask_to_indices(mask)) prod = prod.wedge(expansion[j]);
        out = out + prod;
    }
    return out;
}

GaussianRational Coframe::eval(const Form& f, const std::vector<ComplexVec>& std_vectors) const {
    std::vector<ComplexVec> coords;
    coords.reserve(std_vectors.size());
    for (const auto& v : std_vectors) coords.push_back(frame_coordinates(v));
    return f.eval(coords);
}

} // namespace nilgeo
