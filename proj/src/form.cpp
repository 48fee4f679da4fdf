#include "nilgeo/form.hpp"

#include <stdexcept>

namespace nilgeo {

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 0 || i >= 64) throw std::invalid_argument("multi-index entry out of range");
        Mask bit = Mask(1) << i;
        if (m & bit) throw std::invalid_argument("repeated multi-index entry");
        m |= bit;
    }
    return m;
}

std::vector<Mask> k_subsets(int m, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > m) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Mask v = low_mask(k);
    Mask limit = Mask(1) << m;
    while (v < limit) {
        out.push_back(v);
        Mask t = v | (v - 1);
        Mask low = ~t & (t + 1); // lowest bit of ~t
        v = (t + 1) | ((low - 1) >> (__builtin_ctzll(v) + 1));
        if (v == 0) break;
    }
    return out;
}

Form Form::monomial(int degree, Mask m, GaussianRational c) {
    if (mask_degree(m) != degree) throw std::invalid_argument("Form: mask degree mismatch");
    Form f(degree);
    f.add_term(m, c);
    return f;
}

void Form::add_term(Mask m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (mask_degree(m) != degree_) throw std::invalid_argument("Form: mask degree mismatch");
    auto [it, inserted] = c_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Form Form::operator+(const Form& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("Form: degree mismatch in sum");
    Form r(*this);
    for (const auto& [m, c] : o.c_) r.add_term(m, c);
    return r;
}

Form Form::operator-(const Form& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("Form: degree mismatch in difference");
    Form r(*this);
    for (const auto& [m, c] : o.c_) r.add_term(m, -c);
    return r;
}

Form Form::scaled(const GaussianRational& c) const {
    Form r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : c_) r.c_.emplace(m, x * c);
    return r;
}

Form Form::wedge(const Form& o) const {
    Form r(degree_ + o.degree_);
    for (const auto& [ma, ca] : c_)
        for (const auto& [mb, cb] : o.c_) {
            if (ma & mb) continue;
            GaussianRational c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    return r;
}

Form Form::wedge_pow(int k) const {
    if (k < 0) throw std::invalid_argument("Form: negative wedge power");
    Form r = Form::monomial(0, 0, GaussianRational(1L));
    for (int i = 0; i < k; i++) r = r.wedge(*this);
    return r;
}

Form Form::conj_coeffs() const {
    Form r(degree_);
    for (const auto& [m, c] : c_) r.c_.emplace(m, c.conj());
    return r;
}

GaussianRational Form::eval(const std::vector<ComplexVec>& vectors) const {
    if (int(vectors.size()) != degree_)
        throw std::invalid_argument("Form: eval needs exactly degree many vectors");
    GaussianRational total;
    for (const auto& [m, c] : c_) {
        std::vector<int> idx = mask_to_indices(m);
        ComplexMatrix pairing(degree_, degree_);
        for (int r = 0; r < degree_; r++)
            for (int col = 0; col < degree_; col++) pairing.at(r, col) = vectors[col][idx[r]];
        total += c * determinant(pairing);
    }
    return total;
}

Form Form::bidegree_part(int n, int p, int q) const {
    Form r(degree_);
    Mask low = low_mask(n);
    for (const auto& [m, c] : c_) {
        int pp = mask_degree(m & low);
        int qq = degree_ - pp;
        if (pp == p && qq == q) r.add_term(m, c);
    }
    return r;
}

std::string Form::str(const std::vector<std::string>& coframe_names) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : c_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + emit_scalar(c) + ")";
        for (int i : mask_to_indices(m)) {
            out += "^";
            out += (i < int(coframe_names.size())) ? coframe_names[i] : ("#" + std::to_string(i));
        }
    }
    return out;
}

} // namespace nilgeo
