#include "nilgeo/lie_algebra.hpp"

#include <set>
#include <stdexcept>

namespace nilgeo {

LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> basis_names,
                              const std::vector<BracketSpec>& brackets) {
    LieAlgebra g;
    g.name_ = std::move(name);
    g.dim_ = int(basis_names.size());
    g.names_ = std::move(basis_names);
    g.table_.assign(size_t(g.dim_) * g.dim_, RationalVec(g.dim_));
    std::set<std::pair<int, int>> seen;
    for (const auto& b : brackets) {
        if (b.x < 0 || b.y < 0 || b.x >= g.dim_ || b.y >= g.dim_)
            throw std::invalid_argument("LieAlgebra: bracket index out of range");
        if (b.x >= b.y)
            throw std::invalid_argument("LieAlgebra: bracket records require x < y");
        if (!seen.insert({b.x, b.y}).second)
            throw std::invalid_argument("LieAlgebra: duplicate bracket record");
        RationalVec v(g.dim_);
        for (const auto& [k, c] : b.terms) {
            if (k < 0 || k >= g.dim_)
                throw std::invalid_argument("LieAlgebra: bracket term index out of range");
            v[k] += c;
        }
        g.table_[size_t(b.x) * g.dim_ + b.y] = v;
        for (auto& c : v) c = -c;
        g.table_[size_t(b.y) * g.dim_ + b.x] = std::move(v);
    }
    return g;
}

RationalVec LieAlgebra::bracket(const RationalVec& x, const RationalVec& y) const {
    RationalVec r(dim_);
    for (int i = 0; i < dim_; i++) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; j++) {
            if (y[j].is_zero() || i == j) continue;
            Rational c = x[i] * y[j];
            const RationalVec& b = bracket_basis(i, j);
            for (int k = 0; k < dim_; k++)
                if (!b[k].is_zero()) r[k] += c * b[k];
        }
    }
    return r;
}

ComplexVec LieAlgebra::bracket(const ComplexVec& x, const ComplexVec& y) const {
    ComplexVec r(dim_);
    for (int i = 0; i < dim_; i++) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; j++) {
            if (y[j].is_zero() || i == j) continue;
            GaussianRational c = x[i] * y[j];
            const RationalVec& b = bracket_basis(i, j);
            for (int k = 0; k < dim_; k++)
                if (!b[k].is_zero()) r[k] += c * GaussianRational(b[k]);
        }
    }
    return r;
}

std::optional<std::array<int, 3>> LieAlgebra::jacobi_violation() const {
    for (int i = 0; i < dim_; i++)
        for (int j = i + 1; j < dim_; j++)
            for (int k = j + 1; k < dim_; k++) {
                RationalVec s = bracket(bracket_basis(i, j), unit(k));
                s = vec_add(s, bracket(bracket_basis(j, k), unit(i)));
                s = vec_add(s, bracket(bracket_basis(k, i), unit(j)));
                if (!vec_is_zero(s)) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

Matrix<Rational> LieAlgebra::ad(int i) const {
    Matrix<Rational> m(dim_, dim_);
    for (int j = 0; j < dim_; j++) {
        const RationalVec& b = bracket_basis(i, j);
        for (int k = 0; k < dim_; k++) m.at(k, j) = b[k];
    }
    return m;
}

Matrix<Rational> LieAlgebra::ad(const RationalVec& x) const {
    Matrix<Rational> m(dim_, dim_);
    for (int i = 0; i < dim_; i++) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; j++) {
            const RationalVec& b = bracket_basis(i, j);
            for (int k = 0; k < dim_; k++)
                if (!b[k].is_zero()) m.at(k, j) += x[i] * b[k];
        }
    }
    return m;
}

ComplexMatrix LieAlgebra::ad_complex(const ComplexVec& x) const {
    ComplexMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; i++) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; j++) {
            const RationalVec& b = bracket_basis(i, j);
            for (int k = 0; k < dim_; k++)
                if (!b[k].is_zero()) m.at(k, j) += x[i] * GaussianRational(b[k]);
        }
    }
    return m;
}

LieAlgebra::LowerCentralSeries LieAlgebra::lower_central_series() const {
    LowerCentralSeries s;
    EchelonBasis<Rational> current(dim_);
    for (int i = 0; i < dim_; i++) current.insert(unit(i));
    s.dims.push_back(current.dim());
    s.terms.push_back(current);
    while (true) {
        EchelonBasis<Rational> next(dim_);
        for (int i = 0; i < dim_; i++)
            for (const auto& v : s.terms.back().rows()) next.insert(bracket(unit(i), v));
        int d = next.dim();
        if (d == s.dims.back()) break; // stabilized at a nonzero term
        s.dims.push_back(d);
        s.terms.push_back(std::move(next));
        if (d == 0) {
            s.step = int(s.dims.size()) - 1;
            break;
        }
    }
    return s;
}

std::vector<BracketSpec> LieAlgebra::bracket_specs() const {
    std::vector<BracketSpec> out;
    for (int i = 0; i < dim_; i++)
        for (int j = i + 1; j < dim_; j++) {
            const RationalVec& b = bracket_basis(i, j);
            if (vec_is_zero(b)) continue;
            BracketSpec spec;
            spec.x = i;
            spec.y = j;
            for (int k = 0; k < dim_; k++)
                if (!b[k].is_zero()) spec.terms.push_back({k, b[k]});
            out.push_back(std::move(spec));
        }
    return out;
}

} // namespace nilgeo
