#pragma once

#include "nilgeo/gaussian_rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace nilgeo {

template <typename F>
using Vec = std::vector<F>;

template <typename F>
bool vec_is_zero(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <typename F>
Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] += b[i];
    return r;
}

template <typename F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] -= b[i];
    return r;
}

template <typename F>
Vec<F> vec_scale(const F& c, const Vec<F>& a) {
    Vec<F> r(a);
    for (auto& x : r) x *= c;
    return r;
}

/// Dense exact matrix. Dimensions stay small (a few dozen), so all
/// algorithms are plain Gaussian elimination with the fixed pivot rule:
/// leftmost column first, then topmost row.
template <typename F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const F& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r(*this);
        for (size_t i = 0; i < a_.size(); i++) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r(*this);
        for (size_t i = 0; i < a_.size(); i++) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.a_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; i++)
            for (int k = 0; k < cols_; k++) {
                const F& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; j++) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * o.at(k, j);
                }
            }
        return r;
    }
    Matrix scaled(const F& c) const {
        Matrix r(*this);
        for (auto& x : r.a_) x *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++) r.at(j, i) = at(i, j);
        return r;
    }

    Vec<F> apply(const Vec<F>& x) const {
        if (int(x.size()) != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        Vec<F> r(rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++)
                if (!at(i, j).is_zero() && !x[j].is_zero()) r[i] += at(i, j) * x[j];
        return r;
    }

    Vec<F> row(int i) const {
        Vec<F> r(cols_);
        for (int j = 0; j < cols_; j++) r[j] = at(i, j);
        return r;
    }
    Vec<F> col(int j) const {
        Vec<F> r(rows_);
        for (int i = 0; i < rows_; i++) r[i] = at(i, j);
        return r;
    }

    F trace() const {
        F t(0);
        for (int i = 0; i < rows_ && i < cols_; i++) t += at(i, i);
        return t;
    }

    Matrix commutator(const Matrix& o) const { return *this * o - o * *this; }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

template <typename F>
struct RrefResult {
    Matrix<F> m;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <typename F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> res;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); c++) {
        int pivot = -1;
        for (int i = r; i < m.rows(); i++)
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); j++) std::swap(m.at(pivot, j), m.at(r, j));
        F inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); j++) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); i++) {
            if (i == r || m.at(i, c).is_zero()) continue;
            F f = m.at(i, c);
            for (int j = c; j < m.cols(); j++) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivot_cols.push_back(c);
        r++;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

template <typename F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Exact basis of the null space {v : m v = 0}. One vector per free
/// column, in ascending column order.
template <typename F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
    RrefResult<F> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (int f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) continue;
        Vec<F> v(m.cols());
        v[f] = F(1);
        for (size_t pr = 0; pr < r.pivot_cols.size(); pr++)
            v[r.pivot_cols[pr]] = -r.m.at(int(pr), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = rhs (free variables set to 0), or nullopt when the
/// system is inconsistent. Throws on a row-count mismatch.
template <typename F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& m, const Vec<F>& rhs) {
    if (int(rhs.size()) != m.rows())
        throw std::invalid_argument("solve_linear: rhs length does not match row count");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); i++) {
        for (int j = 0; j < m.cols(); j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    RrefResult<F> r = rref(std::move(aug));
    for (int c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    Vec<F> x(m.cols());
    for (size_t pr = 0; pr < r.pivot_cols.size(); pr++)
        x[r.pivot_cols[pr]] = r.m.at(int(pr), m.cols());
    return x;
}

template <typename F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    RrefResult<F> r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

template <typename F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows();
    F det(1);
    for (int c = 0; c < n; c++) {
        int pivot = -1;
        for (int i = c; i < n; i++)
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) return F(0);
        if (pivot != c) {
            for (int j = 0; j < n; j++) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        F inv = m.at(c, c).inverse();
        for (int i = c + 1; i < n; i++) {
            if (m.at(i, c).is_zero()) continue;
            F f = m.at(i, c) * inv;
            for (int j = c; j < n; j++) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

/// Incrementally maintained reduced row echelon basis of a subspace.
/// Deterministic: the stored rows are the RREF of everything inserted,
/// sorted by pivot column, so equal subspaces always get equal bases.
template <typename F>
class EchelonBasis {
public:
    explicit EchelonBasis(int width) : width_(width) {}

    int width() const { return width_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Vec<F> reduce(Vec<F> v) const {
        for (size_t r = 0; r < rows_.size(); r++) {
            const F& x = v[pivots_[r]];
            if (x.is_zero()) continue;
            F f = x; // pivot entries are normalized to 1
            for (int j = pivots_[r]; j < width_; j++)
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return vec_is_zero(reduce(v)); }

    /// Inserts v, returning true when the dimension grew.
    bool insert(Vec<F> v) {
        if (int(v.size()) != width_) throw std::invalid_argument("EchelonBasis: width mismatch");
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < width_; j++)
            if (!v[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        F inv = v[p].inverse();
        for (int j = p; j < width_; j++) v[j] *= inv;
        // back-substitute into existing rows to keep full RREF
        for (size_t r = 0; r < rows_.size(); r++) {
            const F& x = rows_[r][p];
            if (x.is_zero()) continue;
            F f = x;
            for (int j = p; j < width_; j++)
                if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
        }
        size_t ins = 0;
        while (ins < pivots_.size() && pivots_[ins] < p) ins++;
        rows_.insert(rows_.begin() + ins, std::move(v));
        pivots_.insert(pivots_.begin() + ins, p);
        return true;
    }

    bool same_subspace(const EchelonBasis& o) const {
        return width_ == o.width_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

private:
    int width_;
    std::vector<Vec<F>> rows_;
    std::vector<int> pivots_;
};

using RationalVec = Vec<Rational>;
using ComplexVec = Vec<GaussianRational>;
using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;

inline ComplexMatrix to_complex(const RationalMatrix& m) {
    ComplexMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) r.at(i, j) = GaussianRational(m.at(i, j));
    return r;
}

inline ComplexVec to_complex(const RationalVec& v) {
    ComplexVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = GaussianRational(v[i]);
    return r;
}

inline ComplexVec conj(const ComplexVec& v) {
    ComplexVec r(v.size());
    for (size_t i = 0; i < v.size(); i++) r[i] = v[i].conj();
    return r;
}

/// Real part check: every entry has zero imaginary component.
inline bool is_real_matrix(const ComplexMatrix& m) {
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
            if (!m.at(i, j).is_real()) return false;
    return true;
}

} // namespace nilgeo
