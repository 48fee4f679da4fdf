#pragma once

#include "nilgeo/matrix.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace nilgeo {

/// Strictly increasing multi-index over a coframe, packed as a bitmask
/// (bit a = coframe element a). Coframes never exceed 64 elements.
using Mask = std::uint64_t;

inline int mask_degree(Mask m) { return __builtin_popcountll(m); }

inline Mask low_mask(int n) { return n >= 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }

/// Sign of merging phi_A wedge phi_B into the sorted monomial phi_{A|B};
/// masks must be disjoint. Parity = number of pairs (a in A, b in B)
/// with a > b.
inline int wedge_sign(Mask a, Mask b) {
    int inv = 0;
    Mask rest = b;
    while (rest) {
        int j = __builtin_ctzll(rest);
        rest &= rest - 1;
        inv += __builtin_popcountll(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& idx);

/// All k-element subsets of {0..m-1} as masks, ascending by mask value.
std::vector<Mask> k_subsets(int m, int k);

/// Element of Lambda^k over a chosen coframe: sparse coefficient map
/// from sorted multi-indices to Gaussian rationals. Degree is fixed at
/// construction; zero coefficients are never stored.
class Form {
public:
    Form() : degree_(0) {}
    explicit Form(int degree) : degree_(degree) {}

    static Form monomial(int degree, Mask m, GaussianRational c);

    int degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Mask, GaussianRational>& terms() const { return c_; }
    size_t term_count() const { return c_.size(); }

    GaussianRational coeff(Mask m) const {
        auto it = c_.find(m);
        return it == c_.end() ? GaussianRational() : it->second;
    }

    void add_term(Mask m, const GaussianRational& c);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const { return scaled(GaussianRational(-1L)); }
    Form scaled(const GaussianRational& c) const;

    Form wedge(const Form& o) const;
    Form wedge_pow(int k) const;

    /// Coefficient-wise complex conjugation (does not permute indices).
    Form conj_coeffs() const;

    bool operator==(const Form& o) const { return degree_ == o.degree_ && c_ == o.c_; }
    bool operator!=(const Form& o) const { return !(*this == o); }

    /// Evaluation against vectors given in the dual-frame coordinates of
    /// this form's coframe (phi_a(X) = X[a]): determinant pairing.
    GaussianRational eval(const std::vector<ComplexVec>& vectors) const;

    /// Restrict to terms whose mask splits as (p in "low" bits < n,
    /// q in bits >= n). Used for Dolbeault bidegree projections.
    Form bidegree_part(int n, int p, int q) const;

    std::string str(const std::vector<std::string>& coframe_names) const;

private:
    int degree_;
    std::map<Mask, GaussianRational> c_;
};

} // namespace nilgeo
