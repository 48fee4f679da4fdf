#include "nilgeo/complex_structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilgeo {

namespace {

std::map<Mask, int> index_of(const std::vector<Mask>& monomials) {
    std::map<Mask, int> idx;
    for (size_t i = 0; i < monomials.size(); i++) idx[monomials[i]] = int(i);
    return idx;
}

ComplexVec form_coords(const Form& f, const std::map<Mask, int>& idx, int width) {
    ComplexVec v(width);
    for (const auto& [m, c] : f.terms()) {
        auto it = idx.find(m);
        if (it == idx.end()) throw std::logic_error("form has a term outside the coordinate basis");
        v[it->second] = c;
    }
    return v;
}

void require_nilpotent(const LieAlgebra& g, const char* op) {
    if (!g.is_nilpotent())
        throw PreconditionError(std::string(op) + ": requires a nilpotent Lie algebra");
}

void require_integrable(const LieAlgebra& g, const RationalMatrix& I, const char* op) {
    if (!is_integrable(g, I).pass())
        throw PreconditionError(std::string(op) + ": requires an integrable complex structure");
}

} // namespace

std::vector<Mask> bidegree_monomials(int n, int p, int q) {
    std::vector<Mask> out;
    for (Mask pm : k_subsets(n, p))
        for (Mask qm : k_subsets(n, q)) out.push_back(pm | (qm << n));
    std::sort(out.begin(), out.end());
    return out;
}

void require_almost_complex(const LieAlgebra& g, const RationalMatrix& I) {
    if (g.dim() == 0) throw std::invalid_argument("complex structure: zero-dimensional algebra");
    if (g.dim() % 2 != 0) throw std::invalid_argument("complex structure: dimension must be even");
    if (I.rows() != g.dim() || I.cols() != g.dim())
        throw std::invalid_argument("complex structure: endomorphism size mismatch");
    if (I * I != -RationalMatrix::identity(g.dim()))
        throw std::invalid_argument("complex structure: I^2 != -Id");
}

Form Bigrading::conj_form(const Form& f) const {
    Form r(f.degree());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> idx = mask_to_indices(m);
        std::vector<int> mapped;
        mapped.reserve(idx.size());
        for (int a : idx) mapped.push_back(a < n ? a + n : a - n);
        int inversions = 0;
        for (size_t x = 0; x < mapped.size(); x++)
            for (size_t y = x + 1; y < mapped.size(); y++)
                if (mapped[x] > mapped[y]) inversions++;
        Mask nm = 0;
        for (int a : mapped) nm |= Mask(1) << a;
        GaussianRational nc = c.conj();
        if (inversions & 1) nc = -nc;
        r.add_term(nm, nc);
    }
    return r;
}

Bigrading make_bigrading(const LieAlgebra& g, const RationalMatrix& I) {
    require_almost_complex(g, I);
    int m = g.dim();
    int n = m / 2;
    // Lambda^{1,0} = {alpha : alpha o I = i alpha} = ker(I^T - i Id) on
    // coefficient columns.
    ComplexMatrix M = to_complex(I.transpose());
    for (int a = 0; a < m; a++) M.at(a, a) -= GaussianRational::i();
    std::vector<ComplexVec> ker = kernel_basis(M);
    if (int(ker.size()) != n)
        throw std::invalid_argument("complex structure: eigenspace dimension is not dim/2");
    // Normalize to leading coefficient 1 (deterministic, and matches the
    // usual e^(2k-1) + i e^(2k) shape on split bases).
    for (auto& v : ker) {
        for (const auto& x : v)
            if (!x.is_zero()) {
                GaussianRational inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
    }
    ComplexMatrix P(m, m);
    for (int a = 0; a < n; a++)
        for (int j = 0; j < m; j++) {
            P.at(a, j) = ker[a][j];
            P.at(n + a, j) = ker[a][j].conj();
        }
    Bigrading big;
    big.n = n;
    big.cof = Coframe::from_rows(g, std::move(P));
    std::vector<std::string> names(m);
    for (int a = 0; a < n; a++) {
        names[a] = "w" + std::to_string(a + 1);
        names[n + a] = "cw" + std::to_string(a + 1);
    }
    big.cof.set_names(std::move(names));
    return big;
}

IntegrabilityReport is_integrable(const LieAlgebra& g, const RationalMatrix& I) {
    require_almost_complex(g, I);
    int m = g.dim();
    IntegrabilityReport rep;

    // (a) g^{0,1} = ker(I + i Id) closed under bracket.
    {
        ComplexMatrix M = to_complex(I);
        for (int a = 0; a < m; a++) M.at(a, a) += GaussianRational::i();
        std::vector<ComplexVec> ker = kernel_basis(M);
        EchelonBasis<GaussianRational> span(m);
        for (const auto& v : ker) span.insert(v);
        rep.subalgebra = true;
        for (size_t a = 0; a < ker.size() && rep.subalgebra; a++)
            for (size_t b = a + 1; b < ker.size(); b++) {
                if (!span.contains(g.bracket(ker[a], ker[b]))) {
                    rep.subalgebra = false;
                    break;
                }
            }
    }

    // (b) Nijenhuis tensor on basis pairs.
    {
        rep.nijenhuis = true;
        for (int i = 0; i < m && rep.nijenhuis; i++)
            for (int j = i + 1; j < m; j++) {
                RationalVec Ii = I.col(i), Ij = I.col(j);
                RationalVec N = g.bracket_basis(i, j);
                N = vec_add(N, I.apply(g.bracket(Ii, g.unit(j))));
                N = vec_add(N, I.apply(g.bracket(g.unit(i), Ij)));
                N = vec_sub(N, g.bracket(Ii, Ij));
                if (!vec_is_zero(N)) {
                    rep.nijenhuis = false;
                    rep.witness = {i, j};
                    break;
                }
            }
    }

    // (c) d(Lambda^{1,0}) has no (0,2) component.
    {
        Bigrading big = make_bigrading(g, I);
        rep.no_02_component = true;
        for (int a = 0; a < big.n; a++) {
            if (!big.cof.d_basis(a).bidegree_part(big.n, 0, 2).is_zero()) {
                rep.no_02_component = false;
                break;
            }
        }
    }

    if (rep.subalgebra != rep.nijenhuis || rep.nijenhuis != rep.no_02_component)
        throw std::logic_error("integrability criteria disagree (internal error)");
    return rep;
}

bool is_abelian_structure(const LieAlgebra& g, const RationalMatrix& I) {
    require_almost_complex(g, I);
    int m = g.dim();
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            RationalVec lhs = g.bracket(I.col(i), I.col(j));
            if (lhs != g.bracket_basis(i, j)) return false;
        }
    // Cross-check: g^{1,0} = ker(I - i Id) must then be an abelian
    // subalgebra of the complexification.
    ComplexMatrix M = to_complex(I);
    for (int a = 0; a < m; a++) M.at(a, a) -= GaussianRational::i();
    std::vector<ComplexVec> ker = kernel_basis(M);
    for (size_t a = 0; a < ker.size(); a++)
        for (size_t b = a + 1; b < ker.size(); b++)
            if (!vec_is_zero(g.bracket(ker[a], ker[b])))
                throw std::logic_error("abelian structure check: g^{1,0} not abelian (internal error)");
    return true;
}

ComplexStructure validate_complex_structure(const LieAlgebra& g, RationalMatrix I) {
    require_almost_complex(g, I);
    ComplexStructure cs;
    cs.integrable = is_integrable(g, I).pass();
    cs.abelian = cs.integrable && is_abelian_structure(g, I);
    cs.I = std::move(I);
    return cs;
}

SalamonCoframe salamon_coframe(const LieAlgebra& g, const RationalMatrix& I) {
    require_nilpotent(g, "salamon_coframe");
    require_integrable(g, I, "salamon_coframe");

    SalamonCoframe out;
    out.big = make_bigrading(g, I);
    const int n = out.big.n;
    const int m = 2 * n;
    const Coframe& cof = out.big.cof;

    std::vector<Mask> mono2 = k_subsets(m, 2);
    std::map<Mask, int> idx2 = index_of(mono2);
    const int width2 = int(mono2.size());

    // d of the (1,0) generators, as Lambda^2 coordinate vectors.
    std::vector<ComplexVec> d_gen(n);
    for (int a = 0; a < n; a++) d_gen[a] = form_coords(cof.d_basis(a), idx2, width2);

    auto candidate_form = [&](const ComplexVec& coeffs) {
        Form f(1);
        for (int a = 0; a < n; a++) f.add_term(Mask(1) << a, coeffs[a]);
        return f;
    };

    // Ascending chain: W_{r+1} = {w : d w in ideal_2(W_r)}.
    EchelonBasis<GaussianRational> W(n);
    std::vector<EchelonBasis<GaussianRational>> stages;
    while (true) {
        EchelonBasis<GaussianRational> ideal(width2);
        for (const auto& w : W.rows()) {
            Form wf = candidate_form(w);
            for (int b = 0; b < m; b++)
                ideal.insert(form_coords(wf.wedge(cof.basis_form(b)), idx2, width2));
        }
        ComplexMatrix residuals(width2, n);
        for (int a = 0; a < n; a++) {
            ComplexVec r = ideal.reduce(d_gen[a]);
            for (int row = 0; row < width2; row++) residuals.at(row, a) = r[row];
        }
        EchelonBasis<GaussianRational> next(n);
        for (const auto& v : kernel_basis(residuals)) next.insert(v);
        for (const auto& w : W.rows())
            if (!next.contains(w)) throw std::logic_error("salamon chain is not ascending (internal error)");
        if (next.dim() == W.dim()) {
            if (W.dim() < n)
                throw std::runtime_error(
                    "not a nilpotent complex structure: the Salamon chain stalled at dimension " +
                    std::to_string(W.dim()) + " of " + std::to_string(n));
            break;
        }
        W = next;
        stages.push_back(W);
        if (W.dim() == n) break;
    }

    // Concatenate deterministic bases of the successive quotients.
    EchelonBasis<GaussianRational> chosen(n);
    for (size_t r = 0; r < stages.size(); r++) {
        for (const auto& v : stages[r].rows()) {
            ComplexVec red = chosen.reduce(v);
            if (vec_is_zero(red)) continue;
            for (const auto& x : red)
                if (!x.is_zero()) {
                    GaussianRational inv = x.inverse();
                    for (auto& y : red) y *= inv;
                    break;
                }
            out.omega.push_back(candidate_form(red));
            out.stage.push_back(int(r) + 1);
            chosen.insert(v);
        }
    }
    if (int(out.omega.size()) != n) throw std::logic_error("salamon basis incomplete (internal error)");

    // Witnesses: solve d omega_i = sum_{j<i} eta^i_j ^ omega_j, then
    // re-verify the filtration identity exactly.
    out.eta.resize(n);
    for (int i = 0; i < n; i++) {
        ComplexVec rhs = form_coords(cof.d(out.omega[i]), idx2, width2);
        ComplexMatrix sys(width2, i * m);
        for (int j = 0; j < i; j++)
            for (int b = 0; b < m; b++) {
                ComplexVec colv = form_coords(cof.basis_form(b).wedge(out.omega[j]), idx2, width2);
                for (int row = 0; row < width2; row++) sys.at(row, j * m + b) = colv[row];
            }
        auto sol = solve_linear(sys, rhs);
        if (!sol) throw std::logic_error("salamon witness system inconsistent (internal error)");
        out.eta[i].resize(i, Form(1));
        Form check(2);
        for (int j = 0; j < i; j++) {
            Form eta(1);
            for (int b = 0; b < m; b++) eta.add_term(Mask(1) << b, (*sol)[j * m + b]);
            out.eta[i][j] = eta;
            check = check + eta.wedge(out.omega[j]);
        }
        if (cof.d(out.omega[i]) != check)
            throw std::logic_error("salamon filtration re-verification failed (internal error)");
    }
    return out;
}

CanonicalFormResult canonical_form(const LieAlgebra& g, const RationalMatrix& I) {
    require_nilpotent(g, "canonical_form");
    require_integrable(g, I, "canonical_form");
    CanonicalFormResult res;
    res.big = make_bigrading(g, I);
    res.eta = Form::monomial(res.big.n, res.big.top10(), GaussianRational(1L));
    res.d_eta = res.big.cof.d(res.eta);
    res.closed = res.d_eta.is_zero();
    return res;
}

std::vector<GaussianRational> trace_J_ad(const LieAlgebra& g, const RationalMatrix& I) {
    require_nilpotent(g, "trace_J_ad");
    require_integrable(g, I, "trace_J_ad");
    std::vector<GaussianRational> out;
    for (int k = 0; k < g.dim(); k++) out.push_back(GaussianRational((I * g.ad(k)).trace()));
    return out;
}

ComplexMatrix dolbeault_operator(const Bigrading& big, int p) {
    std::vector<Mask> src = bidegree_monomials(big.n, p, 0);
    std::vector<Mask> dst = bidegree_monomials(big.n, p + 1, 0);
    std::map<Mask, int> dst_idx = index_of(dst);
    ComplexMatrix op(int(dst.size()), int(src.size()));
    for (size_t c = 0; c < src.size(); c++) {
        Form d = big.cof.d(Form::monomial(p, src[c], GaussianRational(1L)));
        Form part = d.bidegree_part(big.n, p + 1, 0);
        for (const auto& [mask, coeff] : part.terms()) op.at(dst_idx.at(mask), int(c)) = coeff;
    }
    return op;
}

DolbeaultP0 dolbeault_p0(const LieAlgebra& g, const Bigrading& big, int p) {
    (void)g;
    if (p < 0 || p > big.n) throw std::invalid_argument("dolbeault_p0: degree out of range");
    DolbeaultP0 res;
    res.p = p;
    res.monomials = bidegree_monomials(big.n, p, 0);
    const int width = int(res.monomials.size());

    ComplexMatrix op = dolbeault_operator(big, p);
    std::vector<ComplexVec> ker = kernel_basis(op);
    res.kernel_dim = int(ker.size());

    EchelonBasis<GaussianRational> image(width);
    if (p > 0) {
        ComplexMatrix prev = dolbeault_operator(big, p - 1);
        for (int c = 0; c < prev.cols(); c++) image.insert(prev.col(c));
        // partial o partial = 0 (holds whenever I is integrable)
        if (!(op * prev).is_zero())
            throw std::logic_error("dolbeault: partial^2 != 0 (structure not integrable?)");
    }
    res.image_rank = image.dim();

    EchelonBasis<GaussianRational> reps(width);
    for (const auto& v : ker) reps.insert(image.reduce(v));
    res.dim = res.kernel_dim - res.image_rank;
    if (reps.dim() != res.dim)
        throw std::logic_error("dolbeault: image not contained in kernel (internal error)");
    for (const auto& row : reps.rows()) {
        Form f(p);
        for (int c = 0; c < width; c++) f.add_term(res.monomials[c], row[c]);
        res.representatives.push_back(std::move(f));
    }
    return res;
}

DolbeaultP0 dolbeault_p0(const LieAlgebra& g, const RationalMatrix& I, int p) {
    require_integrable(g, I, "dolbeault_p0");
    return dolbeault_p0(g, make_bigrading(g, I), p);
}

} // namespace nilgeo
