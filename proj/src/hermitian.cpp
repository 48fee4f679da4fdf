#include "nilgeo/hermitian.hpp"

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
    for (const auto& [m, c] : f.terms()) v[idx.at(m)] = c;
    return v;
}

/// Pullback along a real endomorphism S over the standard coframe:
/// (S* f)(X_1..X_k) = f(S X_1, .., S X_k), i.e. e^a -> sum_b S_{ab} e^b.
Form pullback(const Form& f, const RationalMatrix& S) {
    int m = S.rows();
    std::vector<Form> rows;
    rows.reserve(m);
    for (int a = 0; a < m; a++) {
        Form ra(1);
        for (int b = 0; b < m; b++) ra.add_term(Mask(1) << b, GaussianRational(S.at(a, b)));
        rows.push_back(std::move(ra));
    }
    Form out(f.degree());
    for (const auto& [mask, c] : f.terms()) {
        Form prod = Form::monomial(0, 0, c);
        for (int a : mask_to_indices(mask)) prod = prod.wedge(rows[a]);
        out = out + prod;
    }
    return out;
}

/// Dense antisymmetric coefficient table of a real 3-form.
std::vector<Rational> dense3(const Form& f, int m) {
    std::vector<Rational> t(size_t(m) * m * m);
    auto put = [&](int a, int b, int c, const Rational& v) { t[(size_t(a) * m + b) * m + c] = v; };
    for (const auto& [mask, coeff] : f.terms()) {
        if (!coeff.is_real()) throw std::logic_error("dense3: form is not real");
        std::vector<int> idx = mask_to_indices(mask);
        int a = idx[0], b = idx[1], c = idx[2];
        const Rational& v = coeff.re;
        put(a, b, c, v);
        put(b, c, a, v);
        put(c, a, b, v);
        put(a, c, b, -v);
        put(c, b, a, -v);
        put(b, a, c, -v);
    }
    return t;
}

Rational gdot(const RationalMatrix& G, const RationalVec& u, const RationalVec& v) {
    Rational r;
    for (int i = 0; i < G.rows(); i++) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < G.cols(); j++)
            if (!G.at(i, j).is_zero() && !v[j].is_zero()) r += u[i] * G.at(i, j) * v[j];
    }
    return r;
}

void require_hermitian(const RationalMatrix& G, const HypercomplexStructure& H) {
    const char* names[3] = {"I", "J", "K"};
    for (int alpha = 1; alpha <= 3; alpha++)
        if (!is_hermitian_for(G, H.J_alpha(alpha)))
            throw PreconditionError(std::string("metric is not Hermitian for structure ") +
                                    names[alpha - 1]);
}

/// Omega_h = h(., J.) + i h(., K.) over the standard coframe, for any
/// symmetric h (positive definiteness not needed here).
Form omega_standard(const RationalMatrix& h, const HypercomplexStructure& H) {
    int m = h.rows();
    RationalMatrix hJ = h * H.J;
    RationalMatrix hK = h * H.K;
    Form f(2);
    for (int a = 0; a < m; a++)
        for (int b = a + 1; b < m; b++)
            f.add_term((Mask(1) << a) | (Mask(1) << b), GaussianRational(hJ.at(a, b), hK.at(a, b)));
    return f;
}

} // namespace

bool is_symmetric(const RationalMatrix& G) {
    if (G.rows() != G.cols()) return false;
    for (int i = 0; i < G.rows(); i++)
        for (int j = i + 1; j < G.cols(); j++)
            if (G.at(i, j) != G.at(j, i)) return false;
    return true;
}

bool is_positive_definite(const RationalMatrix& G) {
    if (!is_symmetric(G)) return false;
    for (int k = 1; k <= G.rows(); k++) {
        RationalMatrix minor(k, k);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) minor.at(i, j) = G.at(i, j);
        if (determinant(minor).sign() <= 0) return false;
    }
    return true;
}

bool is_hermitian_for(const RationalMatrix& G, const RationalMatrix& S) {
    return S.transpose() * G * S == G;
}

Metric Metric::make(RationalMatrix G) {
    if (G.rows() != G.cols()) throw std::invalid_argument("metric: matrix not square");
    for (int i = 0; i < G.rows(); i++)
        for (int j = i + 1; j < G.cols(); j++)
            if (G.at(i, j) != G.at(j, i))
                throw std::invalid_argument("metric: not symmetric at entry (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (int k = 1; k <= G.rows(); k++) {
        RationalMatrix minor(k, k);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) minor.at(i, j) = G.at(i, j);
        if (determinant(minor).sign() <= 0)
            throw std::invalid_argument("metric: not positive definite (leading minor " +
                                        std::to_string(k) + " is not positive)");
    }
    return Metric{std::move(G)};
}

Metric su2_average(const Metric& g, const HypercomplexStructure& H) {
    const RationalMatrix& G = g.G;
    RationalMatrix sum = G;
    for (int alpha = 1; alpha <= 3; alpha++) {
        const RationalMatrix& S = H.J_alpha(alpha);
        sum = sum + S.transpose() * G * S;
    }
    Metric avg = Metric::make(sum.scaled(Rational(1, 4)));
    for (int alpha = 1; alpha <= 3; alpha++)
        if (!is_hermitian_for(avg.G, H.J_alpha(alpha)))
            throw std::logic_error("su2_average: result not Hermitian (internal error)");
    return avg;
}

Form two_form_of(const RationalMatrix& G, const RationalMatrix& S) {
    RationalMatrix GS = G * S;
    if (GS.transpose() != -GS)
        throw std::invalid_argument("two_form_of: g(., S.) is not antisymmetric (metric not Hermitian for S)");
    int m = G.rows();
    Form f(2);
    for (int a = 0; a < m; a++)
        for (int b = a + 1; b < m; b++)
            f.add_term((Mask(1) << a) | (Mask(1) << b), GaussianRational(GS.at(a, b)));
    return f;
}

OmegaResult omega_form(const LieAlgebra& g, const HypercomplexStructure& H, const Metric& metric) {
    require_hermitian(metric.G, H);
    OmegaResult res;
    res.big = make_bigrading(g, H.I);
    Form omega_std = omega_standard(metric.G, H);
    res.omega_adapted = res.big.cof.from_standard(omega_std);
    res.pure20 = res.omega_adapted.bidegree_part(res.big.n, 2, 0);
    res.impurity = res.omega_adapted - res.pure20;
    res.is_pure = res.impurity.is_zero();
    res.nondegenerate = !res.omega_adapted.wedge_pow(g.dim() / 4).is_zero();
    return res;
}

HktResult hkt_check(const LieAlgebra& g, const HypercomplexStructure& H, const Metric& metric) {
    OmegaResult omega = omega_form(g, H, metric);
    HktResult res;
    res.d_omega = omega.big.cof.d(omega.omega_adapted);
    res.residual = res.d_omega.bidegree_part(omega.big.n, 3, 0);
    res.hkt = res.residual.is_zero();
    res.hyperkahler = res.d_omega.is_zero();
    return res;
}

HktMetricSpace hkt_metric_space(const LieAlgebra& g, const HypercomplexStructure& H,
                                int probe_bound, long probe_cap) {
    const int m = g.dim();
    HktMetricSpace res;

    // Symmetric coordinates: pairs (a <= b).
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; a++)
        for (int b = a; b < m; b++) pairs.push_back({a, b});
    const int sdim = int(pairs.size());
    auto coords_of = [&](const RationalMatrix& h) {
        RationalVec v(sdim);
        for (int s = 0; s < sdim; s++) v[s] = h.at(pairs[s].first, pairs[s].second);
        return v;
    };
    auto sym_of = [&](const RationalVec& coords) {
        RationalMatrix h(m, m);
        for (int s = 0; s < sdim; s++) {
            if (coords[s].is_zero()) continue;
            auto [a, b] = pairs[s];
            h.at(a, b) += coords[s];
            if (a != b) h.at(b, a) += coords[s];
        }
        return h;
    };

    // Quaternionic Hermitian subspace = image of the averaging projector
    // h -> (h + I^T h I + J^T h J + K^T h K)/4 on symmetric matrices.
    {
        EchelonBasis<Rational> herm(sdim);
        Rational quarter(1, 4);
        for (int s = 0; s < sdim; s++) {
            RationalMatrix seed = sym_of([&] { RationalVec v(sdim); v[s] = Rational(1); return v; }());
            RationalMatrix avg = seed;
            for (int alpha = 1; alpha <= 3; alpha++) {
                const RationalMatrix& S = H.J_alpha(alpha);
                avg = avg + S.transpose() * seed * S;
            }
            herm.insert(coords_of(avg.scaled(quarter)));
        }
        res.hermitian_dim = herm.dim();
        for (const auto& row : herm.rows()) {
            RationalMatrix h = sym_of(row);
            for (int alpha = 1; alpha <= 3; alpha++)
                if (!is_hermitian_for(h, H.J_alpha(alpha)))
                    throw std::logic_error("hkt_metric_space: projector output not Hermitian");
            res.hermitian_basis.push_back(std::move(h));
        }
    }

    // The HKT condition partial Omega_h = 0 is linear in h.
    Bigrading big = make_bigrading(g, H.I);
    std::vector<Mask> mono30 = bidegree_monomials(big.n, 3, 0);
    std::map<Mask, int> idx30 = index_of(mono30);
    ComplexMatrix hkt_map(int(mono30.size()), res.hermitian_dim);
    for (int c = 0; c < res.hermitian_dim; c++) {
        Form omega_ad = big.cof.from_standard(omega_standard(res.hermitian_basis[c], H));
        Form residual = big.cof.d(omega_ad).bidegree_part(big.n, 3, 0);
        for (const auto& [mask, coeff] : residual.terms()) hkt_map.at(idx30.at(mask), c) = coeff;
    }
    std::vector<ComplexVec> sol = kernel_basis(hkt_map);
    res.solution_dim = int(sol.size());
    res.full_space = res.solution_dim == res.hermitian_dim;
    for (const auto& v : sol) {
        RationalMatrix h(m, m);
        for (int c = 0; c < res.hermitian_dim; c++) {
            if (v[c].is_zero()) continue;
            if (!v[c].is_real())
                throw std::logic_error("hkt_metric_space: complex solution coordinate (internal error)");
            h = h + res.hermitian_basis[c].scaled(v[c].re);
        }
        res.solution_basis.push_back(std::move(h));
    }

    // Positive-definiteness probe: integer combinations, increasing
    // sup-norm radius, capped. "Not found" only means not in this range.
    // Candidates are rejected on their diagonal before any minor is
    // computed; the diagonal of a PD matrix is positive.
    const int k = res.solution_dim;
    if (k > 0) {
        std::vector<RationalVec> diag(k, RationalVec(m));
        for (int r = 0; r < k; r++)
            for (int d = 0; d < m; d++) diag[r][d] = res.solution_basis[r].at(d, d);
        std::vector<int> coeff(k);
        for (int radius = 1; radius <= probe_bound && !res.pd_example; radius++) {
            std::fill(coeff.begin(), coeff.end(), -radius);
            while (true) {
                bool on_shell = false;
                for (int c : coeff)
                    if (c == radius || c == -radius) { on_shell = true; break; }
                if (on_shell) {
                    if (res.combinations_tried >= probe_cap) break;
                    res.combinations_tried++;
                    bool diag_ok = true;
                    for (int d = 0; d < m && diag_ok; d++) {
                        Rational x;
                        for (int r = 0; r < k; r++)
                            if (coeff[r] != 0) x += Rational(coeff[r]) * diag[r][d];
                        diag_ok = x.sign() > 0;
                    }
                    if (diag_ok) {
                        RationalMatrix cand(m, m);
                        for (int r = 0; r < k; r++)
                            if (coeff[r] != 0)
                                cand = cand + res.solution_basis[r].scaled(Rational(coeff[r]));
                        if (is_positive_definite(cand)) {
                            res.pd_example = std::move(cand);
                            break;
                        }
                    }
                }
                int pos = 0;
                while (pos < k && coeff[pos] == radius) coeff[pos++] = -radius;
                if (pos == k) break;
                coeff[pos]++;
            }
            if (res.combinations_tried >= probe_cap) break;
        }
    }
    return res;
}

Connection levi_civita(const LieAlgebra& g, const Metric& metric) {
    const int m = g.dim();
    const RationalMatrix& G = metric.G;
    auto Ginv_opt = inverse(G);
    if (!Ginv_opt) throw std::logic_error("levi_civita: metric not invertible");
    const RationalMatrix& Ginv = *Ginv_opt;

    Connection conn;
    conn.kind = Connection::Kind::levi_civita;
    conn.A.assign(m, RationalMatrix(m, m));
    Rational half(1, 2);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            RationalVec v(m);
            for (int c = 0; c < m; c++) {
                Rational t = gdot(G, g.bracket_basis(i, j), g.unit(c));
                t -= gdot(G, g.bracket_basis(j, c), g.unit(i));
                t += gdot(G, g.bracket_basis(c, i), g.unit(j));
                v[c] = t;
            }
            RationalVec col = vec_scale(half, Ginv.apply(v));
            for (int kk = 0; kk < m; kk++) conn.A[i].at(kk, j) = col[kk];
        }
    for (int i = 0; i < m; i++) {
        if (!(conn.A[i].transpose() * G + G * conn.A[i]).is_zero())
            throw std::logic_error("levi_civita: nabla g != 0 (internal error)");
        for (int j = i + 1; j < m; j++)
            if (!vec_is_zero(conn.torsion(g, i, j)))
                throw std::logic_error("levi_civita: nonzero torsion (internal error)");
    }
    return conn;
}

BismutResult bismut(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I) {
    if (!is_integrable(g, I).pass())
        throw PreconditionError("bismut: requires an integrable complex structure");
    if (!is_hermitian_for(metric.G, I))
        throw PreconditionError("bismut: metric is not Hermitian for the structure");
    const int m = g.dim();
    const RationalMatrix& G = metric.G;
    Connection lc = levi_civita(g, metric);

    Coframe std_cof = Coframe::standard(g);
    Form omega = two_form_of(G, I);
    Form domega = std_cof.d(omega);
    Form c3 = -pullback(domega, I); // c(X,Y,Z) = -d omega(IX, IY, IZ)
    std::vector<Rational> c = dense3(c3, m);
    auto c_at = [&](int a, int b, int d) -> const Rational& { return c[(size_t(a) * m + b) * m + d]; };

    auto Ginv_opt = inverse(G);
    const RationalMatrix& Ginv = *Ginv_opt;
    Rational half(1, 2);

    BismutResult res;
    res.torsion3 = c3;
    res.conn.kind = Connection::Kind::bismut;
    res.conn.A.assign(m, RationalMatrix(m, m));
    RationalMatrix GAlc(m, m);
    for (int i = 0; i < m; i++) {
        GAlc = G * lc.A[i];
        for (int j = 0; j < m; j++) {
            RationalVec rhs(m);
            for (int d = 0; d < m; d++) rhs[d] = GAlc.at(d, j) + half * c_at(i, j, d);
            RationalVec col = Ginv.apply(rhs);
            for (int kk = 0; kk < m; kk++) res.conn.A[i].at(kk, j) = col[kk];
        }
    }

    // Pinned postconditions: a failure here means a sign convention got
    // out of sync and must not be absorbed silently.
    for (int i = 0; i < m; i++) {
        if (!(res.conn.A[i].transpose() * G + G * res.conn.A[i]).is_zero())
            throw std::logic_error("bismut: nabla^B g != 0 along basis vector " + std::to_string(i + 1));
        if (!res.conn.A[i].commutator(I).is_zero())
            throw std::logic_error("bismut: nabla^B I != 0 along basis vector " + std::to_string(i + 1));
    }
    for (int b = 0; b < m; b++)
        for (int d = b + 1; d < m; d++) {
            RationalVec t = res.conn.torsion(g, b, d);
            for (int a = 0; a < m; a++)
                if (gdot(G, g.unit(a), t) != c_at(a, b, d))
                    throw std::logic_error("bismut: lowered torsion does not equal the skew 3-form");
        }
    return res;
}

Connection bismut_abelian(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I) {
    if (!is_abelian_structure(g, I))
        throw PreconditionError("bismut_abelian: requires an abelian complex structure");
    const int m = g.dim();
    const RationalMatrix& G = metric.G;
    auto Ginv_opt = inverse(G);
    const RationalMatrix& Ginv = *Ginv_opt;

    Connection conn;
    conn.kind = Connection::Kind::bismut;
    conn.A.assign(m, RationalMatrix(m, m));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            RationalVec w(m);
            for (int c = 0; c < m; c++) w[c] = gdot(G, g.unit(i), g.bracket_basis(j, c));
            RationalVec col = Ginv.apply(w);
            for (int kk = 0; kk < m; kk++) conn.A[i].at(kk, j) = -col[kk];
        }
    Connection general = bismut(g, metric, I).conn;
    for (int i = 0; i < m; i++)
        if (conn.A[i] != general.A[i])
            throw std::logic_error("bismut_abelian: disagreement with the general Bismut connection");
    return conn;
}

LeeResult lee_form(const LieAlgebra& g, const Metric& metric, const RationalMatrix& I) {
    if (!is_integrable(g, I).pass())
        throw PreconditionError("lee_form: requires an integrable complex structure");
    if (!is_hermitian_for(metric.G, I))
        throw PreconditionError("lee_form: metric is not Hermitian for the structure");
    const int m = g.dim();
    const RationalMatrix& G = metric.G;
    const RationalMatrix Ginv = *inverse(G);
    Coframe std_cof = Coframe::standard(g);
    Form omega = two_form_of(G, I);

    // Route (a): theta = d* omega o I with the Gram-matrix adjoint.
    std::vector<Mask> mono2 = k_subsets(m, 2);
    std::map<Mask, int> idx2 = index_of(mono2);
    const int w2 = int(mono2.size());
    RationalMatrix D1(w2, m);
    for (int a = 0; a < m; a++)
        for (const auto& [mask, coeff] : std_cof.d_basis(a).terms()) {
            if (!coeff.is_real()) throw std::logic_error("lee_form: complex differential on real coframe");
            D1.at(idx2.at(mask), a) = coeff.re;
        }
    RationalMatrix gram2(w2, w2);
    for (int r = 0; r < w2; r++) {
        auto ri = mask_to_indices(mono2[r]);
        for (int s = 0; s < w2; s++) {
            auto si = mask_to_indices(mono2[s]);
            gram2.at(r, s) = Ginv.at(ri[0], si[0]) * Ginv.at(ri[1], si[1]) -
                             Ginv.at(ri[0], si[1]) * Ginv.at(ri[1], si[0]);
        }
    }
    RationalVec omega_coords(w2);
    for (const auto& [mask, coeff] : omega.terms()) omega_coords[idx2.at(mask)] = coeff.re;
    RationalMatrix dstar = G * D1.transpose() * gram2;
    RationalVec ds_omega = dstar.apply(omega_coords);
    RationalVec theta_a(m);
    for (int a = 0; a < m; a++) {
        Rational t;
        for (int b = 0; b < m; b++) t += ds_omega[b] * I.at(b, a);
        theta_a[a] = t;
    }

    // Route (b): theta(X) = -1/2 sum_{j,k} G^{jk} c(IX, e_j, I e_k).
    Form c3 = -pullback(std_cof.d(omega), I);
    std::vector<Rational> c = dense3(c3, m);
    RationalMatrix W = Ginv * I.transpose(); // W_{jz} = sum_k G^{jk} I_{zk}
    RationalVec D(m);
    for (int x = 0; x < m; x++) {
        Rational acc;
        for (int j = 0; j < m; j++)
            for (int z = 0; z < m; z++) {
                const Rational& cv = c[(size_t(x) * m + j) * m + z];
                if (!cv.is_zero() && !W.at(j, z).is_zero()) acc += W.at(j, z) * cv;
            }
        D[x] = acc;
    }
    RationalVec theta_b(m);
    Rational mhalf(-1, 2);
    for (int a = 0; a < m; a++) {
        Rational t;
        for (int x = 0; x < m; x++) t += I.at(x, a) * D[x];
        theta_b[a] = mhalf * t;
    }

    if (theta_a != theta_b)
        throw std::logic_error("lee_form: the d*-adjoint route and the torsion-trace route disagree");
    LeeResult res;
    res.theta = std::move(theta_a);
    res.balanced = vec_is_zero(res.theta);
    return res;
}

BalancedReport quaternionic_balanced_check(const LieAlgebra& g, const HypercomplexStructure& H,
                                           const Metric& metric) {
    require_hermitian(metric.G, H);
    BalancedReport rep;
    rep.lee[0] = lee_form(g, metric, H.I);
    rep.lee[1] = lee_form(g, metric, H.J);
    rep.lee[2] = lee_form(g, metric, H.K);
    rep.balanced_all = rep.lee[0].balanced && rep.lee[1].balanced && rep.lee[2].balanced;
    return rep;
}

CanonicalTorsionTheta canonical_torsion_theta(const LieAlgebra& g, const HypercomplexStructure& H,
                                              const Metric& metric) {
    if (!g.is_nilpotent())
        throw PreconditionError("canonical_torsion_theta: requires a nilpotent Lie algebra");
    OmegaResult omega = omega_form(g, H, metric);
    const Bigrading& big = omega.big;
    const int N = big.n;
    Form bar_omega = big.conj_form(omega.omega_adapted);
    Form bar_power = bar_omega.wedge_pow(g.dim() / 4); // spans Lambda^{0,N}
    if (bar_power.is_zero())
        throw std::invalid_argument("canonical_torsion_theta: degenerate Omega");

    Form d_power = big.cof.d(bar_power);
    Form partial = d_power.bidegree_part(N, 1, N);

    // theta ^ bar_power ranges over Lambda^{1,N}; solve for theta.
    std::vector<Mask> mono1N = bidegree_monomials(N, 1, N);
    std::map<Mask, int> idx = index_of(mono1N);
    ComplexMatrix sys(int(mono1N.size()), N);
    for (int a = 0; a < N; a++) {
        Form col = big.cof.basis_form(a).wedge(bar_power);
        for (const auto& [mask, coeff] : col.terms()) sys.at(idx.at(mask), a) = coeff;
    }
    auto sol = solve_linear(sys, form_coords(partial, idx, int(mono1N.size())));
    if (!sol) throw std::logic_error("canonical_torsion_theta: wedge system inconsistent");
    CanonicalTorsionTheta res;
    Form theta(1);
    for (int a = 0; a < N; a++) theta.add_term(Mask(1) << a, (*sol)[a]);
    res.theta = theta;
    res.zero = theta.is_zero();
    return res;
}

LefschetzResult lefschetz_map(const LieAlgebra& g, const HypercomplexStructure& H,
                              const Metric& metric, int i) {
    OmegaResult omega = omega_form(g, H, metric);
    const Bigrading& big = omega.big;
    const int N = big.n;
    const int half = N / 2;
    if (i < 0 || i > half) throw std::invalid_argument("lefschetz_map: degree out of range");

    LefschetzResult res;
    res.i = i;
    res.power = half - i;
    DolbeaultP0 source = dolbeault_p0(g, big, i);
    DolbeaultP0 target = dolbeault_p0(g, big, N - i);
    res.dim_source = source.dim;
    res.dim_target = target.dim;

    Form power = omega.omega_adapted.bidegree_part(N, 2, 0).wedge_pow(res.power);
    std::map<Mask, int> idxT = index_of(target.monomials);
    const int widthT = int(target.monomials.size());
    EchelonBasis<GaussianRational> image(widthT);
    if (N - i >= 1) {
        ComplexMatrix prev = dolbeault_operator(big, N - i - 1);
        for (int c = 0; c < prev.cols(); c++) image.insert(prev.col(c));
    }
    EchelonBasis<GaussianRational> reduced_images(widthT);
    res.images_closed = true;
    for (const auto& rep : source.representatives) {
        Form img = power.wedge(rep);
        if (!big.cof.d(img).bidegree_part(N, N - i + 1, 0).is_zero()) res.images_closed = false;
        reduced_images.insert(image.reduce(form_coords(img, idxT, widthT)));
    }
    res.map_rank = reduced_images.dim();
    res.isomorphism = res.images_closed && res.map_rank == res.dim_source &&
                      res.dim_source == res.dim_target;
    return res;
}

AbelianEquivalence abelian_equivalence_check(const LieAlgebra& g, const HypercomplexStructure& H) {
    AbelianEquivalence res;
    res.per[0] = is_abelian_structure(g, H.I);
    res.per[1] = is_abelian_structure(g, H.J);
    res.per[2] = is_abelian_structure(g, H.K);
    res.agree = res.per[0] == res.per[1] && res.per[1] == res.per[2];
    res.abelian = res.agree && res.per[0];
    return res;
}

} // namespace nilgeo
