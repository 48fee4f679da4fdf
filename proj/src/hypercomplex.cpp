#include "nilgeo/hypercomplex.hpp"

#include <deque>
#include <stdexcept>

namespace nilgeo {

namespace {

RationalVec flatten(const RationalMatrix& m) {
    RationalVec v(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) v[size_t(i) * m.cols() + j] = m.at(i, j);
    return v;
}

RationalMatrix unflatten(const RationalVec& v, int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.at(i, j) = v[size_t(i) * n + j];
    return m;
}

} // namespace

HypercomplexValidation validate_hypercomplex(const LieAlgebra& g, const RationalMatrix& I,
                                             const RationalMatrix& J, const RationalMatrix& K) {
    HypercomplexValidation v;
    int m = g.dim();
    RationalMatrix minus_id = -RationalMatrix::identity(m);
    auto square_check = [&](const RationalMatrix& S, const char* name) {
        if (S.rows() != m || S.cols() != m) {
            v.failures.push_back(std::string(name) + " has wrong size");
            return;
        }
        if (S * S != minus_id) v.failures.push_back(std::string(name) + "^2 != -Id");
    };
    square_check(I, "I");
    square_check(J, "J");
    square_check(K, "K");
    if (!v.failures.empty()) {
        v.pass = false;
        return v;
    }
    if (I * J != K) v.failures.push_back("IJ != K");
    if (I * J != -(J * I)) v.failures.push_back("IJ != -JI");
    auto integrable_check = [&](const RationalMatrix& S, const char* name) {
        if (!is_integrable(g, S).pass()) v.failures.push_back(std::string(name) + " not integrable");
    };
    integrable_check(I, "I");
    integrable_check(J, "J");
    integrable_check(K, "K");
    v.pass = v.failures.empty();
    return v;
}

Connection obata_connection(const LieAlgebra& g, const HypercomplexStructure& H) {
    {
        HypercomplexValidation v = validate_hypercomplex(g, H.I, H.J, H.K);
        if (!v.pass)
            throw PreconditionError("obata_connection: invalid hypercomplex structure (" +
                                    v.failures.front() + ")");
    }
    const int m = g.dim();
    const Rational twelfth(1, 12), sixth(1, 6), half(1, 2);
    // cyclic permutations (alpha, beta, gamma) of (1, 2, 3)
    const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

    Connection conn;
    conn.kind = Connection::Kind::obata;
    conn.A.assign(m, RationalMatrix(m, m));
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            RationalVec acc(m);
            for (const auto& p : cyc) {
                const RationalMatrix& Ja = H.J_alpha(p[0]);
                const RationalMatrix& Jb = H.J_alpha(p[1]);
                const RationalMatrix& Jc = H.J_alpha(p[2]);
                RationalVec s = g.bracket(Jb.col(i), Jc.col(j));
                s = vec_add(s, g.bracket(Jb.col(j), Jc.col(i)));
                acc = vec_add(acc, vec_scale(twelfth, Ja.apply(s)));
            }
            for (int alpha = 1; alpha <= 3; alpha++) {
                const RationalMatrix& Ja = H.J_alpha(alpha);
                RationalVec s = g.bracket(Ja.col(i), g.unit(j));
                s = vec_add(s, g.bracket(Ja.col(j), g.unit(i)));
                acc = vec_add(acc, vec_scale(sixth, Ja.apply(s)));
            }
            acc = vec_add(acc, vec_scale(half, g.bracket_basis(i, j)));
            for (int k = 0; k < m; k++) conn.A[i].at(k, j) = acc[k];
        }
    }

    // Defining properties, re-checked exactly.
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++)
            if (!vec_is_zero(conn.torsion(g, i, j)))
                throw std::runtime_error("obata_connection: nonzero torsion at basis pair (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (int i = 0; i < m; i++)
        for (int alpha = 1; alpha <= 3; alpha++)
            if (!conn.A[i].commutator(H.J_alpha(alpha)).is_zero())
                throw std::runtime_error("obata_connection: structure " + std::to_string(alpha) +
                                         " not parallel along basis vector " + std::to_string(i + 1));
    return conn;
}

CurvatureTensor curvature(const LieAlgebra& g, const Connection& conn) {
    const int m = g.dim();
    CurvatureTensor R;
    R.dim = m;
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            RationalMatrix r = conn.A[i] * conn.A[j] - conn.A[j] * conn.A[i];
            r = r - conn.of(g.bracket_basis(i, j));
            R.store.push_back(std::move(r));
        }
    return R;
}

RationalMatrix ricci(const LieAlgebra& g, const CurvatureTensor& R) {
    const int m = g.dim();
    RationalMatrix ric(m, m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            Rational t;
            for (int k = 0; k < m; k++) {
                if (k == i) continue;
                t += R.at(k, i).at(k, j);
            }
            ric.at(i, j) = t;
        }
    return ric;
}

RationalMatrix ricci(const LieAlgebra& g, const Connection& conn) {
    return ricci(g, curvature(g, conn));
}

TraceBracketReport trace_nabla_bracket(const LieAlgebra& g, const Connection& conn,
                                       const HypercomplexStructure& H) {
    if (conn.kind != Connection::Kind::obata)
        throw PreconditionError("trace_nabla_bracket: connection must be the Obata connection");
    const int m = g.dim();
    TraceBracketReport rep;
    // alpha-independence of tr(J_alpha ad_{J_alpha Z}) on every basis Z
    for (int k = 0; k < m; k++) {
        Rational t1 = (H.I * g.ad(H.I.col(k))).trace();
        Rational t2 = (H.J * g.ad(H.J.col(k))).trace();
        Rational t3 = (H.K * g.ad(H.K.col(k))).trace();
        if (t1 != t2 || t2 != t3) rep.alpha_independent = false;
    }
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            const RationalVec& z = g.bracket_basis(i, j);
            Rational t = conn.of(z).trace();
            rep.values.push_back(t);
            if (!t.is_zero()) rep.all_zero = false;
            for (int alpha = 1; alpha <= 3; alpha++) {
                const RationalMatrix& Ja = H.J_alpha(alpha);
                if ((Ja * g.ad(Ja.apply(z))).trace() != t) rep.matches_J_trace = false;
            }
        }
    return rep;
}

HolonomyAlgebra infinitesimal_holonomy(const LieAlgebra& g, const Connection& conn,
                                       std::optional<int> max_insertions) {
    const int m = g.dim();
    const int bound = max_insertions.value_or(m * m);
    EchelonBasis<Rational> span(m * m);
    std::vector<RationalMatrix> gens;
    std::vector<int> depth;
    std::deque<size_t> worklist;

    auto admit = [&](RationalMatrix cand, int d) {
        if (span.dim() >= bound && !span.contains(flatten(cand)))
            throw std::runtime_error("holonomy closure exceeded the iteration bound of " +
                                     std::to_string(bound));
        if (!span.insert(flatten(cand))) return;
        gens.push_back(std::move(cand));
        depth.push_back(d);
        worklist.push_back(gens.size() - 1);
    };

    CurvatureTensor R = curvature(g, conn);
    for (const auto& r : R.store)
        if (!r.is_zero()) admit(r, 0);
    HolonomyAlgebra hol;
    hol.seed_rank = span.dim();

    while (!worklist.empty()) {
        // close under m -> [A_X, m]
        while (!worklist.empty()) {
            size_t at = worklist.front();
            worklist.pop_front();
            for (int k = 0; k < m; k++) {
                RationalMatrix c = conn.A[k].commutator(gens[at]);
                if (!c.is_zero()) admit(std::move(c), depth[at] + 1);
            }
        }
        // then under pairwise commutators; anything new re-enters the loop
        size_t count = gens.size();
        for (size_t a = 0; a < count && worklist.empty(); a++)
            for (size_t b = a + 1; b < count; b++) {
                RationalMatrix c = gens[a].commutator(gens[b]);
                if (!c.is_zero()) admit(std::move(c), std::max(depth[a], depth[b]) + 1);
                if (!worklist.empty()) break;
            }
    }

    hol.dim = span.dim();
    for (int d : depth) hol.closure_depth = std::max(hol.closure_depth, d);
    // deterministic output basis: the echelon rows themselves
    for (const auto& row : span.rows()) hol.generators.push_back(unflatten(row, m));
    return hol;
}

GaussianRational complex_trace(const RationalMatrix& h, const RationalMatrix& I) {
    if (!h.commutator(I).is_zero())
        throw std::invalid_argument("complex_trace: endomorphism is not I-linear");
    Rational half(1, 2);
    return GaussianRational(half * h.trace(), -half * (I * h).trace());
}

SlMembershipReport sl_membership_report(const LieAlgebra& g, const HypercomplexStructure& H,
                                        std::optional<int> max_insertions) {
    if (!g.is_nilpotent())
        throw PreconditionError("sl_membership_report: requires a nilpotent Lie algebra");
    HypercomplexValidation v = validate_hypercomplex(g, H.I, H.J, H.K);
    if (!v.pass)
        throw PreconditionError("sl_membership_report: invalid hypercomplex structure (" +
                                v.failures.front() + ")");
    Connection conn = obata_connection(g, H);
    HolonomyAlgebra hol = infinitesimal_holonomy(g, conn, max_insertions);

    SlMembershipReport rep;
    rep.holonomy_dim = hol.dim;
    rep.closure_depth = hol.closure_depth;
    rep.pass = true;
    for (const auto& h : hol.generators) {
        SlGeneratorRecord rec;
        rec.commutes_I = h.commutator(H.I).is_zero();
        rec.commutes_J = h.commutator(H.J).is_zero();
        rec.commutes_K = h.commutator(H.K).is_zero();
        if (rec.commutes_I) {
            rec.trace = complex_trace(h, H.I);
            rec.trace_zero = rec.trace.is_zero();
            rec.trace_real = rec.trace.is_real();
        }
        if (!(rec.commutes_I && rec.commutes_J && rec.commutes_K && rec.trace_zero && rec.trace_real))
            rep.pass = false;
        rep.generators.push_back(std::move(rec));
    }

    // nabla eta = 0: A_X commutes with I, and its complex trace (the
    // scalar of the induced action on the top (1,0)-power) vanishes.
    rep.nabla_eta_zero = true;
    for (int i = 0; i < g.dim(); i++)
        if (!complex_trace(conn.A[i], H.I).is_zero()) rep.nabla_eta_zero = false;
    rep.d_eta_zero = canonical_form(g, H.I).closed;
    rep.pass = rep.pass && rep.nabla_eta_zero && rep.d_eta_zero;
    return rep;
}

} // namespace nilgeo
