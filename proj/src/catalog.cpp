#include "nilgeo/catalog.hpp"

#include <map>
#include <stdexcept>

namespace nilgeo {

AssociativeAlgebra AssociativeAlgebra::create(std::string name, std::vector<std::string> basis_names,
                                              std::vector<std::vector<ComplexVec>> mult) {
    AssociativeAlgebra A;
    A.name = std::move(name);
    A.dim = int(basis_names.size());
    A.names = std::move(basis_names);
    A.mult = std::move(mult);
    if (int(A.mult.size()) != A.dim)
        throw std::invalid_argument("AssociativeAlgebra: table size mismatch");
    for (const auto& row : A.mult) {
        if (int(row.size()) != A.dim)
            throw std::invalid_argument("AssociativeAlgebra: table size mismatch");
        for (const auto& v : row)
            if (int(v.size()) != A.dim)
                throw std::invalid_argument("AssociativeAlgebra: table size mismatch");
    }
    for (int p = 0; p < A.dim; p++)
        for (int q = 0; q < A.dim; q++)
            for (int r = 0; r < A.dim; r++) {
                ComplexVec lhs = A.multiply(A.mult[p][q], A.unit(r));
                ComplexVec rhs = A.multiply(A.unit(p), A.mult[q][r]);
                if (lhs != rhs)
                    throw std::invalid_argument("AssociativeAlgebra: not associative at triple (" +
                                                std::to_string(p + 1) + "," + std::to_string(q + 1) +
                                                "," + std::to_string(r + 1) + ")");
            }
    return A;
}

ComplexVec AssociativeAlgebra::multiply(const ComplexVec& a, const ComplexVec& b) const {
    ComplexVec r(dim);
    for (int p = 0; p < dim; p++) {
        if (a[p].is_zero()) continue;
        for (int q = 0; q < dim; q++) {
            if (b[q].is_zero()) continue;
            GaussianRational c = a[p] * b[q];
            for (int k = 0; k < dim; k++)
                if (!mult[p][q][k].is_zero()) r[k] += c * mult[p][q][k];
        }
    }
    return r;
}

bool AssociativeAlgebra::commutative() const {
    for (int p = 0; p < dim; p++)
        for (int q = p + 1; q < dim; q++)
            if (mult[p][q] != mult[q][p]) return false;
    return true;
}

std::optional<int> AssociativeAlgebra::nilpotency_index() const {
    EchelonBasis<GaussianRational> power(dim);
    for (int p = 0; p < dim; p++) power.insert(unit(p));
    int s = 1;
    while (true) {
        EchelonBasis<GaussianRational> next(dim);
        for (int p = 0; p < dim; p++)
            for (const auto& v : power.rows()) next.insert(multiply(unit(p), v));
        if (next.dim() == 0) return s;
        if (next.dim() == power.dim()) return std::nullopt;
        power = std::move(next);
        s++;
    }
}

AssociativeAlgebra strictly_upper_triangular(int k) {
    if (k < 2) throw std::invalid_argument("strictly_upper_triangular: requires k >= 2");
    std::vector<std::pair<int, int>> slots;
    std::vector<std::string> names;
    for (int p = 1; p <= k; p++)
        for (int q = p + 1; q <= k; q++) {
            slots.push_back({p, q});
            names.push_back("E" + std::to_string(p) + std::to_string(q));
        }
    int d = int(slots.size());
    std::map<std::pair<int, int>, int> index;
    for (int s = 0; s < d; s++) index[slots[s]] = s;
    std::vector<std::vector<ComplexVec>> mult(d, std::vector<ComplexVec>(d, ComplexVec(d)));
    for (int a = 0; a < d; a++)
        for (int b = 0; b < d; b++) {
            auto [p, q] = slots[a];
            auto [r, s] = slots[b];
            if (q == r) mult[a][b][index.at({p, s})] = GaussianRational(1L);
        }
    return AssociativeAlgebra::create("A" + std::to_string(k), std::move(names), std::move(mult));
}

AssociativeAlgebra truncated_polynomials(int m) {
    if (m < 2) throw std::invalid_argument("truncated_polynomials: requires m >= 2");
    int d = m - 1; // basis t, t^2, .., t^{m-1}
    std::vector<std::string> names;
    for (int p = 1; p <= d; p++) names.push_back(p == 1 ? "t" : "t" + std::to_string(p));
    std::vector<std::vector<ComplexVec>> mult(d, std::vector<ComplexVec>(d, ComplexVec(d)));
    for (int p = 1; p <= d; p++)
        for (int q = 1; q <= d; q++)
            if (p + q <= d) mult[p - 1][q - 1][p + q - 1] = GaussianRational(1L);
    return AssociativeAlgebra::create("tC[t]/(t^" + std::to_string(m) + ")", std::move(names),
                                      std::move(mult));
}

namespace {

/// Real coordinates of the first/second copy of A inside aff(A):
/// slot 2t holds a_t, slot 2t+1 holds i*a_t.
ComplexVec complex_of_real(const RationalVec& x, int d, int offset) {
    ComplexVec z(d);
    for (int t = 0; t < d; t++) z[t] = GaussianRational(x[offset + 2 * t], x[offset + 2 * t + 1]);
    return z;
}

void add_real_of_complex(RationalVec& out, const ComplexVec& z, int offset) {
    for (size_t t = 0; t < z.size(); t++) {
        out[offset + 2 * t] += z[t].re;
        out[offset + 2 * t + 1] += z[t].im;
    }
}

} // namespace

AffAlgebra aff(const AssociativeAlgebra& A, const std::string& lie_name) {
    const int d = A.dim;
    const int m = 4 * d;
    const int second = 2 * d;

    auto bracket_vec = [&](const RationalVec& x, const RationalVec& y) {
        ComplexVec xa = complex_of_real(x, d, 0), xb = complex_of_real(x, d, second);
        ComplexVec ya = complex_of_real(y, d, 0), yb = complex_of_real(y, d, second);
        // [(a,b),(a',b')] = (aa' - a'a, ab' - a'b)
        ComplexVec first_part = A.multiply(xa, ya);
        ComplexVec tmp = A.multiply(ya, xa);
        for (int t = 0; t < d; t++) first_part[t] -= tmp[t];
        ComplexVec second_part = A.multiply(xa, yb);
        tmp = A.multiply(ya, xb);
        for (int t = 0; t < d; t++) second_part[t] -= tmp[t];
        RationalVec out(m);
        add_real_of_complex(out, first_part, 0);
        add_real_of_complex(out, second_part, second);
        return out;
    };

    std::vector<std::string> names;
    for (int i = 1; i <= m; i++) names.push_back("e" + std::to_string(i));
    std::vector<BracketSpec> specs;
    for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++) {
            RationalVec ei(m), ej(m);
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            RationalVec br = bracket_vec(ei, ej);
            if (vec_is_zero(br)) continue;
            BracketSpec s;
            s.x = i;
            s.y = j;
            for (int k = 0; k < m; k++)
                if (!br[k].is_zero()) s.terms.push_back({k, br[k]});
            specs.push_back(std::move(s));
        }

    AffAlgebra out{LieAlgebra::create(lie_name, std::move(names), specs), HypercomplexStructure{}};
    if (out.g.jacobi_violation())
        throw std::logic_error("aff: Jacobi identity failed (algebra not associative?)");

    RationalMatrix J(m, m), K(m, m);
    for (int s = 0; s < second; s++) {
        J.at(second + s, s) = Rational(-1); // J(a,0) = (0,-a)
        J.at(s, second + s) = Rational(1);  // J(0,b) = (b,0)
    }
    for (int t = 0; t < d; t++) {
        K.at(2 * t + 1, 2 * t) = Rational(-1); // K(a,0) = (-ia,0)
        K.at(2 * t, 2 * t + 1) = Rational(1);
        K.at(second + 2 * t + 1, second + 2 * t) = Rational(1); // K(0,b) = (0,ib)
        K.at(second + 2 * t, second + 2 * t + 1) = Rational(-1);
    }
    out.H.J = J;
    out.H.K = K;
    out.H.I = J * K;
    return out;
}

namespace {

RationalMatrix identity_metric(int m) { return RationalMatrix::identity(m); }

CatalogEntry make_torus(int n) {
    const int m = 4 * n;
    std::vector<std::string> names;
    for (int i = 1; i <= m; i++) names.push_back("e" + std::to_string(i));
    CatalogEntry e;
    e.name = "torus" + std::to_string(n);
    e.description = "abelian R^" + std::to_string(m) + " with the standard quaternionic triple";
    e.g = LieAlgebra::create(e.name, names, {});
    RationalMatrix I(m, m), J(m, m), K(m, m);
    for (int b = 0; b < n; b++) {
        int o = 4 * b;
        I.at(o + 1, o + 0) = Rational(1);
        I.at(o + 0, o + 1) = Rational(-1);
        I.at(o + 3, o + 2) = Rational(1);
        I.at(o + 2, o + 3) = Rational(-1);
        J.at(o + 2, o + 0) = Rational(1);
        J.at(o + 3, o + 1) = Rational(-1);
        J.at(o + 0, o + 2) = Rational(-1);
        J.at(o + 1, o + 3) = Rational(1);
        K.at(o + 3, o + 0) = Rational(1);
        K.at(o + 2, o + 1) = Rational(1);
        K.at(o + 1, o + 2) = Rational(-1);
        K.at(o + 0, o + 3) = Rational(-1);
    }
    e.triple = HypercomplexStructure{std::move(I), std::move(J), std::move(K)};
    e.metric = identity_metric(m);
    e.expected_step = 1;
    e.expected_abelian = true;
    e.expected_hkt = true;
    return e;
}

CatalogEntry make_kodaira() {
    CatalogEntry e;
    e.name = "kodaira";
    e.description = "Heisenberg + R with the abelian complex structure Je1=e2, Je3=e4";
    BracketSpec b{0, 1, {{2, Rational(1)}}};
    e.g = LieAlgebra::create(e.name, {"e1", "e2", "e3", "e4"}, {b});
    RationalMatrix J(4, 4);
    J.at(1, 0) = Rational(1);
    J.at(0, 1) = Rational(-1);
    J.at(3, 2) = Rational(1);
    J.at(2, 3) = Rational(-1);
    e.I = std::move(J);
    e.metric = identity_metric(4);
    e.expected_step = 2;
    e.expected_abelian = true;
    return e;
}

CatalogEntry make_iwasawa() {
    CatalogEntry e;
    e.name = "iwasawa";
    e.description = "realified complex Heisenberg with the bi-invariant structure Ie(2j-1)=e(2j)";
    std::vector<BracketSpec> bs = {
        {0, 2, {{4, Rational(1)}}},
        {0, 3, {{5, Rational(1)}}},
        {1, 2, {{5, Rational(1)}}},
        {1, 3, {{4, Rational(-1)}}},
    };
    e.g = LieAlgebra::create(e.name, {"e1", "e2", "e3", "e4", "e5", "e6"}, bs);
    RationalMatrix I(6, 6);
    for (int j = 0; j < 3; j++) {
        I.at(2 * j + 1, 2 * j) = Rational(1);
        I.at(2 * j, 2 * j + 1) = Rational(-1);
    }
    e.I = std::move(I);
    e.metric = identity_metric(6);
    e.expected_step = 2;
    e.expected_abelian = false;
    return e;
}

CatalogEntry make_heisenberg3() {
    CatalogEntry e;
    e.name = "heisenberg3";
    e.description = "three-dimensional Heisenberg algebra [e1,e2]=e3";
    BracketSpec b{0, 1, {{2, Rational(1)}}};
    e.g = LieAlgebra::create(e.name, {"e1", "e2", "e3"}, {b});
    e.expected_step = 2;
    return e;
}

CatalogEntry make_sl2() {
    CatalogEntry e;
    e.name = "sl2";
    e.description = "sl(2,R): [h,x]=2x, [h,y]=-2y, [x,y]=h (not nilpotent; negative-test entry)";
    std::vector<BracketSpec> bs = {
        {0, 1, {{1, Rational(2)}}},
        {0, 2, {{2, Rational(-2)}}},
        {1, 2, {{0, Rational(1)}}},
    };
    e.g = LieAlgebra::create(e.name, {"h", "x", "y"}, bs);
    e.expected_step = std::nullopt;
    return e;
}

CatalogEntry make_aff(const AssociativeAlgebra& A, const std::string& name,
                      const std::string& description, int step, bool abelian) {
    AffAlgebra a = aff(A, name);
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.g = std::move(a.g);
    e.triple = std::move(a.H);
    e.metric = identity_metric(e.g.dim());
    e.expected_step = step;
    e.expected_abelian = abelian;
    e.expected_hkt = abelian; // HKT iff abelian
    return e;
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"torus1", "torus2",  "kodaira", "iwasawa", "heisenberg3", "sl2",
            "aff_a2", "aff_a3",  "aff_a4",  "aff_t3",  "aff_t4"};
}

bool catalog_has(const std::string& name) {
    for (const auto& n : catalog_names())
        if (n == name) return true;
    return false;
}

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "torus1") return make_torus(1);
    if (name == "torus2") return make_torus(2);
    if (name == "kodaira") return make_kodaira();
    if (name == "iwasawa") return make_iwasawa();
    if (name == "heisenberg3") return make_heisenberg3();
    if (name == "sl2") return make_sl2();
    if (name == "aff_a2")
        return make_aff(strictly_upper_triangular(2), "aff_a2",
                        "aff(A_2), A_2 = strictly upper triangular 2x2: the flat R^4", 1, true);
    if (name == "aff_a3")
        return make_aff(strictly_upper_triangular(3), "aff_a3",
                        "aff(A_3): 12-dimensional, 2-step, non-abelian hypercomplex", 2, false);
    if (name == "aff_a4")
        return make_aff(strictly_upper_triangular(4), "aff_a4",
                        "aff(A_4): 24-dimensional, 3-step, non-abelian hypercomplex", 3, false);
    if (name == "aff_t3")
        return make_aff(truncated_polynomials(3), "aff_t3",
                        "aff(tC[t]/(t^3)): 8-dimensional, 2-step, abelian hypercomplex", 2, true);
    if (name == "aff_t4")
        return make_aff(truncated_polynomials(4), "aff_t4",
                        "aff(tC[t]/(t^4)): 12-dimensional, 3-step, abelian hypercomplex", 3, true);
    throw std::invalid_argument("catalog: unknown entry \"" + name + "\"");
}

void CatalogEntry::verify_manifest() const {
    if (g.jacobi_violation()) throw std::logic_error("catalog " + name + ": Jacobi identity fails");
    if (g.nilpotency_step() != expected_step)
        throw std::logic_error("catalog " + name + ": nilpotency step mismatch");
    if (triple) {
        HypercomplexValidation v = validate_hypercomplex(g, triple->I, triple->J, triple->K);
        if (!v.pass)
            throw std::logic_error("catalog " + name + ": hypercomplex validation failed (" +
                                   v.failures.front() + ")");
        AbelianEquivalence eq = abelian_equivalence_check(g, *triple);
        if (!eq.agree || (expected_abelian && eq.abelian != *expected_abelian))
            throw std::logic_error("catalog " + name + ": abelianness mismatch");
        if (expected_hkt) {
            Metric base = su2_average(Metric::make(*metric), *triple);
            if (hkt_check(g, *triple, base).hkt != *expected_hkt)
                throw std::logic_error("catalog " + name + ": HKT expectation mismatch");
        }
    } else if (I) {
        ComplexStructure cs = validate_complex_structure(g, *I);
        if (!cs.integrable) throw std::logic_error("catalog " + name + ": structure not integrable");
        if (expected_abelian && cs.abelian != *expected_abelian)
            throw std::logic_error("catalog " + name + ": abelianness mismatch");
    }
}

} // namespace nilgeo
