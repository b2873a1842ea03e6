#include "hopfg/mtrace.hpp"

#include <random>
#include <string>

#include "hopfg/errors.hpp"

namespace hopfg {

namespace {

void require_shape(const HopfGFamily& F, const Grade& a, const HMatrix& X, int rows, int cols,
                   const char* what) {
    if ((int)X.size() != rows) throw DimensionMismatch(std::string(what) + ": wrong row count");
    const int d = F.dim(a);
    for (const auto& row : X) {
        if ((int)row.size() != cols)
            throw DimensionMismatch(std::string(what) + ": wrong column count");
        for (const Vec& e : row)
            if ((int)e.size() != d)
                throw DimensionMismatch(std::string(what) + ": entry is not an element of H");
    }
}

}  // namespace

HMatrix hmat_mul(const GradedAlgebra& A, const HMatrix& X, const HMatrix& Y) {
    const int p = (int)X.size();
    const int q = (int)Y.size();
    if (p == 0 || q == 0 || (int)X[0].size() != q)
        throw DimensionMismatch("hmat_mul: inner dimensions disagree");
    const int s = (int)Y[0].size();
    HMatrix Z(p, std::vector<Vec>(s, zero_vec(A.dim, A.N)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < q; ++k)
                Z[i][j] = vec_add(Z[i][j], A.multiply(X[i][k], Y[k][j]));
    return Z;
}

bool hmat_eq(const HMatrix& X, const HMatrix& Y) {
    if (X.size() != Y.size()) return false;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (X[i].size() != Y[i].size()) return false;
        for (std::size_t j = 0; j < X[i].size(); ++j)
            if (!vec_eq(X[i][j], Y[i][j])) return false;
    }
    return true;
}

HMatrix random_hmatrix(const HopfGFamily& F, const Grade& a, int rows, int cols,
                       unsigned long seed) {
    std::mt19937_64 rng(seed);
    const int d = F.dim(a);
    const long N = F.modulus();
    HMatrix X(rows, std::vector<Vec>(cols, zero_vec(d, N)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int k = 0; k < d; ++k) {
                long num = (long)(rng() % 7) - 3;
                if (num == 0) continue;
                X[i][j][k] = CycNumber(Rational(num, 1 + (long)(rng() % 2)), N);
            }
    return X;
}

ProjPresentation free_presentation(const HopfGFamily& F, const Grade& a, int n) {
    const GradedAlgebra& A = F.algebra(a);
    ProjPresentation P;
    P.grade = a;
    P.n = n;
    P.idempotent.assign(n, std::vector<Vec>(n, zero_vec(A.dim, A.N)));
    for (int i = 0; i < n; ++i) P.idempotent[i][i] = A.unit;
    return P;
}

CheckReport check_presentation(const HopfGFamily& F, const ProjPresentation& P) {
    require_shape(F, P.grade, P.idempotent, P.n, P.n, "presentation");
    const GradedAlgebra& A = F.algebra(P.grade);
    HMatrix sq = hmat_mul(A, P.idempotent, P.idempotent);
    bool pass = true;
    std::string witness;
    for (int i = 0; i < P.n && pass; ++i)
        for (int j = 0; j < P.n && pass; ++j)
            if (!vec_eq(sq[i][j], P.idempotent[i][j])) {
                pass = false;
                witness = "E^2 differs from E at entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")";
            }
    CheckReport rep;
    rep.add("presentation.idempotent", "grade " + P.grade.str(), pass, witness);
    return rep;
}

const Vec& CyclicTraceFamily::at(const Grade& g) const {
    auto it = lambda.find(g);
    if (it == lambda.end()) throw WindowIncomplete("no trace form at grade " + g.str());
    return it->second;
}

CyclicTraceFamily cyclic_trace_family(const GIntegralFamily& sym) {
    CyclicTraceFamily t;
    t.left = sym.left;
    t.lambda = sym.forms;
    return t;
}

CycNumber hs_trace(const HopfGFamily& F, const CyclicTraceFamily& t, const ProjPresentation& P,
                   const HMatrix& f) {
    require_shape(F, P.grade, f, P.n, P.n, "endomorphism");
    const GradedAlgebra& A = F.algebra(P.grade);
    HMatrix sandwiched = hmat_mul(A, hmat_mul(A, P.idempotent, f), P.idempotent);
    if (!hmat_eq(sandwiched, f))
        throw NotEndomorphismOfP("matrix is not compressed by the presenting idempotent");
    const Vec& lam = t.at(P.grade);
    CycNumber acc = CycNumber::zero(A.N);
    for (int i = 0; i < P.n; ++i) acc += dot(lam, f[i][i]);
    return acc;
}

CycNumber trace_on_regular(const HopfGFamily& F, const CyclicTraceFamily& t, const Grade& a,
                           const Morphism& f) {
    const GradedAlgebra& A = F.algebra(a);
    if (f.source.dim() != A.dim || f.target.dim() != A.dim || !(f.source.grade() == a))
        throw DimensionMismatch("trace_on_regular expects an endomorphism of H at the given grade");
    CheckReport lin = f.check_intertwiner(true);
    if (!lin.ok()) {
        std::string why = "map is not H-linear";
        for (const auto& it : lin.items)
            if (!it.pass && !it.witness.empty()) {
                why += ": " + it.witness;
                break;
            }
        throw NotIntertwiner(why);
    }
    return dot(t.at(a), f.mat.apply(A.unit));
}

Vec trace_to_integral(const HopfGFamily& F,
                      const std::function<CycNumber(const Grade&, const Morphism&)>& t,
                      const Grade& a) {
    const GradedAlgebra& A = F.algebra(a);
    ModuleRep H = regular_module(F, a);
    Vec out = zero_vec(A.dim, A.N);
    for (int i = 0; i < A.dim; ++i) {
        Matrix R = A.right_mult(unit_vec(A.dim, i, A.N));
        out[i] = t(a, make_morphism(H, H, R.to_sparse()));
    }
    return out;
}

CheckReport check_reduction_lemma(const HopfGFamily& F, const CyclicTraceFamily& t_right,
                                  const CyclicTraceFamily& t_left, const Grade& a, const Grade& b,
                                  int seeds, unsigned long seed_base) {
    const Grade ab = F.compose(a, b);
    const GradedAlgebra& Aab = F.algebra(ab);
    const int da = F.dim(a), db = F.dim(b), dab = Aab.dim;
    const long N = F.modulus();
    const Vec& lam_ab = t_right.at(ab);
    const Vec& laml_ab = t_left.at(ab);

    Morphism phi = phi_iso(F, a, b), psi = psi_iso(F, a, b);
    Morphism phl = phi_left_iso(F, a, b), psl = psi_left_iso(F, a, b);
    ModuleRep Ha = regular_module(F, a), Hb = regular_module(F, b);
    ModuleRep T = tensor_module(Ha, Hb);

    CheckReport rep;
    const std::string where = "grades (" + a.str() + ", " + b.str() + ")";
    for (int s = 0; s <= seeds; ++s) {
        Morphism f = (s == 0) ? identity_morphism(T) : random_endomorphism(F, a, b, seed_base + s);
        const std::string tag = (s == 0) ? "identity" : ("seed " + std::to_string(seed_base + s));

        // right handed: free presentation along psi versus the partial trace
        CycNumber lhs = CycNumber::zero(N);
        for (int k = 0; k < db; ++k) {
            Vec u = kron_vec(Aab.unit, unit_vec(db, k, N));
            Vec v = psi.mat.apply(f.mat.apply(phi.mat.apply(u)));
            for (int p = 0; p < dab; ++p) lhs += lam_ab[p] * v[(std::size_t)p * db + k];
        }
        CycNumber rhs = trace_on_regular(F, t_right, a, partial_trace_right(Ha, Ha, Hb, f));
        rep.add("reduction.right", where, lhs == rhs,
                lhs == rhs ? tag : tag + ": " + lhs.str() + " != " + rhs.str());

        // left handed: free presentation along psi_left versus the left trace
        CycNumber lhs_l = CycNumber::zero(N);
        for (int k = 0; k < da; ++k) {
            Vec u = kron_vec(unit_vec(da, k, N), Aab.unit);
            Vec v = psl.mat.apply(f.mat.apply(phl.mat.apply(u)));
            for (int p = 0; p < dab; ++p) lhs_l += laml_ab[p] * v[(std::size_t)k * dab + p];
        }
        CycNumber rhs_l = trace_on_regular(F, t_left, b, partial_trace_left(Ha, Hb, Hb, f));
        rep.add("reduction.left", where, lhs_l == rhs_l,
                lhs_l == rhs_l ? tag : tag + ": " + lhs_l.str() + " != " + rhs_l.str());
    }
    return rep;
}

CheckReport check_decomposition_identities(const HopfGFamily& F, const CyclicTraceFamily& t_right,
                                           const Grade& a, const Grade& b) {
    const Grade ab = F.compose(a, b);
    const GradedAlgebra& Aa = F.algebra(a);
    const GradedAlgebra& Ab = F.algebra(b);
    const GradedAlgebra& Aab = F.algebra(ab);
    const int da = Aa.dim, db = Ab.dim;
    const long N = F.modulus();
    const Vec& lam_a = t_right.at(a);
    const Vec& lam_ab = t_right.at(ab);
    const std::string where = "grades (" + a.str() + ", " + b.str() + ")";

    CheckReport rep;
    Morphism phi = phi_iso(F, a, b), psi = psi_iso(F, a, b);
    for (int k = 0; k < db; ++k) {
        Vec got = phi.mat.apply(kron_vec(Aab.unit, unit_vec(db, k, N)));
        Vec expect = kron_vec(Aa.unit, unit_vec(db, k, N));
        rep.add("phi.unit-column", where, vec_eq(got, expect),
                vec_eq(got, expect) ? "" : "column " + Ab.label(k));
    }
    Vec gb = F.pivot(b);
    for (int x = 0; x < da; ++x)
        for (int y = 0; y < db; ++y) {
            Vec lhs = zero_vec(db, N);
            for (const auto& [row, c] : psi.mat.col(x * db + y))
                lhs[row % db] += lam_ab[row / db] * c;
            Vec rhs = vec_scale(Ab.multiply(gb, unit_vec(db, y, N)), lam_a[x]);
            rep.add("psi.form-collapse", where, vec_eq(lhs, rhs),
                    vec_eq(lhs, rhs) ? "" : "(" + Aa.label(x) + ", " + Ab.label(y) + ")");
        }
    return rep;
}

CycNumber categorical_trace(const ModuleRep& M, const Morphism& f, bool left) {
    if (f.source.dim() != M.dim() || f.target.dim() != M.dim())
        throw DimensionMismatch("categorical_trace expects an endomorphism of the module");
    Matrix P = left ? M.pivot_inv_action() : M.pivot_action();
    CycNumber acc = CycNumber::zero(M.modulus());
    for (int j = 0; j < M.dim(); ++j)
        for (const auto& [k, c] : f.mat.col(j)) acc += P.at(j, k) * c;
    return acc;
}

CheckReport check_cyclicity(const HopfGFamily& F, const CyclicTraceFamily& t,
                            const ProjPresentation& P, const ProjPresentation& Q, int pairs,
                            unsigned long seed_base) {
    if (!(P.grade == Q.grade))
        throw GradeMismatch("cyclicity pairs need presentations over one grade");
    const GradedAlgebra& A = F.algebra(P.grade);
    CheckReport rep;
    for (int p = 0; p < pairs; ++p) {
        HMatrix X = random_hmatrix(F, P.grade, P.n, Q.n, seed_base + 2 * (unsigned long)p);
        HMatrix Y = random_hmatrix(F, P.grade, Q.n, P.n, seed_base + 2 * (unsigned long)p + 1);
        // compress both to maps between the presented images
        X = hmat_mul(A, hmat_mul(A, P.idempotent, X), Q.idempotent);
        Y = hmat_mul(A, hmat_mul(A, Q.idempotent, Y), P.idempotent);
        CycNumber onP = hs_trace(F, t, P, hmat_mul(A, X, Y));
        CycNumber onQ = hs_trace(F, t, Q, hmat_mul(A, Y, X));
        rep.add("mtrace.cyclicity", "pair " + std::to_string(p), onP == onQ,
                onP == onQ ? "" : onP.str() + " != " + onQ.str());
    }
    return rep;
}

Matrix trace_pairing_gram(const HopfGFamily& F, const CyclicTraceFamily& t, const Grade& a) {
    const GradedAlgebra& A = F.algebra(a);
    const Vec& lam = t.at(a);
    Matrix G(A.dim, A.dim, A.N);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            CycNumber acc = CycNumber::zero(A.N);
            // R_i o R_j is right multiplication by e_j e_i
            for (const auto& [k, c] : A.product(j, i).ent) acc += lam[k] * c;
            G.at(i, j) = acc;
        }
    return G;
}

}  // namespace hopfg
