#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <hopfg/errors.hpp>
#include <hopfg/modcat.hpp>
#include <hopfg/uqsl2.hpp>

using namespace hopfg;

namespace {

SL2Family& family_r2() {
    static SL2Family F(SL2Params::make(2, Rational(1, 2)));
    return F;
}

// Deterministic dense-ish random matrix with small rational entries, used
// for linear maps that are deliberately not module morphisms.
SparseMatrix random_matrix(int rows, int cols, long N, unsigned long seed) {
    std::mt19937_64 rng(seed);
    SparseMatrix m(rows, cols, N);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            long pick = static_cast<long>(rng() % 5);
            if (pick == 0) continue;
            m.set(i, j, CycNumber(Rational(pick - 3, 1 + (long)(rng() % 3)), N));
        }
    return m;
}

}  // namespace

TEST_CASE("module axioms hold for the basic constructions") {
    SL2Family& F = family_r2();
    Grade half = F.grade_of(Rational(1, 2));

    ModuleRep V = F.simple_module(Rational(1, 2));
    CHECK(V.check_module().ok());
    CHECK(V.dim() == 2);

    ModuleRep H = regular_module(F, half);
    CHECK(H.check_module().ok());

    CHECK(dual_module(V).check_module().ok());
    CHECK(dual_module(V).grade() == F.inverse(V.grade()));

    ModuleRep VV = tensor_module(V, V);
    CHECK(VV.check_module().ok());
    CHECK(VV.grade() == F.compose(V.grade(), V.grade()));

    CHECK(trivial_twist_module(F, half).check_module().ok());
    CHECK(unit_object(F).check_module().ok());
}

TEST_CASE("duality zig-zags and H-linearity on simple and regular modules") {
    SL2Family& F = family_r2();
    CHECK(check_duality(F.simple_module(Rational(1, 2))).ok());
    CHECK(check_duality(regular_module(F, F.grade_of(Rational(1, 2)))).ok());

    // one cheap higher-r instance: dimension 3 simple at r = 3
    SL2Family F3(SL2Params::make(3, Rational(1, 2)));
    CHECK(check_duality(F3.simple_module(Rational(1, 2))).ok());
}

TEST_CASE("partial trace contractions agree with the duality-composed route") {
    SL2Family& F = family_r2();
    // U and V share a grade, so U (x) W and V (x) W do too
    ModuleRep U = F.simple_module(Rational(1, 2));
    ModuleRep V = F.simple_module(Rational(5, 2));
    ModuleRep W = regular_module(F, F.grade_of(Rational(1, 2)));

    ModuleRep UW = tensor_module(U, W), VW = tensor_module(V, W);
    Morphism f = make_morphism(UW, VW, random_matrix(VW.dim(), UW.dim(), F.modulus(), 11));
    Morphism t = partial_trace_right(U, V, W, f);
    CHECK(t.mat.to_dense() == partial_trace_right_slow(U, V, W, f));
    CHECK(t.source.dim() == U.dim());
    CHECK(t.target.dim() == V.dim());

    ModuleRep WU = tensor_module(W, U), WV = tensor_module(W, V);
    Morphism g = make_morphism(WU, WV, random_matrix(WV.dim(), WU.dim(), F.modulus(), 12));
    Morphism s = partial_trace_left(W, U, V, g);
    CHECK(s.mat.to_dense() == partial_trace_left_slow(W, U, V, g));
}

TEST_CASE("phi and psi are mutually inverse module isomorphisms") {
    SL2Family& F = family_r2();
    const long N = F.modulus();
    std::vector<std::pair<Rational, Rational>> pairs = {
        {Rational(1, 2), Rational(1)}, {Rational(3, 2), Rational(3, 2)}};
    for (const auto& [ra, rb] : pairs) {
        Grade a = F.grade_of(ra), b = F.grade_of(rb);
        CAPTURE(ra.get_d());
        CAPTURE(rb.get_d());
        Morphism phi = phi_iso(F, a, b), psi = psi_iso(F, a, b);
        int n = phi.mat.rows();
        CHECK((psi.mat * phi.mat).to_dense() == Matrix::identity(n, N));
        CHECK((phi.mat * psi.mat).to_dense() == Matrix::identity(n, N));

        Morphism phl = phi_left_iso(F, a, b), psl = psi_left_iso(F, a, b);
        CHECK((psl.mat * phl.mat).to_dense() == Matrix::identity(n, N));
        CHECK((phl.mat * psl.mat).to_dense() == Matrix::identity(n, N));
    }

    // phi(1 (x) m) = 1 (x) m: the unit columns are untouched
    Grade a = F.grade_of(Rational(1, 2)), b = F.grade_of(Rational(1));
    Morphism phi = phi_iso(F, a, b);
    int db = F.dim(b);
    for (int k = 0; k < db; ++k) {
        Vec col = zero_vec(phi.mat.cols(), N);
        col[k] = CycNumber::one(N);  // unit of H_{ab} has index 0
        CHECK(vec_eq(phi.mat.apply(col), col));
    }
}

TEST_CASE("phi and psi intertwine the actions on both sides") {
    SL2Family& F = family_r2();
    Grade a = F.grade_of(Rational(1, 2)), b = F.grade_of(Rational(1));
    CHECK(phi_iso(F, a, b).check_intertwiner(false).ok());
    CHECK(psi_iso(F, a, b).check_intertwiner(false).ok());
    CHECK(phi_left_iso(F, a, b).check_intertwiner(false).ok());
    CHECK(psi_left_iso(F, a, b).check_intertwiner(false).ok());
}

TEST_CASE("hom spaces between simples have the expected dimensions") {
    SL2Family& F = family_r2();
    ModuleRep V = F.simple_module(Rational(1, 2));
    ModuleRep V2 = F.simple_module(Rational(5, 2));

    std::vector<Matrix> endo = hom_space(V, V);
    REQUIRE(endo.size() == 1);
    // the one-dimensional endomorphism space is spanned by a scalar matrix
    const Matrix& B = endo[0];
    CHECK_FALSE(B.at(0, 0).is_zero());
    CHECK(B == Matrix::identity(V.dim(), F.modulus()) * B.at(0, 0));

    // distinct Casimir scalars leave no room for maps between the two
    CHECK(hom_space(V, V2).empty());
}

TEST_CASE("random endomorphisms are H-linear by construction and reproducible") {
    SL2Family& F = family_r2();
    Grade a = F.grade_of(Rational(1, 2)), b = F.grade_of(Rational(1));
    Morphism e1 = random_endomorphism(F, a, b, 7);
    CHECK(e1.check_intertwiner(false).ok());
    Morphism e2 = random_endomorphism(F, a, b, 7);
    CHECK(e1.mat == e2.mat);
    Morphism e3 = random_endomorphism(F, a, b, 8);
    CHECK(e1.mat != e3.mat);
    CHECK(e3.check_intertwiner().ok());
}

TEST_CASE("negative controls: grade mismatch and non-intertwiners are rejected") {
    SL2Family& F = family_r2();
    ModuleRep V = F.simple_module(Rational(1, 2));
    CHECK_THROWS_AS(make_morphism(V, unit_object(F), SparseMatrix(1, 2, F.modulus())),
                    GradeMismatch);

    // a strictly upper triangular map on a simple module cannot commute with
    // the whole action
    SparseMatrix raise(2, 2, F.modulus());
    raise.set(0, 1, CycNumber::one(F.modulus()));
    Morphism bad = make_morphism(V, V, raise);
    CheckReport rep = bad.check_intertwiner(false);
    CHECK_FALSE(rep.ok());
    bool witnessed = false;
    for (const auto& it : rep.items)
        if (!it.pass && !it.witness.empty()) witnessed = true;
    CHECK(witnessed);
}
