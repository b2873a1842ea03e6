#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfg/errors.hpp>
#include <hopfg/integrals.hpp>
#include <hopfg/uqsl2.hpp>

using namespace hopfg;

namespace {

SL2Family& family_r2() {
    static SL2Family F(SL2Params::make(2, Rational(1, 2)));
    return F;
}

SL2Family& family_r3() {
    static SL2Family F(SL2Params::make(3, Rational(1, 2)));
    return F;
}

// Symmetrised right integral on a single grade, solved on demand.
Vec sym_form(const SL2Family& F, const Grade& g) {
    Vec mu = right_integral(F, g);
    return F.algebra(g).left_mult(F.pivot(g)).apply_row(mu);
}

// zeta_8 + zeta_8^{-1}, the exact square root of 2 in Q(zeta_8).
CycNumber sqrt2() {
    return CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7);
}

}  // namespace

TEST_CASE("casimir element: orderings agree and it is central") {
    SL2Family& F2 = family_r2();
    CHECK(F2.check_casimir(F2.grade_of(Rational(0))).ok());
    CHECK(F2.check_casimir(F2.grade_of(Rational(1, 2))).ok());
    SL2Family& F3 = family_r3();
    CHECK(F3.check_casimir(F3.grade_of(Rational(1, 2))).ok());
}

TEST_CASE("casimir power identities against the solved integral") {
    SL2Family& F2 = family_r2();
    Grade g2 = F2.module_grade(Rational(1, 2));
    CheckReport rep2 = F2.casimir_power_identities(g2, sym_form(F2, g2));
    CHECK(rep2.ok());

    SL2Family& F3 = family_r3();
    Grade g3 = F3.module_grade(Rational(1, 2));
    CheckReport rep3 = F3.casimir_power_identities(g3, sym_form(F3, g3));
    CHECK(rep3.ok());
    // the top power evaluates to the normalization and the lower ones vanish
    bool saw_top = false, saw_vanish = false;
    for (const auto& it : rep3.items) {
        if (it.name == "casimir.integral-top") saw_top = true;
        if (it.name == "casimir.integral-vanishing") saw_vanish = true;
    }
    CHECK(saw_top);
    CHECK(saw_vanish);
}

TEST_CASE("simple modules pass the relation suite at both ranks") {
    SL2Family& F2 = family_r2();
    CHECK(F2.check_simple_module(Rational(1, 2)).ok());
    CHECK(F2.check_simple_module(Rational(5, 2)).ok());
    CHECK(F2.module_grade(Rational(1, 2)) == F2.grade_of(Rational(3, 2)));

    // highest weight vector sees K as q^{weight + r - 1}
    ModuleRep V = F2.simple_module(Rational(1, 2));
    const Matrix& mk = V.action(F2.index_of(0, 0, 1));
    CHECK(mk.at(0, 0) == F2.qp(Rational(3, 2)));
    CHECK(mk.at(1, 1) == F2.qp(Rational(-1, 2)));

    SL2Family& F3 = family_r3();
    CHECK(F3.check_simple_module(Rational(1, 2)).ok());
}

TEST_CASE("casimir scalars at r=2 take the frozen values") {
    SL2Family& F = family_r2();
    CycNumber quarter = CycNumber(Rational(1, 4), F.modulus());
    CHECK(F.w_scalar(Rational(1, 2)) == sqrt2() * quarter);
    CHECK(F.w_scalar(Rational(5, 2)) == sqrt2() * quarter * CycNumber(-1, F.modulus()));
    CHECK(F.w_scalar(Rational(1, 2)) != F.w_scalar(Rational(5, 2)));
}

TEST_CASE("joint action on the simples of one grade is bijective") {
    CHECK(family_r2().density_decomposition_check(Rational(1, 2)).ok());
    CHECK(family_r3().density_decomposition_check(Rational(1, 2)).ok());
}

TEST_CASE("casimir projector is idempotent and separates the simples") {
    SL2Family& F = family_r2();
    Grade g = F.module_grade(Rational(1, 2));
    const GradedAlgebra& A = F.algebra(g);
    Vec L = F.casimir_projector(Rational(1, 2));
    CHECK(vec_eq(A.multiply(L, L), L));
    ModuleRep V = F.simple_module(Rational(1, 2));
    ModuleRep V2 = F.simple_module(Rational(5, 2));
    CHECK(V.action_of(L) == Matrix::identity(2, F.modulus()));
    CHECK(V2.action_of(L).is_zero());

    SL2Family& F3 = family_r3();
    Vec L3 = F3.casimir_projector(Rational(1, 2));
    CHECK(vec_eq(F3.algebra(F3.module_grade(Rational(1, 2))).multiply(L3, L3), L3));
    CHECK(F3.simple_module(Rational(1, 2)).action_of(L3) == Matrix::identity(3, F3.modulus()));
    CHECK(F3.simple_module(Rational(5, 2)).action_of(L3).is_zero());
    CHECK(F3.simple_module(Rational(9, 2)).action_of(L3).is_zero());
}

TEST_CASE("bracket product squares to a sign times r squared") {
    SL2Family& F2 = family_r2();
    CHECK(F2.brace(Rational(1)) * F2.brace(Rational(1)) == CycNumber(-4, F2.modulus()));
    SL2Family& F3 = family_r3();
    CycNumber prod = CycNumber::one(F3.modulus());
    for (int k = 1; k < 3; ++k) prod = prod * F3.brace(Rational(k)) * F3.brace(Rational(k));
    CHECK(prod == CycNumber(9, F3.modulus()));
}

TEST_CASE("modified dimension: both evaluations agree and match frozen values") {
    SL2Family& F = family_r2();
    Grade g = F.module_grade(Rational(1, 2));
    auto md = F.modified_dimension(Rational(1, 2), sym_form(F, g));
    CycNumber half = CycNumber(Rational(1, 2), F.modulus());
    CHECK(md.d0 == half);
    CHECK(md.mu_L == sqrt2());
    CHECK(md.via_integral == sqrt2() * half);
    CHECK(md.via_formula == md.via_integral);

    SL2Family& F3 = family_r3();
    Grade g3 = F3.module_grade(Rational(1, 2));
    auto md3 = F3.modified_dimension(Rational(1, 2), sym_form(F3, g3));
    CHECK(md3.via_integral == md3.via_formula);
    CHECK_FALSE(md3.mu_L.is_zero());
    // odd rank keeps the plus sign on the normalization constant
    CycNumber d0_expect = F3.brace(Rational(1));
    for (int i = 1; i < 4; ++i) d0_expect = d0_expect * F3.brace(Rational(1));
    d0_expect = d0_expect * CycNumber(Rational(1, 27), F3.modulus());
    CHECK(md3.d0 == d0_expect);
}

TEST_CASE("integral weights and bad parameters are rejected") {
    SL2Family& F = family_r2();
    CHECK_THROWS_AS(F.simple_module(Rational(1)), AlphaIntegralSingular);
    CHECK_THROWS_AS(F.casimir_projector(Rational(1)), AlphaIntegralSingular);
    CHECK_THROWS_AS(F.modified_dimension(Rational(1), zero_vec(8, F.modulus())),
                    AlphaIntegralSingular);
    CHECK_THROWS_AS(SL2Params::make(1, Rational(1, 2)), SchemaError);
}

TEST_CASE("grades reduce into the fundamental window") {
    SL2Family& F = family_r2();
    CHECK(F.grade_of(Rational(5, 2)) == F.grade_of(Rational(1, 2)));
    CHECK(F.grade_of(Rational(-1, 2)) == F.grade_of(Rational(3, 2)));
    CHECK(F.rep(F.grade_of(Rational(-1, 2))) == Rational(3, 2));
    CHECK(F.compose(F.grade_of(Rational(3, 2)), F.grade_of(Rational(1))) ==
          F.grade_of(Rational(1, 2)));
    CHECK(F.inverse(F.grade_of(Rational(1, 2))) == F.grade_of(Rational(3, 2)));
}
