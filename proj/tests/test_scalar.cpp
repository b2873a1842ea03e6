#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopfg/cyclotomic.hpp"
#include "hopfg/errors.hpp"
#include "test_util.hpp"

using namespace hopfg;
using testutil::rand_cyc;

namespace {
std::vector<Int> ipoly(std::initializer_list<long> cs) {
    std::vector<Int> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}
}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("10/4") == Rational(5, 2));
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(rational_str(Rational(5, 2)) == "5/2");
    CHECK(rational_str(Rational(-3)) == "-3");
    CHECK_THROWS_AS(parse_rational(""), SchemaError);
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("x"), SchemaError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), SchemaError);
}

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(18) == 6);
    CHECK(euler_phi(105) == 48);

    CHECK(cyclotomic_poly(1) == ipoly({-1, 1}));
    CHECK(cyclotomic_poly(2) == ipoly({1, 1}));
    CHECK(cyclotomic_poly(4) == ipoly({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == ipoly({1, -1, 1}));
    CHECK(cyclotomic_poly(8) == ipoly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(9) == ipoly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_poly(12) == ipoly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(18) == ipoly({1, 0, 0, -1, 0, 0, 1}));
    // First index where a cyclotomic coefficient leaves {-1,0,1}.
    CHECK(cyclotomic_poly(105)[7] == Int(-2));
    CHECK(cyclotomic_poly(105).size() == 49);
}

TEST_CASE("roots of unity reduce into the power basis") {
    CHECK(CycNumber::root_of_unity(4, 2) == CycNumber(-1, 4));
    CHECK(CycNumber::root_of_unity(8, 4) == CycNumber(-1, 8));
    CHECK(CycNumber::root_of_unity(8, 7) == -CycNumber::root_of_unity(8, 3));
    CHECK(CycNumber::root_of_unity(12, 4) ==
          CycNumber::root_of_unity(12, 2) - CycNumber::one(12));
    CHECK(CycNumber::root_of_unity(12, 12) == CycNumber::one(12));
    CHECK(CycNumber::root_of_unity(12, -1) == CycNumber::root_of_unity(12, 11));
    for (long N : {2L, 4L, 8L, 9L, 12L, 18L}) {
        CycNumber z = CycNumber::root_of_unity(N, 1);
        CHECK(z.pow(N) == CycNumber::one(N));
        CHECK(z.pow(N / 2 * 2) == CycNumber::root_of_unity(N, N / 2 * 2));
    }
}

TEST_CASE("inverse against the extended Euclid witness") {
    CycNumber z4 = CycNumber::root_of_unity(4, 1);
    CycNumber x = CycNumber::one(4) + z4;
    CycNumber expected = (CycNumber::one(4) - z4) * Rational(1, 2);
    CHECK(x.inv() == expected);
    CHECK(x * x.inv() == CycNumber::one(4));
    CHECK_THROWS_AS(CycNumber::zero(8).inv(), DivisionByZero);

    // 1 + zeta_8 + zeta_8^2 is a unit; certify the defining property only.
    CycNumber y = CycNumber::one(8) + CycNumber::root_of_unity(8, 1) +
                  CycNumber::root_of_unity(8, 2);
    CHECK(y * y.inv() == CycNumber::one(8));
}

TEST_CASE("q powers, braces and brackets") {
    // r = 2: q = zeta_4, half-integer powers live at modulus 8.
    CHECK(qpow(2, Rational(1, 2)) == CycNumber::root_of_unity(8, 1));
    CHECK(qpow(2, Rational(1, 2)).modulus() == 8);
    CHECK(qpow(2, Rational(1), 8) == CycNumber::root_of_unity(8, 2));
    CHECK(qpow(2, Rational(-1, 2), 8) == CycNumber::root_of_unity(8, 7));
    CHECK_THROWS_AS(qpow(2, Rational(1, 3), 8), ModulusMismatch);

    CycNumber brace1 = qbrace(2, Rational(1), 8);
    CHECK(brace1 == CycNumber::root_of_unity(8, 2) * Rational(2));
    Rational sq;
    CHECK((brace1 * brace1).is_rational(&sq));
    CHECK(sq == -4);

    // r = 3: [2] = q + q^{-1} = 1 and [3] = 0 at q = exp(i*pi/3).
    CHECK(qint(3, Rational(2), 12) == CycNumber::one(12));
    CHECK(qint(3, Rational(3), 12) == CycNumber::zero(12));
    CHECK(qbrace(3, Rational(3), 12) == CycNumber::zero(12));
    CHECK(qbrace(3, Rational(0), 12) == CycNumber::zero(12));

    QPower p{2, Rational(3, 2)};
    CHECK(p.modulus() == 8);
    CHECK(p.value() == CycNumber::root_of_unity(8, 3));
}

TEST_CASE("embedding and modulus discipline") {
    CycNumber z4 = CycNumber::root_of_unity(4, 1);
    CHECK(z4.embed(8) == CycNumber::root_of_unity(8, 2));
    CHECK(z4.embed(12) == CycNumber::root_of_unity(12, 3));
    CHECK(CycNumber(Rational(1, 2), 1).embed(12) == CycNumber(Rational(1, 2), 12));
    CHECK_THROWS_AS(z4.embed(6), ModulusMismatch);
    CHECK_THROWS_AS(z4 + CycNumber::one(8), ModulusMismatch);
    CHECK_THROWS_AS(z4 * CycNumber::one(12), ModulusMismatch);

    // Embedding is a ring map.
    std::mt19937_64 rng(0xE14BEDull);
    for (int i = 0; i < 50; ++i) {
        CycNumber a = rand_cyc(rng, 6), b = rand_cyc(rng, 6);
        CHECK((a * b).embed(18) == a.embed(18) * b.embed(18));
        CHECK((a + b).embed(18) == a.embed(18) + b.embed(18));
    }
}

TEST_CASE("conjugation") {
    CHECK(CycNumber::root_of_unity(8, 1).conj() == CycNumber::root_of_unity(8, 7));
    CHECK(CycNumber::root_of_unity(12, 5).conj() == CycNumber::root_of_unity(12, 7));
    CHECK(CycNumber(Rational(7, 3), 8).conj() == CycNumber(Rational(7, 3), 8));
}

TEST_CASE("field axioms property suite") {
    // >= 1000 exact scalar identities across two moduli with fixed seeds.
    int cases = 0;
    for (long N : {8L, 12L}) {
        std::mt19937_64 rng(N == 8 ? 0xC0FFEEull : 0xBEEFull);
        for (int round = 0; round < 100; ++round) {
            CycNumber a = rand_cyc(rng, N), b = rand_cyc(rng, N), c = rand_cyc(rng, N);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == CycNumber::zero(N));
            CHECK(a * CycNumber::one(N) == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(a.pow(3) == a * a * a);
            cases += 9;
            if (!a.is_zero()) {
                CHECK(a * a.inv() == CycNumber::one(N));
                CHECK(a.pow(-2) == (a * a).inv());
                cases += 2;
            }
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("decimal rendering stays display-only but sane") {
    std::complex<double> z8 = CycNumber::root_of_unity(8, 1).to_complex();
    CHECK(std::abs(z8.real() - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(z8.imag() - std::sqrt(0.5)) < 1e-12);
    std::complex<double> half = CycNumber(Rational(1, 2), 12).to_complex();
    CHECK(std::abs(half.real() - 0.5) < 1e-15);
    CHECK(CycNumber::zero(8).str() == "0");
    CHECK(!CycNumber::root_of_unity(8, 3).str().empty());
}
