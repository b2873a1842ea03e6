#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfg/hopf.hpp"
#include "hopfg/modcat.hpp"

namespace hopfg {

/*
 * Parameters of the restricted quantum sl2 family at a 2r-th root of unity.
 * The grade group is Q/2Z; alpha is the preferred weight parameter and fixes
 * the cyclotomic modulus N = 2 r s, where s is the denominator of alpha, so
 * that every scalar q^{p/s} lands in Q(zeta_N): q = zeta_N^s and
 * q^{1/s} = zeta_N.
 */
struct SL2Params {
    long r = 2;
    Rational alpha;
    long s = 1;
    long N = 4;

    static SL2Params make(long r, const Rational& alpha);
};

/*
 * The family {H_gamma} itself, gamma in Q/2Z. Each graded piece has dimension
 * r^3 with PBW basis E^m F^n K^l (0 <= m, n, l < r), flat index
 * (m r + n) r + l. Grade enters through the central relation
 * K^r = q^{r gamma}; E^r = F^r = 0 in every grade.
 */
class SL2Family final : public HopfGFamily {
public:
    explicit SL2Family(SL2Params p);

    const SL2Params& params() const { return p_; }

    Grade unit_grade() const override;
    Grade compose(const Grade& a, const Grade& b) const override;
    Grade inverse(const Grade& a) const override;
    long modulus() const override { return p_.N; }
    std::string describe() const override;
    std::optional<std::pair<int, CycNumber>> integral_normalization() const override;

    // Grade of weight x: the class of x mod 2, reduced into [0, 2).
    Grade grade_of(const Rational& x) const;
    Rational rep(const Grade& g) const;

    int index_of(int m, int n, int l) const { return (m * (int)p_.r + n) * (int)p_.r + l; }

    // Exact scalars: q^x, the bracket {x} = q^x - q^{-x} and the quantum
    // number [x] = {x}/{1}.
    CycNumber qp(const Rational& x) const;
    CycNumber brace(const Rational& x) const;
    CycNumber qnum(const Rational& x) const;

    // Casimir element of H_gamma, in both normal orderings; check_casimir
    // certifies the two orderings agree and the element is central.
    Vec casimir(const Grade& g) const;
    CheckReport check_casimir(const Grade& g) const;
    // Power identities against a symmetrised right integral form on H_gamma:
    // the telescoping product, the span membership of Omega^k - E^k F^k and
    // the evaluation of integrals on Casimir powers.
    CheckReport casimir_power_identities(const Grade& g, const Vec& mu_tilde) const;

    // Simple module V_a of dimension r for non-integral weight a, living in
    // grade of (a + r - 1). Throws AlphaIntegralSingular for integral a.
    ModuleRep simple_module(const Rational& weight) const;
    CheckReport check_simple_module(const Rational& weight) const;
    Grade module_grade(const Rational& weight) const;
    // Casimir scalar on V_a.
    CycNumber w_scalar(const Rational& weight) const;

    // Joint action map of H_gamma on the r simples V_{a+2j} of one grade is
    // bijective (dimension count r * r^2 = r^3 and full rank).
    CheckReport density_decomposition_check(const Rational& weight) const;

    // Polynomial in the Casimir acting as identity on V_a and as zero on the
    // other simples V_{a+2k} of the same grade. Throws DegenerateEigenvalues
    // if the Casimir scalars do not separate the simples.
    Vec casimir_projector(const Rational& weight) const;

    struct ModifiedDimension {
        CycNumber mu_L;          // mu-tilde evaluated on the projector
        CycNumber d0;            // normalization constant
        CycNumber via_integral;  // mu_L / r
        CycNumber via_formula;   // d0 * r {a} / {r a}
    };
    // Both computations of the modified dimension of V_a; requires the
    // symmetrised right integral form on the grade of V_a. Verifies the two
    // agree and that the product form of the denominator matches.
    ModifiedDimension modified_dimension(const Rational& weight, const Vec& mu_tilde) const;

protected:
    GradedAlgebra build_algebra(const Grade& a) const override;
    SparseMatrix build_coproduct(const Grade& a, const Grade& b) const override;
    Vec build_counit() const override;
    SparseMatrix build_antipode(const Grade& a) const override;
    Vec build_pivot(const Grade& a) const override;

private:
    // Normal ordering scratch monomial E^m F^n K^l with unreduced K exponent.
    struct Mono {
        int m, n;
        long l;
        bool operator<(const Mono& o) const {
            if (m != o.m) return m < o.m;
            if (n != o.n) return n < o.n;
            return l < o.l;
        }
    };
    using Elem = std::map<Mono, CycNumber>;

    const Elem& fe_table(int n, int m) const;       // F^n E^m normal ordered
    Elem mono_mul(const Mono& x, const Mono& y) const;
    Vec reduce(const Elem& e, const Rational& gamma) const;
    void weight_guard(const Rational& weight) const;

    SL2Params p_;
    mutable std::mutex fe_mutex_;
    mutable std::map<std::pair<int, int>, Elem> fe_memo_;
};

}  // namespace hopfg
