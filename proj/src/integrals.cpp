#include "hopfg/integrals.hpp"

#include <utility>

#include "hopfg/errors.hpp"

namespace hopfg {

namespace {

// Homogeneous stage: the instance of the defining relation against the unit
// grade couples only the form at grade a. Returns the one dimensional
// solution line, unnormalized.
Vec integral_direction(const HopfGFamily& F, const Grade& a) {
    const Grade e = F.unit_grade();
    const GradedAlgebra& A = F.algebra(a);
    const GradedAlgebra& E = F.algebra(e);
    const int d = A.dim, d1 = E.dim;
    const SparseMatrix& cop = F.coproduct(a, e);
    Matrix sys(d * d1, d, A.N);
    for (int x = 0; x < d; ++x)
        for (const auto& [row, c] : cop.col(x)) {
            int i = row / d1, k = row % d1;
            sys.at(x * d1 + k, i) += c;
        }
    for (int x = 0; x < d; ++x)
        for (int k = 0; k < d1; ++k) sys.at(x * d1 + k, x) -= E.unit[k];
    Matrix ns = nullspace(sys);
    if (ns.cols() != 1)
        throw IntegralSpaceDimension("integral space at grade " + a.str() + " has dimension " +
                                     std::to_string(ns.cols()) + ", expected 1");
    Vec dir(d, CycNumber::zero(A.N));
    for (int i = 0; i < d; ++i) dir[i] = ns.at(i, 0);
    return dir;
}

Vec normalized_unit_integral(const HopfGFamily& F) {
    const Grade e = F.unit_grade();
    Vec dir = integral_direction(F, e);
    int idx = -1;
    CycNumber val = CycNumber::one(F.modulus());
    if (auto hook = F.integral_normalization()) {
        idx = hook->first;
        val = hook->second;
    } else {
        for (int i = 0; i < (int)dir.size(); ++i)
            if (!dir[i].is_zero()) {
                idx = i;
                break;
            }
    }
    if (idx < 0 || idx >= (int)dir.size() || dir[idx].is_zero())
        throw InconsistentNormalization("unit-grade integral vanishes at the normalization index");
    return vec_scale(dir, val / dir[idx]);
}

// Cross-grade stage: one scalar must make the (a, a^{-1}) instance match the
// normalized unit-grade form on every equation.
Vec scale_to_unit(const HopfGFamily& F, const Grade& a, const Vec& dir, const Vec& mu1) {
    const Grade ai = F.inverse(a);
    const Grade e = F.unit_grade();
    const GradedAlgebra& E = F.algebra(e);
    const GradedAlgebra& AI = F.algebra(ai);
    const int d1 = E.dim, di = AI.dim;
    const SparseMatrix& cop = F.coproduct(a, ai);
    bool have = false;
    CycNumber scale = CycNumber::zero(F.modulus());
    for (int x = 0; x < d1; ++x) {
        SparseVec t;
        t.ent = cop.col(x);
        Vec lhs = contract_first(t, dir, di, F.modulus());
        for (int k = 0; k < di; ++k) {
            CycNumber rhs = mu1[x] * AI.unit[k];
            if (lhs[k].is_zero()) {
                if (!rhs.is_zero())
                    throw InconsistentNormalization("cross-grade instance unsolvable at grade " +
                                                    a.str());
                continue;
            }
            CycNumber c = rhs / lhs[k];
            if (!have) {
                scale = c;
                have = true;
            } else if (scale != c) {
                throw InconsistentNormalization("cross-grade instance needs two scalars at grade " +
                                                a.str());
            }
        }
    }
    if (!have || scale.is_zero())
        throw InconsistentNormalization("cross-grade instance degenerates at grade " + a.str());
    return vec_scale(dir, scale);
}

std::string pair_label(const Grade& a, const Grade& b) {
    return "(" + a.str() + "," + b.str() + ")";
}

}  // namespace

const Vec& GIntegralFamily::at(const Grade& g) const {
    auto it = forms.find(g);
    if (it == forms.end())
        throw WindowIncomplete("integral family has no form at grade " + g.str());
    return it->second;
}

const Vec& Comodulus::at(const Grade& g) const {
    auto it = elements.find(g);
    if (it == elements.end())
        throw WindowIncomplete("comodulus has no element at grade " + g.str());
    return it->second;
}

Vec right_integral(const HopfGFamily& F, const Grade& a) {
    Vec mu1 = normalized_unit_integral(F);
    if (a == F.unit_grade()) return mu1;
    return scale_to_unit(F, a, integral_direction(F, a), mu1);
}

GIntegralFamily right_integral_family(const HopfGFamily& F, const std::vector<Grade>& window) {
    GIntegralFamily fam;
    fam.left = false;
    Vec mu1 = normalized_unit_integral(F);
    if (auto hook = F.integral_normalization())
        fam.normalization = "instance hook: basis index " + std::to_string(hook->first);
    else
        fam.normalization = "first nonzero coordinate of the unit-grade line set to 1";
    for (const Grade& a : window) {
        if (a == F.unit_grade())
            fam.forms[a] = mu1;
        else
            fam.forms[a] = scale_to_unit(F, a, integral_direction(F, a), mu1);
    }
    return fam;
}

Vec left_integral(const HopfGFamily& F, const Grade& a) {
    Vec mu_inv = right_integral(F, F.inverse(a));
    const SparseMatrix& S = F.antipode(a);
    const int d = F.dim(a);
    Vec out = zero_vec(d, F.modulus());
    for (int i = 0; i < d; ++i)
        for (const auto& [row, c] : S.col(i)) out[i] += mu_inv[row] * c;
    return out;
}

GIntegralFamily left_integral_family(const HopfGFamily& F, const std::vector<Grade>& window) {
    // Compute the right family over the closure of the window under inverse
    // so each left form reuses one consistent normalization.
    std::vector<Grade> closed = window;
    for (const Grade& a : window) {
        Grade ai = F.inverse(a);
        bool seen = false;
        for (const Grade& b : closed) seen = seen || b == ai;
        if (!seen) closed.push_back(ai);
    }
    GIntegralFamily right = right_integral_family(F, closed);
    GIntegralFamily fam;
    fam.left = true;
    fam.normalization = right.normalization + "; left forms via the antipode";
    for (const Grade& a : window) {
        const Vec& mu_inv = right.at(F.inverse(a));
        const SparseMatrix& S = F.antipode(a);
        const int d = F.dim(a);
        Vec out = zero_vec(d, F.modulus());
        for (int i = 0; i < d; ++i)
            for (const auto& [row, c] : S.col(i)) out[i] += mu_inv[row] * c;
        fam.forms[a] = std::move(out);
    }
    return fam;
}

GIntegralFamily symmetrise(const HopfGFamily& F, const GIntegralFamily& fam) {
    GIntegralFamily out;
    out.left = fam.left;
    out.normalization = fam.normalization + "; symmetrised through the pivot";
    for (const auto& [a, mu] : fam.forms) {
        const GradedAlgebra& A = F.algebra(a);
        Vec twist = fam.left ? F.pivot_inv(a) : F.pivot(a);
        out.forms[a] = A.left_mult(twist).apply_row(mu);
    }
    return out;
}

CheckReport check_right_integral(const HopfGFamily& F, const GIntegralFamily& fam,
                                 const std::vector<Grade>& window) {
    CheckReport rep;
    for (const Grade& a : window)
        for (const Grade& b : window) {
            Grade ab = F.compose(a, b);
            if (fam.forms.find(ab) == fam.forms.end()) continue;
            const Vec& mu_a = fam.at(a);
            const Vec& mu_ab = fam.at(ab);
            const GradedAlgebra& B = F.algebra(b);
            const SparseMatrix& cop = F.coproduct(a, b);
            bool ok = true;
            std::string witness;
            for (int x = 0; x < F.dim(ab) && ok; ++x) {
                SparseVec t;
                t.ent = cop.col(x);
                Vec lhs = contract_first(t, mu_a, B.dim, F.modulus());
                if (!vec_eq(lhs, vec_scale(B.unit, mu_ab[x]))) {
                    ok = false;
                    witness = "x = " + F.algebra(ab).label(x);
                }
            }
            rep.add("integral.right-relation", pair_label(a, b), ok, witness);
        }
    return rep;
}

CheckReport check_left_integral(const HopfGFamily& F, const GIntegralFamily& fam,
                                const std::vector<Grade>& window) {
    CheckReport rep;
    for (const Grade& a : window)
        for (const Grade& b : window) {
            Grade ab = F.compose(a, b);
            if (fam.forms.find(ab) == fam.forms.end()) continue;
            const Vec& mu_b = fam.at(b);
            const Vec& mu_ab = fam.at(ab);
            const GradedAlgebra& A = F.algebra(a);
            const SparseMatrix& cop = F.coproduct(a, b);
            bool ok = true;
            std::string witness;
            for (int x = 0; x < F.dim(ab) && ok; ++x) {
                SparseVec t;
                t.ent = cop.col(x);
                Vec lhs = contract_second(t, mu_b, A.dim, F.modulus());
                if (!vec_eq(lhs, vec_scale(A.unit, mu_ab[x]))) {
                    ok = false;
                    witness = "x = " + F.algebra(ab).label(x);
                }
            }
            rep.add("integral.left-relation", pair_label(a, b), ok, witness);
        }
    return rep;
}

CheckReport check_symmetrised_relation(const HopfGFamily& F, const GIntegralFamily& sym,
                                       const std::vector<Grade>& window) {
    CheckReport rep;
    for (const Grade& a : window)
        for (const Grade& b : window) {
            Grade ab = F.compose(a, b);
            if (sym.forms.find(ab) == sym.forms.end()) continue;
            const Vec& mt_a = sym.at(a);
            const Vec& mt_ab = sym.at(ab);
            const GradedAlgebra& B = F.algebra(b);
            Matrix lg = B.left_mult(F.pivot(b));
            const SparseMatrix& cop = F.coproduct(a, b);
            bool ok = true;
            std::string witness;
            for (int x = 0; x < F.dim(ab) && ok; ++x) {
                SparseVec t;
                t.ent = cop.col(x);
                Vec lhs = lg.apply(contract_first(t, mt_a, B.dim, F.modulus()));
                if (!vec_eq(lhs, vec_scale(B.unit, mt_ab[x]))) {
                    ok = false;
                    witness = "x = " + F.algebra(ab).label(x);
                }
            }
            rep.add("integral.symmetrised-relation", pair_label(a, b), ok, witness);
        }
    return rep;
}

Vec right_cointegral(const HopfGFamily& F) {
    const GradedAlgebra& E = F.algebra(F.unit_grade());
    const Vec& eps = F.counit();
    const int d = E.dim;
    Matrix sys(d * d, d, E.N);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            for (const auto& [k, c] : E.product(i, j).ent) sys.at(j * d + k, i) += c;
            // minus eps(b_j) c_i on coordinate i
            sys.at(j * d + i, i) -= eps[j];
        }
    Matrix ns = nullspace(sys);
    if (ns.cols() != 1)
        throw IntegralSpaceDimension("right cointegral space has dimension " +
                                     std::to_string(ns.cols()) + ", expected 1");
    Vec out(d, CycNumber::zero(E.N));
    for (int i = 0; i < d; ++i) out[i] = ns.at(i, 0);
    return out;
}

Vec left_cointegral(const HopfGFamily& F) {
    const GradedAlgebra& E = F.algebra(F.unit_grade());
    const Vec& eps = F.counit();
    const int d = E.dim;
    Matrix sys(d * d, d, E.N);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            for (const auto& [k, c] : E.product(j, i).ent) sys.at(j * d + k, i) += c;
            sys.at(j * d + i, i) -= eps[j];
        }
    Matrix ns = nullspace(sys);
    if (ns.cols() != 1)
        throw IntegralSpaceDimension("left cointegral space has dimension " +
                                     std::to_string(ns.cols()) + ", expected 1");
    Vec out(d, CycNumber::zero(E.N));
    for (int i = 0; i < d; ++i) out[i] = ns.at(i, 0);
    return out;
}

bool is_unimodular(const HopfGFamily& F) {
    Vec cr = right_cointegral(F);
    Vec cl = left_cointegral(F);
    // Same line: cl = s * cr for the scalar fixed by any nonzero coordinate.
    int pivot = -1;
    for (int i = 0; i < (int)cr.size(); ++i)
        if (!cr[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;
    if (cl[pivot].is_zero()) return false;
    CycNumber s = cl[pivot] / cr[pivot];
    return vec_eq(cl, vec_scale(cr, s));
}

CheckReport check_symmetric_nondegenerate(const HopfGFamily& F, const Vec& form, const Grade& a) {
    if (!is_unimodular(F))
        throw NotUnimodular("symmetrised integral theory requires unimodularity in degree 1");
    CheckReport rep;
    const GradedAlgebra& A = F.algebra(a);
    const int d = A.dim;
    Matrix gram(d, d, A.N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            CycNumber v = CycNumber::zero(A.N);
            for (const auto& [k, c] : A.product(i, j).ent) v += form[k] * c;
            gram.at(i, j) = v;
        }
    bool symmetric = true;
    std::string witness;
    for (int i = 0; i < d && symmetric; ++i)
        for (int j = i + 1; j < d && symmetric; ++j)
            if (gram.at(i, j) != gram.at(j, i)) {
                symmetric = false;
                witness = "(" + A.label(i) + ", " + A.label(j) + ")";
            }
    rep.add("integral.symmetric", "(" + a.str() + ")", symmetric, witness);
    int rk = rank(gram);
    rep.add("integral.nondegenerate", "(" + a.str() + ")", rk == d,
            rk == d ? "" : "Gram rank " + std::to_string(rk) + " of " + std::to_string(d));
    return rep;
}

Comodulus comodulus(const HopfGFamily& F, const GIntegralFamily& right,
                    const std::vector<Grade>& window) {
    Comodulus out;
    const Grade e = F.unit_grade();
    const Vec& mu1 = right.at(e);
    for (const Grade& a : window) {
        const Vec& mu_a = right.at(a);
        const GradedAlgebra& A = F.algebra(a);
        const SparseMatrix& cop = F.coproduct(a, e);
        int star = -1;
        for (int x = 0; x < A.dim; ++x)
            if (!mu_a[x].is_zero()) {
                star = x;
                break;
            }
        if (star < 0)
            throw NoNonvanishingWitness("right integral vanishes identically at grade " + a.str());
        SparseVec t;
        t.ent = cop.col(star);
        Vec elem = vec_scale(contract_second(t, mu1, A.dim, F.modulus()), mu_a[star].inv());
        out.elements[a] = std::move(elem);
    }
    return out;
}

CheckReport check_comodulus(const HopfGFamily& F, const GIntegralFamily& right, const Comodulus& com,
                            const std::vector<Grade>& window) {
    CheckReport rep;
    // Defining relation on every window pair.
    for (const Grade& a : window)
        for (const Grade& b : window) {
            Grade ab = F.compose(a, b);
            if (right.forms.find(ab) == right.forms.end()) continue;
            if (com.elements.find(a) == com.elements.end()) continue;
            const Vec& mu_b = right.at(b);
            const Vec& mu_ab = right.at(ab);
            const Vec& ca = com.at(a);
            const GradedAlgebra& A = F.algebra(a);
            const SparseMatrix& cop = F.coproduct(a, b);
            bool ok = true;
            std::string witness;
            for (int x = 0; x < F.dim(ab) && ok; ++x) {
                SparseVec t;
                t.ent = cop.col(x);
                Vec lhs = contract_second(t, mu_b, A.dim, F.modulus());
                if (!vec_eq(lhs, vec_scale(ca, mu_ab[x]))) {
                    ok = false;
                    witness = "x = " + F.algebra(ab).label(x);
                }
            }
            rep.add("comodulus.defining-relation", pair_label(a, b), ok, witness);
        }
    // Grouplikeness and the counit value.
    for (const Grade& a : window)
        for (const Grade& b : window) {
            Grade ab = F.compose(a, b);
            if (com.elements.find(ab) == com.elements.end()) continue;
            SparseVec lhs = sweedler(F, a, b, com.at(ab));
            Vec rhs = kron_vec(com.at(a), com.at(b));
            rep.add("comodulus.grouplike", pair_label(a, b),
                    vec_eq(lhs.to_dense(F.dim(a) * F.dim(b), F.modulus()), rhs), "");
        }
    if (com.elements.find(F.unit_grade()) != com.elements.end()) {
        CycNumber eps_val = dot(F.counit(), com.at(F.unit_grade()));
        rep.add("comodulus.counit", "(unit grade)", eps_val == CycNumber::one(F.modulus()),
                eps_val == CycNumber::one(F.modulus()) ? "" : "eps(a_1) = " + eps_val.str());
    }
    // Antipode evaluation identity mu_{a^{-1}}(S_a(x)) = mu_a(com_a x).
    for (const Grade& a : window) {
        Grade ai = F.inverse(a);
        if (right.forms.find(ai) == right.forms.end()) continue;
        if (com.elements.find(a) == com.elements.end()) continue;
        const Vec& mu_ai = right.at(ai);
        const Vec& mu_a = right.at(a);
        const GradedAlgebra& A = F.algebra(a);
        const SparseMatrix& S = F.antipode(a);
        Vec lhs = zero_vec(A.dim, F.modulus());
        for (int i = 0; i < A.dim; ++i)
            for (const auto& [row, c] : S.col(i)) lhs[i] += mu_ai[row] * c;
        Vec rhs = A.left_mult(com.at(a)).apply_row(mu_a);
        rep.add("comodulus.antipode-evaluation", "(" + a.str() + ")", vec_eq(lhs, rhs), "");
    }
    return rep;
}

CheckReport check_unibalanced(const HopfGFamily& F, const GIntegralFamily& sym_right,
                              const GIntegralFamily& sym_left, const Comodulus& com,
                              const std::vector<Grade>& window) {
    CheckReport rep;
    for (const Grade& a : window) {
        const GradedAlgebra& A = F.algebra(a);
        const Vec& g = F.pivot(a);
        Vec g2 = A.multiply(g, g);
        bool sq = vec_eq(com.at(a), g2);
        rep.add("unibalanced.comodulus-is-pivot-square", "(" + a.str() + ")", sq, "");
        bool forms = vec_eq(sym_right.at(a), sym_left.at(a));
        rep.add("unibalanced.symmetrised-forms-agree", "(" + a.str() + ")", forms, "");
    }
    return rep;
}

}  // namespace hopfg
