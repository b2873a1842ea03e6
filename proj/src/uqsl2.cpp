#include "hopfg/uqsl2.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "hopfg/errors.hpp"

namespace hopfg {

namespace {

// Representative of x mod 2 in [0, 2).
Rational mod2(const Rational& x) {
    Rational h = x / 2;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    Rational out = x - Rational(2) * Rational(fl);
    out.canonicalize();
    return out;
}

std::string power_label(const char* base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

Matrix mat_pow(const Matrix& A, long k) {
    Matrix out = Matrix::identity(A.rows(), A.modulus());
    for (long t = 0; t < k; ++t) out = out * A;
    return out;
}

}  // namespace

SL2Params SL2Params::make(long r, const Rational& alpha) {
    if (r < 2) throw SchemaError("sl2 family needs r >= 2, got " + std::to_string(r));
    SL2Params p;
    p.r = r;
    p.alpha = alpha;
    p.alpha.canonicalize();
    p.s = to_long(Int(p.alpha.get_den()));
    p.N = 2 * r * p.s;
    return p;
}

SL2Family::SL2Family(SL2Params p) : p_(std::move(p)) {}

Grade SL2Family::unit_grade() const { return Grade::of_rational(Rational(0)); }

Grade SL2Family::compose(const Grade& a, const Grade& b) const {
    return Grade::of_rational(mod2(a.rational() + b.rational()));
}

Grade SL2Family::inverse(const Grade& a) const {
    return Grade::of_rational(mod2(-a.rational()));
}

std::string SL2Family::describe() const {
    std::ostringstream os;
    os << "restricted quantum sl2 at a primitive " << 2 * p_.r << "-th root of unity, r=" << p_.r
       << ", alpha=" << rational_str(p_.alpha) << ", scalars in Q(zeta_" << p_.N << ")";
    return os.str();
}

std::optional<std::pair<int, CycNumber>> SL2Family::integral_normalization() const {
    // mu(E^{r-1} F^{r-1} K) = 1 on the unit grade.
    return std::make_pair(index_of((int)p_.r - 1, (int)p_.r - 1, 1), CycNumber::one(p_.N));
}

Grade SL2Family::grade_of(const Rational& x) const { return Grade::of_rational(mod2(x)); }

Rational SL2Family::rep(const Grade& g) const { return g.rational(); }

CycNumber SL2Family::qp(const Rational& x) const { return qpow(p_.r, x, p_.N); }

CycNumber SL2Family::brace(const Rational& x) const { return qbrace(p_.r, x, p_.N); }

CycNumber SL2Family::qnum(const Rational& x) const { return qint(p_.r, x, p_.N); }

/*
 * Normal ordering table for F^n E^m, memoized. Recursion on m through
 *   F^n E = E F^n - {n}/{1}^2 (q^{-(n-1)} F^{n-1} K - q^{n-1} F^{n-1} K^{-1})
 * with K exponents kept in Z until reduce() folds them into a grade.
 * E and F powers at or beyond r are dropped on the spot.
 */
const SL2Family::Elem& SL2Family::fe_table(int n, int m) const {
    std::lock_guard<std::mutex> lock(fe_mutex_);
    const int r = (int)p_.r;
    const long N = p_.N;
    std::function<const Elem&(int, int)> go = [&](int nn, int mm) -> const Elem& {
        auto key = std::make_pair(nn, mm);
        auto hit = fe_memo_.find(key);
        if (hit != fe_memo_.end()) return hit->second;
        Elem out;
        if (nn == 0 || mm == 0) {
            if (nn < r && mm < r) out[Mono{mm, nn, 0}] = CycNumber::one(N);
        } else {
            CycNumber inv_b2 = qbrace(p_.r, Rational(1), N).pow(2).inv();
            CycNumber bn = qbrace(p_.r, Rational(nn), N);
            // (coefficient, monomial) terms of F^nn E.
            struct Term {
                Mono t;
                CycNumber c;
            };
            std::vector<Term> head;
            head.push_back({Mono{1, nn, 0}, CycNumber::one(N)});
            head.push_back({Mono{0, nn - 1, 1}, -(bn * qpow(p_.r, Rational(-(nn - 1)), N) * inv_b2)});
            head.push_back({Mono{0, nn - 1, -1}, bn * qpow(p_.r, Rational(nn - 1), N) * inv_b2});
            for (const auto& h : head) {
                // h.t * E^{mm-1}: commute K^{h.t.l} across, then recurse on
                // the F block.
                CycNumber shift = qpow(p_.r, Rational(2 * h.t.l * (mm - 1)), N);
                for (const auto& [t2, c2] : go(h.t.n, mm - 1)) {
                    int m2 = h.t.m + t2.m;
                    if (m2 >= r) continue;
                    Mono key2{m2, t2.n, h.t.l + t2.l};
                    CycNumber add = h.c * shift * c2;
                    auto it = out.find(key2);
                    if (it == out.end()) {
                        out.emplace(key2, add);
                    } else {
                        it->second += add;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
        auto pos = fe_memo_.emplace(key, std::move(out)).first;
        return pos->second;
    };
    return go(n, m);
}

/*
 * Product of two PBW monomials with unreduced K exponents:
 * E^a F^b K^l * E^c F^d K^e picks up q^{2l(c-d)} moving K^l across, then
 * each normal-ordered term of F^b E^c picks up q^{-2 l' d} moving its own
 * K^{l'} across F^d.
 */
SL2Family::Elem SL2Family::mono_mul(const Mono& x, const Mono& y) const {
    Elem out;
    const int r = (int)p_.r;
    CycNumber base = qp(Rational(2 * x.l * (long)(y.m - y.n)));
    for (const auto& [t, c] : fe_table(x.n, y.m)) {
        int m2 = x.m + t.m;
        int n2 = t.n + y.n;
        if (m2 >= r || n2 >= r) continue;
        Mono key{m2, n2, t.l + x.l + y.l};
        CycNumber add = base * c * qp(Rational(-2 * t.l * (long)y.n));
        auto it = out.find(key);
        if (it == out.end()) {
            out.emplace(key, add);
        } else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// Fold K exponents into 0..r-1 using the central relation K^r = q^{r gamma}.
Vec SL2Family::reduce(const Elem& e, const Rational& gamma) const {
    const int r = (int)p_.r;
    Vec out = zero_vec(r * r * r, p_.N);
    for (const auto& [t, c] : e) {
        if (c.is_zero()) continue;
        long q = t.l >= 0 ? t.l / r : -((-t.l + r - 1) / r);
        long l0 = t.l - q * r;
        out[index_of(t.m, t.n, (int)l0)] += c * qp(gamma * Rational(r * q));
    }
    return out;
}

GradedAlgebra SL2Family::build_algebra(const Grade& a) const {
    const int r = (int)p_.r;
    const int d = r * r * r;
    const Rational gamma = rep(a);
    GradedAlgebra A;
    A.dim = d;
    A.N = p_.N;
    A.unit = unit_vec(d, 0, p_.N);
    A.labels.resize(d);
    A.generators = {index_of(1, 0, 0), index_of(0, 1, 0), index_of(0, 0, 1)};
    for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n)
            for (int l = 0; l < r; ++l) {
                std::string lab = power_label("E", m) + power_label("F", n) + power_label("K", l);
                A.labels[index_of(m, n, l)] = lab.empty() ? "1" : lab;
            }
    A.mul.resize(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        Mono x{i / (r * r), (i / r) % r, i % r};
        for (int j = 0; j < d; ++j) {
            Mono y{j / (r * r), (j / r) % r, j % r};
            A.mul[static_cast<std::size_t>(i) * d + j] = SparseVec::from_dense(reduce(mono_mul(x, y), gamma));
        }
    }
    return A;
}

SparseMatrix SL2Family::build_coproduct(const Grade& a, const Grade& b) const {
    const int r = (int)p_.r;
    const int d = r * r * r;
    const long N = p_.N;
    const GradedAlgebra& A = algebra(a);
    const GradedAlgebra& B = algebra(b);
    const int iE = index_of(1, 0, 0), iF = index_of(0, 1, 0), iK = index_of(0, 0, 1);

    // Generator coproducts as tensor vectors on H_a (x) H_b. K^{-1} on the
    // left leg unwinds through the central relation of H_a.
    Vec dE = zero_vec(d * d, N), dF = zero_vec(d * d, N), dK = zero_vec(d * d, N);
    dE[0 * d + iE] = CycNumber::one(N);
    dE[iE * d + iK] = CycNumber::one(N);
    dF[index_of(0, 0, r - 1) * d + iF] = qp(rep(a) * Rational(-p_.r));
    dF[iF * d + 0] = CycNumber::one(N);
    dK[iK * d + iK] = CycNumber::one(N);

    SparseVec one2;
    one2.ent.push_back({0, CycNumber::one(N)});
    std::vector<SparseVec> pe(r), pf(r), pk(r);
    pe[0] = pf[0] = pk[0] = one2;
    for (int i = 1; i < r; ++i) {
        pe[i] = tensor_multiply(A, B, pe[i - 1], SparseVec::from_dense(dE));
        pf[i] = tensor_multiply(A, B, pf[i - 1], SparseVec::from_dense(dF));
        pk[i] = tensor_multiply(A, B, pk[i - 1], SparseVec::from_dense(dK));
    }

    SparseMatrix cop(d * d, d, N);
    for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n) {
            SparseVec emfn = tensor_multiply(A, B, pe[m], pf[n]);
            for (int l = 0; l < r; ++l)
                cop.set_col(index_of(m, n, l), tensor_multiply(A, B, emfn, pk[l]));
        }
    return cop;
}

Vec SL2Family::build_counit() const {
    const int r = (int)p_.r;
    Vec eps = zero_vec(r * r * r, p_.N);
    for (int l = 0; l < r; ++l) eps[index_of(0, 0, l)] = CycNumber::one(p_.N);
    return eps;
}

SparseMatrix SL2Family::build_antipode(const Grade& a) const {
    const int r = (int)p_.r;
    const int d = r * r * r;
    const Rational target = rep(inverse(a));
    SparseMatrix S(d, d, p_.N);
    for (int m = 0; m < r; ++m)
        for (int n = 0; n < r; ++n)
            for (int l = 0; l < r; ++l) {
                // S(E^m F^n K^l) = (-1)^{m+n} q^{n(n-1)-m(m-1)}
                //                  K^{n-l} F^n E^m K^{-m}.
                CycNumber pref = qp(Rational((long)n * (n - 1) - (long)m * (m - 1)));
                if ((m + n) % 2 == 1) pref = -pref;
                long shift = (long)n - l;
                Elem acc;
                for (const auto& [t, c] : fe_table(n, m)) {
                    Mono key{t.m, t.n, t.l + shift - m};
                    acc[key] = pref * c * qp(Rational(2 * shift * (long)(t.m - t.n)));
                }
                S.set_col(index_of(m, n, l), SparseVec::from_dense(reduce(acc, target)));
            }
    return S;
}

Vec SL2Family::build_pivot(const Grade& a) const {
    const int r = (int)p_.r;
    Vec g = zero_vec(r * r * r, p_.N);
    g[index_of(0, 0, 1)] = qp(rep(a) * Rational(-p_.r));
    return g;
}

Vec SL2Family::casimir(const Grade& g) const {
    const GradedAlgebra& A = algebra(g);
    const int r = (int)p_.r;
    CycNumber inv_b2 = brace(Rational(1)).pow(2).inv();
    Vec out = A.multiply(unit_vec(A.dim, index_of(0, 1, 0), p_.N), unit_vec(A.dim, index_of(1, 0, 0), p_.N));
    out[index_of(0, 0, 1)] += qp(Rational(1)) * inv_b2;
    out[index_of(0, 0, r - 1)] += qp(Rational(-1)) * inv_b2 * qp(rep(g) * Rational(-p_.r));
    return out;
}

CheckReport SL2Family::check_casimir(const Grade& g) const {
    CheckReport out;
    const GradedAlgebra& A = algebra(g);
    const int r = (int)p_.r;
    const std::string w = "(" + g.str() + ")";
    CycNumber inv_b2 = brace(Rational(1)).pow(2).inv();
    Vec om = casimir(g);
    // Other normal ordering: E F + (q^{-1} K + q K^{-1})/{1}^2.
    Vec om2 = unit_vec(A.dim, index_of(1, 1, 0), p_.N);
    om2[index_of(0, 0, 1)] += qp(Rational(-1)) * inv_b2;
    om2[index_of(0, 0, r - 1)] += qp(Rational(1)) * inv_b2 * qp(rep(g) * Rational(-p_.r));
    out.add("casimir.orderings", w, vec_eq(om, om2), "");
    bool central = true;
    std::string witness;
    for (int i = 0; i < A.dim && central; ++i) {
        Vec bi = unit_vec(A.dim, i, p_.N);
        if (!vec_eq(A.multiply(om, bi), A.multiply(bi, om))) {
            central = false;
            witness = "fails against " + A.label(i);
        }
    }
    out.add("casimir.central", w, central, witness);
    return out;
}

CheckReport SL2Family::casimir_power_identities(const Grade& g, const Vec& mu_tilde) const {
    CheckReport out;
    const GradedAlgebra& A = algebra(g);
    const int r = (int)p_.r;
    const long N = p_.N;
    const std::string w = "(" + g.str() + ")";
    CycNumber inv_b2 = brace(Rational(1)).pow(2).inv();
    CycNumber kinv_scale = qp(rep(g) * Rational(-p_.r));
    Vec om = casimir(g);

    // Telescoping product against the ladder of K-shifts.
    Vec prod = A.unit;
    for (int k = 1; k <= r - 1; ++k) {
        Vec factor = om;
        long i = k - 1;
        factor[index_of(0, 0, 1)] -= qp(Rational(-2 * i - 1)) * inv_b2;
        factor[index_of(0, 0, r - 1)] -= qp(Rational(2 * i + 1)) * inv_b2 * kinv_scale;
        prod = A.multiply(prod, factor);
        bool ok = vec_eq(prod, unit_vec(A.dim, index_of(k, k, 0), N));
        out.add("casimir.telescoping", w + " k=" + std::to_string(k), ok, "");
    }

    // Omega^k = E^k F^k + (combination of E^j F^j K^i with j < k).
    std::vector<Vec> powers{A.unit};
    for (int k = 1; k <= r - 1; ++k) powers.push_back(A.multiply(powers.back(), om));
    for (int k = 1; k <= r - 1; ++k) {
        Vec diff = vec_sub(powers[k], unit_vec(A.dim, index_of(k, k, 0), N));
        bool ok = true;
        std::string witness;
        for (int idx = 0; idx < A.dim && ok; ++idx) {
            if (diff[idx].is_zero()) continue;
            int m = idx / (r * r), n = (idx / r) % r;
            if (m != n || m >= k) {
                ok = false;
                witness = "stray coordinate at " + A.label(idx);
            }
        }
        out.add("casimir.power-span", w + " k=" + std::to_string(k), ok, witness);
    }

    // Integral of Casimir powers: zero below the top power, eta at the top.
    for (int k = 0; k < r - 1; ++k) {
        CycNumber v = dot(mu_tilde, powers[k]);
        out.add("casimir.integral-vanishing", w + " k=" + std::to_string(k), v.is_zero(),
                v.is_zero() ? "" : "got " + v.str());
    }
    CycNumber eta = dot(mu_tilde, unit_vec(A.dim, index_of(r - 1, r - 1, 0), N));
    CycNumber top = dot(mu_tilde, powers[r - 1]);
    out.add("casimir.integral-top", w, !eta.is_zero() && top == eta,
            "eta=" + eta.str() + " top=" + top.str());
    return out;
}

void SL2Family::weight_guard(const Rational& weight) const {
    Rational w = weight;
    w.canonicalize();
    if (w.get_den() == 1)
        throw AlphaIntegralSingular("weight " + rational_str(w) +
                                    " is integral; the r-dimensional simple module data is singular there");
}

Grade SL2Family::module_grade(const Rational& weight) const {
    return grade_of(weight + Rational(p_.r - 1));
}

CycNumber SL2Family::w_scalar(const Rational& weight) const {
    Rational e = weight + Rational(p_.r);
    return (qp(e) + qp(-e)) * brace(Rational(1)).pow(2).inv();
}

ModuleRep SL2Family::simple_module(const Rational& weight) const {
    weight_guard(weight);
    const int r = (int)p_.r;
    const long N = p_.N;
    Grade gr = module_grade(weight);
    // Highest weight vector v_0 with K v_0 = q^{weight+r-1} v_0; F shifts the
    // basis down, E climbs back with coefficients forced by the commutator.
    Matrix mE(r, r, N), mF(r, r, N), mK(r, r, N);
    CycNumber e_i = CycNumber::zero(N);
    for (int i = 0; i < r; ++i) {
        mK.at(i, i) = qp(weight + Rational(r - 1 - 2 * i));
        if (i + 1 < r) mF.at(i + 1, i) = CycNumber::one(N);
        if (i + 1 < r) {
            e_i += qnum(weight + Rational(r - 1 - 2 * i));
            mE.at(i, i + 1) = e_i;
        }
    }
    const int rr = r;
    auto provider = [mE, mF, mK, rr, N](int idx) {
        int m = idx / (rr * rr), n = (idx / rr) % rr, l = idx % rr;
        Matrix out = Matrix::identity(rr, N);
        for (int t = 0; t < m; ++t) out = out * mE;
        for (int t = 0; t < n; ++t) out = out * mF;
        for (int t = 0; t < l; ++t) out = out * mK;
        return out;
    };
    return ModuleRep(*this, gr, r, provider, "V(" + rational_str(weight) + ")");
}

CheckReport SL2Family::check_simple_module(const Rational& weight) const {
    CheckReport out;
    ModuleRep V = simple_module(weight);
    const int r = (int)p_.r;
    const long N = p_.N;
    const int d = r * r * r;
    Grade gr = V.grade();
    const std::string w = "(" + V.name() + ")";
    const Matrix& mE = V.action(index_of(1, 0, 0));
    const Matrix& mF = V.action(index_of(0, 1, 0));
    const Matrix& mK = V.action(index_of(0, 0, 1));
    Vec kinv = zero_vec(d, N);
    kinv[index_of(0, 0, r - 1)] = qp(rep(gr) * Rational(-p_.r));
    Matrix mKi = V.action_of(kinv);

    out.add("module.KK-inverse", w, mK * mKi == Matrix::identity(r, N), "");
    out.add("module.KE-relation", w, mK * mE == mE * mK * qp(Rational(2)), "");
    out.add("module.KF-relation", w, mK * mF == mF * mK * qp(Rational(-2)), "");
    out.add("module.EF-commutator", w,
            mE * mF - mF * mE == (mK - mKi) * brace(Rational(1)).inv(), "");
    out.add("module.E-nilpotent", w, mat_pow(mE, r).is_zero(), "");
    out.add("module.F-nilpotent", w, mat_pow(mF, r).is_zero(), "");
    out.add("module.K-power-grade", w,
            mat_pow(mK, r) == Matrix::identity(r, N) * qp(rep(gr) * Rational(p_.r)), "");

    bool coeffs_ok = true;
    std::string witness;
    for (int i = 1; i < r; ++i) {
        CycNumber expect = qnum(Rational(i)) * qnum(weight + Rational(r - i));
        if (mE.at(i - 1, i) != expect) {
            coeffs_ok = false;
            witness = "e_" + std::to_string(i) + " off";
        }
    }
    out.add("module.lowering-coefficients", w, coeffs_ok, witness);

    out.add("module.casimir-scalar", w,
            V.action_of(casimir(gr)) == Matrix::identity(r, N) * w_scalar(weight), "");
    out.merge(V.check_module());
    return out;
}

CheckReport SL2Family::density_decomposition_check(const Rational& weight) const {
    CheckReport out;
    weight_guard(weight);
    const int r = (int)p_.r;
    const int d = r * r * r;
    Grade gr = module_grade(weight);
    const std::string w = "(weight " + rational_str(weight) + ")";

    std::vector<ModuleRep> mods;
    for (int j = 0; j < r; ++j) mods.push_back(simple_module(weight + Rational(2 * j)));

    bool grades_ok = true;
    for (const auto& m : mods) grades_ok = grades_ok && m.grade() == gr;
    out.add("density.grades", w, grades_ok, "");

    bool sep = true;
    for (int i = 0; i < r && sep; ++i)
        for (int j = i + 1; j < r && sep; ++j)
            sep = w_scalar(weight + Rational(2 * i)) != w_scalar(weight + Rational(2 * j));
    out.add("density.casimir-separates", w, sep, "");

    // Joint action on the direct sum of the r simples: a square r^3 system
    // whose full rank is exactly bijectivity onto the sum of matrix blocks.
    Matrix M(d, d, p_.N);
    for (int col = 0; col < d; ++col)
        for (int j = 0; j < r; ++j) {
            const Matrix& act = mods[j].action(col);
            for (int u = 0; u < r; ++u)
                for (int v = 0; v < r; ++v) M.at(j * r * r + u * r + v, col) = act.at(u, v);
        }
    int rk = rank(M);
    out.add("density.joint-action-bijective", w, rk == d,
            rk == d ? "" : "rank " + std::to_string(rk) + " of " + std::to_string(d));
    return out;
}

Vec SL2Family::casimir_projector(const Rational& weight) const {
    weight_guard(weight);
    const int r = (int)p_.r;
    Grade gr = module_grade(weight);
    const GradedAlgebra& A = algebra(gr);
    std::vector<CycNumber> wv;
    for (int j = 0; j < r; ++j) wv.push_back(w_scalar(weight + Rational(2 * j)));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (wv[i] == wv[j])
                throw DegenerateEigenvalues("Casimir scalars at weights " + rational_str(weight) +
                                            "+2k fail to separate (k=" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
    Vec om = casimir(gr);
    Vec L = A.unit;
    for (int k = 1; k < r; ++k) {
        Vec factor = vec_sub(om, vec_scale(A.unit, wv[k]));
        L = vec_scale(A.multiply(L, factor), (wv[0] - wv[k]).inv());
    }
    return L;
}

SL2Family::ModifiedDimension SL2Family::modified_dimension(const Rational& weight,
                                                           const Vec& mu_tilde) const {
    weight_guard(weight);
    const int r = (int)p_.r;
    const long N = p_.N;
    Vec L = casimir_projector(weight);
    ModifiedDimension md;
    md.mu_L = dot(mu_tilde, L);
    CycNumber eta = dot(mu_tilde, unit_vec(r * r * r, index_of(r - 1, r - 1, 0), N));
    // d0 = (-1)^{r-1} {1}^{2r-2} eta / r^3; the sign keeps the two routes
    // below equal at every r, including even r.
    md.d0 = CycNumber(Rational((r % 2 == 1) ? 1 : -1, (long)r * r * r), N) *
            brace(Rational(1)).pow(2 * r - 2) * eta;
    md.via_integral = md.mu_L * Rational(1, (long)r);
    md.via_formula = md.d0 * Rational((long)r) * brace(weight) / brace(weight * Rational((long)r));

    // Product form of the same quantum-dimension ratio.
    CycNumber prodform = CycNumber::one(N);
    for (int k = 1; k < r; ++k) prodform *= brace(Rational(k)) / brace(weight + Rational(r - k));
    if (md.d0 * prodform != md.via_formula)
        throw RelationFails("quantum dimension ratio: product form disagrees with closed form at weight " +
                            rational_str(weight));
    if (md.via_integral != md.via_formula)
        throw RelationFails("modified dimension of V(" + rational_str(weight) +
                            "): integral route disagrees with formula route");
    return md;
}

}  // namespace hopfg
