#include "hopfg/modcat.hpp"

#include <mutex>
#include <random>

#include "hopfg/errors.hpp"

namespace hopfg {

struct ModuleRep::Data {
    const HopfGFamily* fam = nullptr;
    Grade grade;
    int dim = 0;
    std::string name;
    std::function<Matrix(int)> provider;
    mutable std::mutex mx;
    mutable std::map<int, Matrix> memo;
};

ModuleRep::ModuleRep(const HopfGFamily& F, Grade grade, int dim, std::function<Matrix(int)> provider,
                     std::string name)
    : d_(std::make_shared<Data>()) {
    d_->fam = &F;
    d_->grade = std::move(grade);
    d_->dim = dim;
    d_->name = std::move(name);
    d_->provider = std::move(provider);
}

const HopfGFamily& ModuleRep::family() const { return *d_->fam; }
const Grade& ModuleRep::grade() const { return d_->grade; }
int ModuleRep::dim() const { return d_->dim; }
long ModuleRep::modulus() const { return d_->fam->modulus(); }
const std::string& ModuleRep::name() const { return d_->name; }

const Matrix& ModuleRep::action(int i) const {
    {
        std::lock_guard<std::mutex> lock(d_->mx);
        auto it = d_->memo.find(i);
        if (it != d_->memo.end()) return it->second;
    }
    Matrix m = d_->provider(i);
    if (m.rows() != d_->dim || m.cols() != d_->dim)
        throw DimensionMismatch("module action matrix has wrong shape for " + d_->name);
    std::lock_guard<std::mutex> lock(d_->mx);
    return d_->memo.emplace(i, std::move(m)).first->second;
}

Matrix ModuleRep::action_of(const Vec& x) const {
    if ((int)x.size() != d_->fam->dim(d_->grade))
        throw DimensionMismatch("element size does not match the graded piece acting on " + d_->name);
    Matrix out(d_->dim, d_->dim, modulus());
    for (int i = 0; i < (int)x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const Matrix& a = action(i);
        for (int u = 0; u < d_->dim; ++u)
            for (int v = 0; v < d_->dim; ++v) out.at(u, v) += x[i] * a.at(u, v);
    }
    return out;
}

Matrix ModuleRep::pivot_action() const { return action_of(d_->fam->pivot(d_->grade)); }

Matrix ModuleRep::pivot_inv_action() const { return action_of(d_->fam->pivot_inv(d_->grade)); }

CheckReport ModuleRep::check_module() const {
    CheckReport out;
    const GradedAlgebra& A = d_->fam->algebra(d_->grade);
    const std::string w = "(" + d_->name + ")";
    out.add("module.unit-acts-as-identity", w,
            action_of(A.unit) == Matrix::identity(d_->dim, modulus()), "");
    bool mult = true;
    std::string witness;
    for (int i = 0; i < A.dim && mult; ++i)
        for (int j = 0; j < A.dim && mult; ++j) {
            Matrix lhs = action(i) * action(j);
            Matrix rhs(d_->dim, d_->dim, modulus());
            for (const auto& [k, c] : A.product(i, j).ent) {
                const Matrix& ak = action(k);
                for (int u = 0; u < d_->dim; ++u)
                    for (int v = 0; v < d_->dim; ++v) rhs.at(u, v) += c * ak.at(u, v);
            }
            if (lhs != rhs) {
                mult = false;
                witness = "at (" + A.label(i) + ", " + A.label(j) + ")";
            }
        }
    out.add("module.action-multiplicative", w, mult, witness);
    return out;
}

Morphism make_morphism(ModuleRep source, ModuleRep target, SparseMatrix mat) {
    if (source.grade() != target.grade())
        throw GradeMismatch("morphism between modules of different grades " + source.grade().str() +
                            " and " + target.grade().str());
    if (mat.rows() != target.dim() || mat.cols() != source.dim())
        throw DimensionMismatch("morphism matrix shape does not match the modules");
    Morphism f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.mat = std::move(mat);
    return f;
}

Morphism identity_morphism(const ModuleRep& M) {
    return make_morphism(M, M, SparseMatrix::identity(M.dim(), M.modulus()));
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.source.dim() != g.target.dim() || f.source.grade() != g.target.grade())
        throw DimensionMismatch("morphism composition: middle modules disagree");
    return make_morphism(g.source, f.target, f.mat * g.mat);
}

CheckReport Morphism::check_intertwiner(bool generators_only) const {
    CheckReport out;
    const HopfGFamily& F = source.family();
    const GradedAlgebra& A = F.algebra(source.grade());
    std::vector<int> idxs;
    if (generators_only) {
        idxs = A.generator_set();
    } else {
        for (int i = 0; i < A.dim; ++i) idxs.push_back(i);
    }
    Matrix m = mat.to_dense();
    bool ok = true;
    std::string witness;
    for (int i : idxs) {
        if (m * source.action(i) != target.action(i) * m) {
            ok = false;
            witness = "fails on " + A.label(i);
            break;
        }
    }
    out.add("morphism.intertwines", "(" + source.name() + " -> " + target.name() + ")", ok, witness);
    return out;
}

ModuleRep regular_module(const HopfGFamily& F, const Grade& a) {
    const GradedAlgebra& A = F.algebra(a);
    const int d = A.dim;
    const long N = A.N;
    const HopfGFamily* fp = &F;
    Grade g = a;
    auto provider = [fp, g, d, N](int i) { return fp->algebra(g).left_mult(unit_vec(d, i, N)); };
    return ModuleRep(F, a, d, provider, "H(" + a.str() + ")");
}

ModuleRep trivial_twist_module(const HopfGFamily& F, const Grade& b) {
    const int d = F.dim(b);
    const long N = F.modulus();
    const HopfGFamily* fp = &F;
    auto provider = [fp, d, N](int i) {
        return Matrix::identity(d, N) * fp->counit()[i];
    };
    return ModuleRep(F, F.unit_grade(), d, provider, "eps-twist H(" + b.str() + ")");
}

ModuleRep unit_object(const HopfGFamily& F) {
    const long N = F.modulus();
    const HopfGFamily* fp = &F;
    auto provider = [fp, N](int i) {
        Matrix m(1, 1, N);
        m.at(0, 0) = fp->counit()[i];
        return m;
    };
    return ModuleRep(F, F.unit_grade(), 1, provider, "k");
}

ModuleRep dual_module(const ModuleRep& M) {
    const HopfGFamily& F = M.family();
    Grade dg = F.inverse(M.grade());
    const HopfGFamily* fp = &M.family();
    ModuleRep base = M;
    Grade dgc = dg;
    auto provider = [fp, base, dgc](int i) {
        // (h.f)(v) = f(S(h) v) with S out of the dual grade.
        const SparseMatrix& S = fp->antipode(dgc);
        Vec sh = zero_vec(S.rows(), fp->modulus());
        for (const auto& [row, c] : S.col(i)) sh[row] = c;
        return base.action_of(sh).transpose();
    };
    return ModuleRep(F, dg, M.dim(), provider, M.name() + "*");
}

ModuleRep tensor_module(const ModuleRep& M, const ModuleRep& N) {
    const HopfGFamily& F = M.family();
    Grade g = F.compose(M.grade(), N.grade());
    Grade ga = M.grade(), gb = N.grade();
    const HopfGFamily* fp = &F;
    ModuleRep mm = M, nn = N;
    int dm = M.dim(), dn = N.dim();
    long mod = M.modulus();
    auto provider = [fp, mm, nn, ga, gb, dm, dn, mod](int i) {
        const SparseMatrix& cop = fp->coproduct(ga, gb);
        Matrix out(dm * dn, dm * dn, mod);
        int db = fp->dim(gb);
        for (const auto& [row, c] : cop.col(i)) {
            int p = row / db, q = row % db;
            Matrix k = Matrix::kron(mm.action(p), nn.action(q));
            for (int u = 0; u < out.rows(); ++u)
                for (int v = 0; v < out.cols(); ++v) out.at(u, v) += c * k.at(u, v);
        }
        return out;
    };
    return ModuleRep(F, g, dm * dn, provider, M.name() + " (x) " + N.name());
}

DualityData duality_morphisms(const ModuleRep& M) {
    const int n = M.dim();
    const long N = M.modulus();
    Matrix g = M.pivot_action();
    Matrix gi = M.pivot_inv_action();
    DualityData D;
    D.ev_r = Matrix(1, n * n, N);
    D.coev_r = Matrix(n * n, 1, N);
    D.ev_l = Matrix(1, n * n, N);
    D.coev_l = Matrix(n * n, 1, N);
    for (int i = 0; i < n; ++i) {
        D.ev_r.at(0, i * n + i) = CycNumber::one(N);
        D.coev_r.at(i * n + i, 0) = CycNumber::one(N);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            D.ev_l.at(0, i * n + j) = g.at(j, i);
            D.coev_l.at(i * n + j, 0) = gi.at(j, i);
        }
    return D;
}

CheckReport check_duality(const ModuleRep& M) {
    CheckReport out;
    const HopfGFamily& F = M.family();
    const int n = M.dim();
    const long N = M.modulus();
    const std::string w = "(" + M.name() + ")";
    DualityData D = duality_morphisms(M);
    Matrix idn = Matrix::identity(n, N);

    out.add("duality.zigzag-right-1", w,
            Matrix::kron(idn, D.ev_r) * Matrix::kron(D.coev_r, idn) == idn, "");
    out.add("duality.zigzag-right-2", w,
            Matrix::kron(D.ev_r, idn) * Matrix::kron(idn, D.coev_r) == idn, "");
    out.add("duality.zigzag-left-1", w,
            Matrix::kron(D.ev_l, idn) * Matrix::kron(idn, D.coev_l) == idn, "");
    out.add("duality.zigzag-left-2", w,
            Matrix::kron(idn, D.ev_l) * Matrix::kron(D.coev_l, idn) == idn, "");

    // H-linearity of the four structure maps, as morphisms against the unit
    // object.
    ModuleRep dual = dual_module(M);
    ModuleRep k = unit_object(F);
    Morphism evr = make_morphism(tensor_module(dual, M), k, D.ev_r.to_sparse());
    Morphism evl = make_morphism(tensor_module(M, dual), k, D.ev_l.to_sparse());
    Morphism coevr = make_morphism(k, tensor_module(M, dual), D.coev_r.to_sparse());
    Morphism coevl = make_morphism(k, tensor_module(dual, M), D.coev_l.to_sparse());
    CheckReport sub;
    sub.merge(evr.check_intertwiner(true));
    sub.merge(coevr.check_intertwiner(true));
    bool right_linear = sub.ok();
    sub = CheckReport{};
    sub.merge(evl.check_intertwiner(true));
    sub.merge(coevl.check_intertwiner(true));
    bool left_linear = sub.ok();
    out.add("duality.right-morphisms-linear", w, right_linear, "");
    out.add("duality.left-morphisms-linear", w, left_linear, "");
    return out;
}

Morphism partial_trace_right(const ModuleRep& U, const ModuleRep& V, const ModuleRep& W,
                             const Morphism& f) {
    const int dU = U.dim(), dV = V.dim(), dW = W.dim();
    if (f.mat.cols() != dU * dW || f.mat.rows() != dV * dW)
        throw DimensionMismatch("right partial trace: morphism shape disagrees with the factors");
    Matrix g = W.pivot_action();
    SparseMatrix out(dV, dU, f.mat.modulus());
    for (int cidx = 0; cidx < f.mat.cols(); ++cidx) {
        int u = cidx / dW, b = cidx % dW;
        for (const auto& [ridx, val] : f.mat.col(cidx)) {
            int v = ridx / dW, a = ridx % dW;
            if (g.at(b, a).is_zero()) continue;
            out.add(v, u, val * g.at(b, a));
        }
    }
    return make_morphism(U, V, std::move(out));
}

Morphism partial_trace_left(const ModuleRep& W, const ModuleRep& U, const ModuleRep& V,
                            const Morphism& f) {
    const int dU = U.dim(), dV = V.dim(), dW = W.dim();
    if (f.mat.cols() != dW * dU || f.mat.rows() != dW * dV)
        throw DimensionMismatch("left partial trace: morphism shape disagrees with the factors");
    Matrix gi = W.pivot_inv_action();
    SparseMatrix out(dV, dU, f.mat.modulus());
    for (int cidx = 0; cidx < f.mat.cols(); ++cidx) {
        int k = cidx / dU, u = cidx % dU;
        for (const auto& [ridx, val] : f.mat.col(cidx)) {
            int i = ridx / dV, v = ridx % dV;
            if (gi.at(k, i).is_zero()) continue;
            out.add(v, u, val * gi.at(k, i));
        }
    }
    return make_morphism(U, V, std::move(out));
}

Matrix partial_trace_right_slow(const ModuleRep& U, const ModuleRep& V, const ModuleRep& W,
                                const Morphism& f) {
    const int dU = U.dim(), dV = V.dim(), dW = W.dim();
    const long N = U.modulus();
    DualityData D = duality_morphisms(W);
    SparseMatrix step1 = SparseMatrix::kron(SparseMatrix::identity(dU, N), D.coev_r.to_sparse());
    SparseMatrix step2 = SparseMatrix::kron(f.mat, SparseMatrix::identity(dW, N));
    SparseMatrix step3 = SparseMatrix::kron(SparseMatrix::identity(dV, N), D.ev_l.to_sparse());
    return (step3 * (step2 * step1)).to_dense();
}

Matrix partial_trace_left_slow(const ModuleRep& W, const ModuleRep& U, const ModuleRep& V,
                               const Morphism& f) {
    const int dU = U.dim(), dV = V.dim(), dW = W.dim();
    const long N = U.modulus();
    DualityData D = duality_morphisms(W);
    SparseMatrix step1 = SparseMatrix::kron(D.coev_l.to_sparse(), SparseMatrix::identity(dU, N));
    SparseMatrix step2 = SparseMatrix::kron(SparseMatrix::identity(dW, N), f.mat);
    SparseMatrix step3 = SparseMatrix::kron(D.ev_r.to_sparse(), SparseMatrix::identity(dV, N));
    return (step3 * (step2 * step1)).to_dense();
}

Morphism phi_iso(const HopfGFamily& F, const Grade& a, const Grade& b) {
    Grade ab = F.compose(a, b);
    const GradedAlgebra& B = F.algebra(b);
    const int dab = F.dim(ab), db = B.dim;
    const SparseMatrix& cop = F.coproduct(a, b);
    SparseMatrix m(F.dim(a) * db, dab * db, F.modulus());
    for (int i = 0; i < dab; ++i)
        for (int j = 0; j < db; ++j) {
            for (const auto& [row, c] : cop.col(i)) {
                int p = row / db, q = row % db;
                for (const auto& [k, c2] : B.product(q, j).ent) m.add(p * db + k, i * db + j, c * c2);
            }
        }
    return make_morphism(tensor_module(regular_module(F, ab), trivial_twist_module(F, b)),
                         tensor_module(regular_module(F, a), regular_module(F, b)), std::move(m));
}

Morphism psi_iso(const HopfGFamily& F, const Grade& a, const Grade& b) {
    Grade ab = F.compose(a, b);
    Grade binv = F.inverse(b);
    const GradedAlgebra& B = F.algebra(b);
    const int da = F.dim(a), db = B.dim;
    const int dbinv = F.dim(binv);
    const SparseMatrix& cop = F.coproduct(ab, binv);
    const SparseMatrix& S = F.antipode(binv);
    SparseMatrix m(F.dim(ab) * db, da * db, F.modulus());
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            for (const auto& [row, c] : cop.col(i)) {
                int p = row / dbinv, q = row % dbinv;
                for (const auto& [s, c2] : S.col(q))
                    for (const auto& [k, c3] : B.product(s, j).ent)
                        m.add(p * db + k, i * db + j, c * c2 * c3);
            }
        }
    }
    return make_morphism(tensor_module(regular_module(F, a), regular_module(F, b)),
                         tensor_module(regular_module(F, ab), trivial_twist_module(F, b)),
                         std::move(m));
}

Morphism phi_left_iso(const HopfGFamily& F, const Grade& a, const Grade& b) {
    Grade ab = F.compose(a, b);
    const GradedAlgebra& A = F.algebra(a);
    const int dab = F.dim(ab), da = A.dim, db = F.dim(b);
    const SparseMatrix& cop = F.coproduct(a, b);
    SparseMatrix m(da * db, da * dab, F.modulus());
    for (int j = 0; j < da; ++j)
        for (int i = 0; i < dab; ++i) {
            for (const auto& [row, c] : cop.col(i)) {
                int p = row / db, q = row % db;
                for (const auto& [k, c2] : A.product(p, j).ent) m.add(k * db + q, j * dab + i, c * c2);
            }
        }
    return make_morphism(tensor_module(trivial_twist_module(F, a), regular_module(F, ab)),
                         tensor_module(regular_module(F, a), regular_module(F, b)), std::move(m));
}

Morphism psi_left_iso(const HopfGFamily& F, const Grade& a, const Grade& b) {
    Grade ab = F.compose(a, b);
    Grade ainv = F.inverse(a);
    const GradedAlgebra& A = F.algebra(a);
    const int da = A.dim, db = F.dim(b), dab = F.dim(ab);
    const SparseMatrix& cop = F.coproduct(ainv, ab);
    const SparseMatrix& Sinv = F.antipode_inv(a);
    SparseMatrix m(da * dab, da * db, F.modulus());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            for (const auto& [row, c] : cop.col(j)) {
                int p = row / dab, q = row % dab;
                for (const auto& [s, c2] : Sinv.col(p))
                    for (const auto& [k, c3] : A.product(s, i).ent)
                        m.add(k * dab + q, i * db + j, c * c2 * c3);
            }
        }
    return make_morphism(tensor_module(regular_module(F, a), regular_module(F, b)),
                         tensor_module(trivial_twist_module(F, a), regular_module(F, ab)),
                         std::move(m));
}

std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N) {
    if (M.grade() != N.grade())
        throw GradeMismatch("hom space needs modules of one grade");
    const HopfGFamily& F = M.family();
    const GradedAlgebra& A = F.algebra(M.grade());
    std::vector<int> gens = A.generator_set();
    const int dm = M.dim(), dn = N.dim();
    const long mod = M.modulus();
    Matrix sys((int)gens.size() * dn * dm, dn * dm, mod);
    int block = 0;
    for (int gidx : gens) {
        const Matrix& am = M.action(gidx);
        const Matrix& an = N.action(gidx);
        for (int u = 0; u < dn; ++u)
            for (int v = 0; v < dm; ++v) {
                int row = (block * dn + u) * dm + v;
                for (int w = 0; w < dm; ++w) sys.at(row, u * dm + w) += am.at(w, v);
                for (int w = 0; w < dn; ++w) sys.at(row, w * dm + v) -= an.at(u, w);
            }
        ++block;
    }
    Matrix ns = nullspace(sys);
    std::vector<Matrix> out;
    for (int c = 0; c < ns.cols(); ++c) {
        Matrix X(dn, dm, mod);
        for (int u = 0; u < dn; ++u)
            for (int v = 0; v < dm; ++v) X.at(u, v) = ns.at(u * dm + v, c);
        out.push_back(std::move(X));
    }
    return out;
}

Morphism random_endomorphism(const HopfGFamily& F, const Grade& a, const Grade& b,
                             unsigned long seed) {
    Grade ab = F.compose(a, b);
    const GradedAlgebra& AB = F.algebra(ab);
    const int dab = AB.dim, db = F.dim(b);
    const long N = F.modulus();
    std::mt19937_64 rng(seed);
    auto small_int = [&rng]() { return (long)(rng() % 7) - 3; };

    Vec h = zero_vec(dab, N);
    for (int i = 0; i < dab; ++i) h[i] = CycNumber(Rational(small_int()), N);
    if (vec_is_zero(h)) h = AB.unit;
    SparseMatrix t(db, db, N);
    for (int u = 0; u < db; ++u)
        for (int v = 0; v < db; ++v)
            if (rng() % 3 == 0) t.set(u, v, CycNumber(Rational(small_int()), N));

    Morphism phi = phi_iso(F, a, b);
    Morphism psi = psi_iso(F, a, b);
    SparseMatrix middle = SparseMatrix::kron(AB.right_mult(h).to_sparse(), t);
    SparseMatrix m = phi.mat * (middle * psi.mat);
    return make_morphism(psi.source, phi.target, std::move(m));
}

}  // namespace hopfg
