#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hopfg/hopf.hpp"

namespace hopfg {

/*
 * Finite dimensional module over one graded piece H_alpha: the grade, the
 * dimension and the action matrix of every basis element of H_alpha.
 * Action matrices are produced lazily by a provider and memoized, because a
 * regular module at r = 3 has 27 matrices of size 27x27 and most checks touch
 * only the generators. Copies share the cache.
 */
class ModuleRep {
public:
    ModuleRep() = default;
    ModuleRep(const HopfGFamily& F, Grade grade, int dim,
              std::function<Matrix(int)> provider, std::string name);

    bool valid() const { return static_cast<bool>(d_); }
    const HopfGFamily& family() const;
    const Grade& grade() const;
    int dim() const;
    long modulus() const;
    const std::string& name() const;

    // Action of the i-th basis element of H_grade, resp. of an element given
    // by coordinates.
    const Matrix& action(int i) const;
    Matrix action_of(const Vec& x) const;
    Matrix pivot_action() const;
    Matrix pivot_inv_action() const;

    // Algebra-map invariant on all basis pairs plus action(1) = Id.
    CheckReport check_module() const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

/*
 * H-linear map between modules of the same grade. The matrix is kept sparse;
 * tensor-square morphisms at r = 3 are 729x729 and structurally thin.
 * Construction does not validate H-linearity (it is often the property under
 * test); check_intertwiner does, over the instance generator set or the full
 * basis.
 */
struct Morphism {
    ModuleRep source, target;
    SparseMatrix mat;

    CheckReport check_intertwiner(bool generators_only = true) const;
};

Morphism make_morphism(ModuleRep source, ModuleRep target, SparseMatrix mat);
Morphism identity_morphism(const ModuleRep& M);
// f after g.
Morphism compose(const Morphism& f, const Morphism& g);

// Left regular module of H_alpha.
ModuleRep regular_module(const HopfGFamily& F, const Grade& a);
// The space H_beta as a grade-1 module with h.m = eps(h) m.
ModuleRep trivial_twist_module(const HopfGFamily& F, const Grade& b);
// One dimensional unit object: the scalars with the counit action.
ModuleRep unit_object(const HopfGFamily& F);
// Dual module at grade a^{-1}: (h.f)(x) = f(S_{a^{-1}}(h) x).
ModuleRep dual_module(const ModuleRep& M);
// Tensor product through Delta_{a,b}.
ModuleRep tensor_module(const ModuleRep& M, const ModuleRep& N);

/*
 * The four duality morphisms of a module V:
 *   ev_r:  V* (x) V -> k     f (x) v |-> f(v)
 *   coev_r: k -> V (x) V*    1 |-> sum v_j (x) v^j
 *   ev_l:  V (x) V* -> k     v (x) f |-> f(g v)
 *   coev_l: k -> V* (x) V    1 |-> sum v^i (x) g^{-1} v_i
 * Matrices are over the kron bases; the scalar line is 1-dimensional.
 */
struct DualityData {
    Matrix ev_r, coev_r, ev_l, coev_l;
};
DualityData duality_morphisms(const ModuleRep& M);
// Zig-zag identities and H-linearity of all four morphisms.
CheckReport check_duality(const ModuleRep& M);

/*
 * Partial traces of f: U (x) W -> V (x) W (right) resp. f: W (x) U -> W (x) V
 * (left), by index contraction against the pivot action on W. The slow
 * variants compose the four duality-morphism matrices instead and exist only
 * to cross-check the contraction.
 */
Morphism partial_trace_right(const ModuleRep& U, const ModuleRep& V, const ModuleRep& W,
                             const Morphism& f);
Morphism partial_trace_left(const ModuleRep& W, const ModuleRep& U, const ModuleRep& V,
                            const Morphism& f);
Matrix partial_trace_right_slow(const ModuleRep& U, const ModuleRep& V, const ModuleRep& W,
                                const Morphism& f);
Matrix partial_trace_left_slow(const ModuleRep& W, const ModuleRep& U, const ModuleRep& V,
                               const Morphism& f);

/*
 * Decomposition isomorphisms between H_a (x) H_b and the free modules
 * H_{ab} (x) eps-twisted H_b (right handed) resp. eps-twisted H_a (x) H_{ab}
 * (left handed):
 *   phi:  h (x) m |-> h_(1) (x) h_(2) m         psi = phi^{-1}
 *   phi_l: m (x) h |-> h_(1) m (x) h_(2)        psi_l = phi_l^{-1}
 * psi uses Delta_{ab,b^{-1}} with an antipode on the second leg; psi_l uses
 * Delta_{a^{-1},ab} with the inverse antipode into H_a.
 */
Morphism phi_iso(const HopfGFamily& F, const Grade& a, const Grade& b);
Morphism psi_iso(const HopfGFamily& F, const Grade& a, const Grade& b);
Morphism phi_left_iso(const HopfGFamily& F, const Grade& a, const Grade& b);
Morphism psi_left_iso(const HopfGFamily& F, const Grade& a, const Grade& b);

// Exact basis of H-linear maps M -> N (same grade), by nullspace of the
// intertwiner system over the generator set. Meant for small modules; the
// system has dim(M)*dim(N) unknowns.
std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N);

// Deterministic pseudo-random element of End(H_a (x) H_b) over H_{ab}:
// phi o (right-multiplication (x) arbitrary linear map on the trivial-action
// factor) o psi. H-linear by construction.
Morphism random_endomorphism(const HopfGFamily& F, const Grade& a, const Grade& b,
                             unsigned long seed);

}  // namespace hopfg
