#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hopfg/integrals.hpp"
#include "hopfg/modcat.hpp"

namespace hopfg {

/*
 * Matrix with entries in one graded piece, stored as coordinate vectors.
 * Endomorphisms of the free left module H_a^n of row tuples are exactly
 * right multiplications by such matrices: f(x)_j = sum_i x_i A_ij, so
 * composition f_A then f_B corresponds to the product A B below.
 */
using HMatrix = std::vector<std::vector<Vec>>;

HMatrix hmat_mul(const GradedAlgebra& A, const HMatrix& X, const HMatrix& Y);
bool hmat_eq(const HMatrix& X, const HMatrix& Y);
// Seeded matrix with small random coefficients, for property tests.
HMatrix random_hmatrix(const HopfGFamily& F, const Grade& a, int rows, int cols,
                       unsigned long seed);

/*
 * Projective module presented as the image of an idempotent matrix acting on
 * a free module by right multiplication. The presentation fixes a canonical
 * decomposition of the identity through the coordinate maps, which the trace
 * evaluation below uses.
 */
struct ProjPresentation {
    Grade grade;
    int n = 1;
    HMatrix idempotent;
};

// The free module itself, with the identity idempotent.
ProjPresentation free_presentation(const HopfGFamily& F, const Grade& a, int n = 1);
// Shape and exact idempotency of the presenting matrix.
CheckReport check_presentation(const HopfGFamily& F, const ProjPresentation& P);

/*
 * Family of cyclic traces induced by one symmetric form per grade, in
 * practice the symmetrised right or left integral. Evaluation on presented
 * projectives is the diagonal form sum hs_trace below.
 */
struct CyclicTraceFamily {
    bool left = false;
    std::map<Grade, Vec> lambda;

    const Vec& at(const Grade& g) const;
};

CyclicTraceFamily cyclic_trace_family(const GIntegralFamily& sym);

/*
 * Hattori-Stallings evaluation: for f an endomorphism of P given by a matrix
 * with E f E = f, the trace is sum_i lambda(f_ii). Throws NotEndomorphismOfP
 * when the sandwich condition fails.
 */
CycNumber hs_trace(const HopfGFamily& F, const CyclicTraceFamily& t, const ProjPresentation& P,
                   const HMatrix& f);

/*
 * Trace of an H_a-linear endomorphism of the regular module: lambda_a(f(1)).
 * The intertwining property is verified first; NotIntertwiner otherwise.
 */
CycNumber trace_on_regular(const HopfGFamily& F, const CyclicTraceFamily& t, const Grade& a,
                           const Morphism& f);

/*
 * The inverse direction of the trace/form bijection: given any trace
 * functional on endomorphisms of regular modules, read off the linear form
 * h |-> t(R_h) coordinatewise.
 */
Vec trace_to_integral(const HopfGFamily& F,
                      const std::function<CycNumber(const Grade&, const Morphism&)>& t,
                      const Grade& a);

/*
 * Reduction identity on the pair (a, b): for seeded H-linear endomorphisms f
 * of H_a (x) H_b, the trace of f evaluated through the free presentation
 * transported along psi equals the trace of the right partial trace of f at
 * grade a; mirrored on the left with the left form and partial trace. Seed 0
 * is always the identity endomorphism; seeds 1..seeds are pseudo-random.
 */
CheckReport check_reduction_lemma(const HopfGFamily& F, const CyclicTraceFamily& t_right,
                                  const CyclicTraceFamily& t_left, const Grade& a, const Grade& b,
                                  int seeds, unsigned long seed_base = 1);

// Right handed: trace of pivot_action * f. Left handed: pivot_inv_action * f.
CycNumber categorical_trace(const ModuleRep& M, const Morphism& f, bool left = false);

/*
 * Structure of the decomposition isomorphisms against the trace form:
 * phi fixes the columns over the unit, and collapsing the first leg of psi
 * with lambda_{ab} equals lambda_a (x) (left multiplication by g_b) on every
 * basis pair of H_a (x) H_b.
 */
CheckReport check_decomposition_identities(const HopfGFamily& F, const CyclicTraceFamily& t_right,
                                           const Grade& a, const Grade& b);

/*
 * Cyclicity certificate: seeded pairs of maps P -> Q and Q -> P composed in
 * both orders give equal traces. Presentations must share a grade.
 */
CheckReport check_cyclicity(const HopfGFamily& F, const CyclicTraceFamily& t,
                            const ProjPresentation& P, const ProjPresentation& Q, int pairs,
                            unsigned long seed_base = 1);

// Gram matrix of (f, g) |-> t(f o g) on End(H_a), over the algebra basis.
Matrix trace_pairing_gram(const HopfGFamily& F, const CyclicTraceFamily& t, const Grade& a);

}  // namespace hopfg
