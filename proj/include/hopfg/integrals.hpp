#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfg/hopf.hpp"

namespace hopfg {

/*
 * Family of linear forms, one per grade, for the right or left integral or
 * its symmetrised version. Forms are dense coordinate rows against the basis
 * of the graded piece they live on.
 */
struct GIntegralFamily {
    bool left = false;
    std::map<Grade, Vec> forms;
    std::string normalization;

    const Vec& at(const Grade& g) const;
};

/*
 * Right integral on one grade. Stage 1 solves the homogeneous instance
 * against the unit grade and requires the solution line to be exactly one
 * dimensional; stage 2 scales it so the cross-grade instance against the
 * normalized unit-grade form holds. Throws IntegralSpaceDimension or
 * InconsistentNormalization when that fails.
 */
Vec right_integral(const HopfGFamily& F, const Grade& a);
GIntegralFamily right_integral_family(const HopfGFamily& F, const std::vector<Grade>& window);

// mu^l_a = mu_{a^{-1}} o S_a, built from the right family.
Vec left_integral(const HopfGFamily& F, const Grade& a);
GIntegralFamily left_integral_family(const HopfGFamily& F, const std::vector<Grade>& window);

// Right: x |-> mu_a(g_a x). Left: x |-> mu^l_a(g_a^{-1} x).
GIntegralFamily symmetrise(const HopfGFamily& F, const GIntegralFamily& fam);

// Defining relation of the right family on every window pair and basis x.
CheckReport check_right_integral(const HopfGFamily& F, const GIntegralFamily& fam,
                                 const std::vector<Grade>& window);
// Same for the left family.
CheckReport check_left_integral(const HopfGFamily& F, const GIntegralFamily& fam,
                                const std::vector<Grade>& window);
// Pivot-twisted relation of the symmetrised right family:
// sum mu~_a(x_(1)) g_b x_(2) = mu~_{ab}(x) 1_b.
CheckReport check_symmetrised_relation(const HopfGFamily& F, const GIntegralFamily& sym,
                                       const std::vector<Grade>& window);

// Cointegrals of the unit-grade algebra and the unimodularity test (left and
// right cointegral lines coincide).
Vec right_cointegral(const HopfGFamily& F);
Vec left_cointegral(const HopfGFamily& F);
bool is_unimodular(const HopfGFamily& F);

// Symmetry mu~(xy) = mu~(yx) on all basis pairs and invertibility of the
// Gram matrix mu~(b_i b_j). Requires unimodularity, else NotUnimodular.
CheckReport check_symmetric_nondegenerate(const HopfGFamily& F, const Vec& form, const Grade& a);

struct Comodulus {
    std::map<Grade, Vec> elements;

    const Vec& at(const Grade& g) const;
};

// Distinguished grouplike family a_alpha extracted from the right integral
// through its defining relation; throws NoNonvanishingWitness or
// RelationFails.
Comodulus comodulus(const HopfGFamily& F, const GIntegralFamily& right,
                    const std::vector<Grade>& window);
// Defining relation on all pairs, grouplikeness, counit value and the
// antipode evaluation identity mu_{a^{-1}}(S_a(x)) = mu_a(com_a x).
CheckReport check_comodulus(const HopfGFamily& F, const GIntegralFamily& right, const Comodulus& com,
                            const std::vector<Grade>& window);

// Unibalancedness: com_a = g_a^2 elementwise and the two symmetrised
// families coincide exactly (both scaled through the same unit-grade form).
CheckReport check_unibalanced(const HopfGFamily& F, const GIntegralFamily& sym_right,
                              const GIntegralFamily& sym_left, const Comodulus& com,
                              const std::vector<Grade>& window);

}  // namespace hopfg
