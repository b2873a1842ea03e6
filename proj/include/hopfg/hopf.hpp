#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfg/grade.hpp"
#include "hopfg/linalg.hpp"
#include "hopfg/report.hpp"

namespace hopfg {

/*
 * One graded piece H_alpha: a finite dimensional unital algebra given by its
 * basis, unit coordinates and sparse multiplication tensor
 * b_i * b_j = sum_k c^k_{ij} b_k. Elements are coordinate vectors.
 */
struct GradedAlgebra {
    int dim = 0;
    long N = 1;  // scalar modulus
    Vec unit;
    std::vector<std::string> labels;
    // mul[i*dim + j] lists (k, c^k_{ij}).
    std::vector<SparseVec> mul;
    // Basis indices that generate the algebra multiplicatively (used to cut
    // intertwiner checks down); empty means "use every basis element".
    std::vector<int> generators;

    const SparseVec& product(int i, int j) const { return mul[static_cast<std::size_t>(i) * dim + j]; }

    Vec multiply(const Vec& x, const Vec& y) const;
    SparseVec multiply_sparse(const SparseVec& x, const SparseVec& y) const;
    Matrix left_mult(const Vec& x) const;   // y |-> x*y
    Matrix right_mult(const Vec& x) const;  // y |-> y*x
    std::vector<int> generator_set() const;
    std::string label(int i) const;

    // Associativity on all basis triples plus both unit laws.
    CheckReport check_algebra(const std::string& where) const;
};

/*
 * Lazy family {H_alpha} with coproducts Delta_{a,b}: H_{ab} -> H_a (x) H_b,
 * counit on H_1, antipodes S_a: H_a -> H_{a^{-1}} and pivot family g_a.
 * Construction is on demand per grade and memoized; the memo is guarded so
 * concurrent grade requests are safe and deterministic.
 *
 * Matrix conventions: elements are coordinate columns; coproduct(a,b) has
 * dim(a)*dim(b) rows indexed left-major (i_a * dim(b) + i_b) and dim(ab)
 * columns; antipode(a) maps coordinates on H_a to coordinates on H_{a^{-1}}.
 */
class HopfGFamily {
public:
    virtual ~HopfGFamily() = default;

    virtual Grade unit_grade() const = 0;
    virtual Grade compose(const Grade& a, const Grade& b) const = 0;
    virtual Grade inverse(const Grade& a) const = 0;
    virtual long modulus() const = 0;
    virtual std::string describe() const = 0;

    const GradedAlgebra& algebra(const Grade& a) const;
    const SparseMatrix& coproduct(const Grade& a, const Grade& b) const;
    const Vec& counit() const;
    const SparseMatrix& antipode(const Grade& a) const;
    const Vec& pivot(const Grade& a) const;
    // g_a^{-1} computed as S_{a^{-1}}(g_{a^{-1}}); throws PivotNotInvertible
    // if the two-sided inverse law fails.
    Vec pivot_inv(const Grade& a) const;

    // Inverse antipode (S_a)^{-1}: H_{a^{-1}} -> H_a, memoized matrix inverse.
    const SparseMatrix& antipode_inv(const Grade& a) const;

    // Optional normalization for the integral solver: (basis index in H_1,
    // required value). Default: first basis vector with nonzero value gets 1.
    virtual std::optional<std::pair<int, CycNumber>> integral_normalization() const {
        return std::nullopt;
    }

    int dim(const Grade& a) const { return algebra(a).dim; }

protected:
    virtual GradedAlgebra build_algebra(const Grade& a) const = 0;
    virtual SparseMatrix build_coproduct(const Grade& a, const Grade& b) const = 0;
    virtual Vec build_counit() const = 0;
    virtual SparseMatrix build_antipode(const Grade& a) const = 0;
    virtual Vec build_pivot(const Grade& a) const = 0;

private:
    mutable std::mutex memo_mutex_;
    mutable std::map<Grade, GradedAlgebra> alg_memo_;
    mutable std::map<std::pair<Grade, Grade>, SparseMatrix> cop_memo_;
    mutable std::map<Grade, SparseMatrix> antipode_memo_;
    mutable std::map<Grade, SparseMatrix> antipode_inv_memo_;
    mutable std::map<Grade, Vec> pivot_memo_;
    mutable std::optional<Vec> counit_memo_;
};

// Delta_{a,b}(x) for x given by coordinates on H_{ab}, as a sparse tensor
// vector on the left-major kron basis of H_a (x) H_b.
SparseVec sweedler(const HopfGFamily& F, const Grade& a, const Grade& b, const Vec& x);

// Contract one tensor leg with a linear form: (form (x) Id) resp. (Id (x) form).
Vec contract_first(const SparseVec& t, const Vec& form, int dim_second, long N);
Vec contract_second(const SparseVec& t, const Vec& form, int dim_first, long N);

// Swap tensor legs: e_i (x) e_j |-> e_j (x) e_i.
SparseVec swap_legs(const SparseVec& t, int dim_first, int dim_second);

// Product of two elements of H_a (x) H_b given as sparse tensor vectors.
SparseVec tensor_multiply(const GradedAlgebra& A, const GradedAlgebra& B, const SparseVec& s,
                          const SparseVec& t);

// Axiom checks. Each returns a CheckReport with one item per identity.
CheckReport check_coalgebra(const HopfGFamily& F, const Grade& a, const Grade& b, const Grade& c);
CheckReport check_hopf(const HopfGFamily& F, const Grade& a, const Grade& b);
CheckReport check_antipode_properties(const HopfGFamily& F, const Grade& a, const Grade& b);
CheckReport check_pivot(const HopfGFamily& F, const Grade& a, const Grade& b);

// Full driver: algebra laws per grade, all pair checks, all triple checks
// over the given window (windows are expected to be closed under the group
// operations for the pairs formed; missing data raises WindowIncomplete).
CheckReport check_family(const HopfGFamily& F, const std::vector<Grade>& window,
                         bool include_triples = true);

}  // namespace hopfg
