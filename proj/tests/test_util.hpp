#pragma once

#include <random>

#include "hopfg/hopf.hpp"
#include "hopfg/linalg.hpp"

// Shared randomness helpers for the test binaries. All draws go through
// rng() % span so the streams are identical across platforms for a fixed
// seed; std::uniform_int_distribution is not specified tightly enough for
// byte-reproducible suites.
namespace testutil {

inline long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline hopfg::Rational rand_rational(std::mt19937_64& rng, long span) {
    hopfg::Rational q(pick(rng, -span, span), pick(rng, 1, span));
    q.canonicalize();
    return q;
}

inline hopfg::CycNumber rand_cyc(std::mt19937_64& rng, long N, long span = 4) {
    const long d = hopfg::euler_phi(N);
    hopfg::CycNumber out = hopfg::CycNumber::zero(N);
    for (long k = 0; k < d; ++k)
        out += hopfg::CycNumber::root_of_unity(N, k) * rand_rational(rng, span);
    return out;
}

inline hopfg::Vec rand_vec(std::mt19937_64& rng, int n, long N, long span = 3) {
    hopfg::Vec v = hopfg::zero_vec(n, N);
    for (int i = 0; i < n; ++i) v[i] = rand_cyc(rng, N, span);
    return v;
}

inline hopfg::Matrix rand_matrix(std::mt19937_64& rng, int rows, int cols, long N,
                                 long span = 3) {
    hopfg::Matrix m(rows, cols, N);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_cyc(rng, N, span);
    return m;
}

// Roughly one third of the entries nonzero, to exercise the sparse paths.
inline hopfg::Matrix rand_sparse_matrix(std::mt19937_64& rng, int rows, int cols, long N,
                                        long span = 3) {
    hopfg::Matrix m(rows, cols, N);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (pick(rng, 0, 2) == 0) m.at(i, j) = rand_cyc(rng, N, span);
    return m;
}

// Group algebra of Z/2 over the trivial grading group: basis {1, g}, both
// grouplike, antipode and pivot trivial. Small enough that every expected
// value is known by hand, which makes it the reference instance for the
// integral and trace machinery.
class GroupZ2Family final : public hopfg::HopfGFamily {
public:
    hopfg::Grade unit_grade() const override { return hopfg::Grade::of_index(0); }
    hopfg::Grade compose(const hopfg::Grade&, const hopfg::Grade&) const override {
        return hopfg::Grade::of_index(0);
    }
    hopfg::Grade inverse(const hopfg::Grade&) const override { return hopfg::Grade::of_index(0); }
    long modulus() const override { return 1; }
    std::string describe() const override { return "k[Z/2]"; }

protected:
    hopfg::GradedAlgebra build_algebra(const hopfg::Grade&) const override {
        hopfg::GradedAlgebra A;
        A.dim = 2;
        A.N = 1;
        A.unit = hopfg::unit_vec(2, 0, 1);
        A.labels = {"1", "g"};
        A.mul.resize(4);
        A.mul[0] = hopfg::SparseVec::from_dense(hopfg::unit_vec(2, 0, 1));
        A.mul[1] = hopfg::SparseVec::from_dense(hopfg::unit_vec(2, 1, 1));
        A.mul[2] = hopfg::SparseVec::from_dense(hopfg::unit_vec(2, 1, 1));
        A.mul[3] = hopfg::SparseVec::from_dense(hopfg::unit_vec(2, 0, 1));
        return A;
    }
    hopfg::SparseMatrix build_coproduct(const hopfg::Grade&, const hopfg::Grade&) const override {
        hopfg::SparseMatrix cop(4, 2, 1);
        cop.set(0, 0, hopfg::CycNumber::one(1));  // 1 -> 1 (x) 1
        cop.set(3, 1, hopfg::CycNumber::one(1));  // g -> g (x) g
        return cop;
    }
    hopfg::Vec build_counit() const override {
        hopfg::Vec eps = hopfg::zero_vec(2, 1);
        eps[0] = eps[1] = hopfg::CycNumber::one(1);
        return eps;
    }
    hopfg::SparseMatrix build_antipode(const hopfg::Grade&) const override {
        return hopfg::SparseMatrix::identity(2, 1);
    }
    hopfg::Vec build_pivot(const hopfg::Grade&) const override { return hopfg::unit_vec(2, 0, 1); }
};

}  // namespace testutil
