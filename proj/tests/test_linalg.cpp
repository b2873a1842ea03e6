#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfg/errors.hpp"
#include "hopfg/linalg.hpp"
#include "test_util.hpp"

using namespace hopfg;
using testutil::pick;
using testutil::rand_cyc;
using testutil::rand_matrix;
using testutil::rand_sparse_matrix;
using testutil::rand_vec;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
CycNumber det_cofactor(const Matrix& A) {
    const int n = A.rows();
    if (n == 1) return A.at(0, 0);
    CycNumber acc = CycNumber::zero(A.modulus());
    for (int j = 0; j < n; ++j) {
        if (A.at(0, j).is_zero()) continue;
        Matrix minor(n - 1, n - 1, A.modulus());
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = A.at(r, c);
            }
        CycNumber term = A.at(0, j) * det_cofactor(minor);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("kron convention: left factor major") {
    const long N = 4;
    Vec e0 = unit_vec(2, 0, N), e1 = unit_vec(3, 1, N);
    CHECK(vec_eq(kron_vec(e0, e1), unit_vec(6, 0 * 3 + 1, N)));
    Vec f1 = unit_vec(2, 1, N), f2 = unit_vec(3, 2, N);
    CHECK(vec_eq(kron_vec(f1, f2), unit_vec(6, 1 * 3 + 2, N)));

    std::mt19937_64 rng(0x5EEDull);
    Matrix A = rand_matrix(rng, 2, 3, N), B = rand_matrix(rng, 3, 2, N);
    Matrix K = Matrix::kron(A, B);
    REQUIRE(K.rows() == 6);
    REQUIRE(K.cols() == 6);
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 3; ++ib)
            for (int ja = 0; ja < 3; ++ja)
                for (int jb = 0; jb < 2; ++jb)
                    CHECK(K.at(ia * 3 + ib, ja * 2 + jb) == A.at(ia, ja) * B.at(ib, jb));
}

TEST_CASE("kron functoriality on vectors and products") {
    const long N = 8;
    std::mt19937_64 rng(0xABCDull);
    for (int t = 0; t < 25; ++t) {
        int m = static_cast<int>(pick(rng, 1, 3)), n = static_cast<int>(pick(rng, 1, 3));
        int p = static_cast<int>(pick(rng, 1, 3)), q = static_cast<int>(pick(rng, 1, 3));
        Matrix A = rand_matrix(rng, m, n, N, 2), B = rand_matrix(rng, p, q, N, 2);
        Vec x = rand_vec(rng, n, N, 2), y = rand_vec(rng, q, N, 2);
        CHECK(vec_eq(Matrix::kron(A, B).apply(kron_vec(x, y)),
                     kron_vec(A.apply(x), B.apply(y))));
    }
    for (int t = 0; t < 10; ++t) {
        Matrix A = rand_matrix(rng, 2, 2, N, 2), B = rand_matrix(rng, 2, 3, N, 2);
        Matrix C = rand_matrix(rng, 3, 2, N, 2), D = rand_matrix(rng, 2, 3, N, 2);
        CHECK(Matrix::kron(A, C) * Matrix::kron(B, D) == Matrix::kron(A * B, C * D));
    }
}

TEST_CASE("sparse and dense matrices agree") {
    const long N = 12;
    std::mt19937_64 rng(0xFACEull);
    for (int t = 0; t < 15; ++t) {
        int m = static_cast<int>(pick(rng, 1, 5)), k = static_cast<int>(pick(rng, 1, 5));
        int n = static_cast<int>(pick(rng, 1, 5));
        Matrix A = rand_sparse_matrix(rng, m, k, N, 2);
        Matrix B = rand_sparse_matrix(rng, k, n, N, 2);
        SparseMatrix As = A.to_sparse(), Bs = B.to_sparse();
        CHECK((As * Bs).to_dense() == A * B);
        CHECK(As.transpose().to_dense() == A.transpose());
        CHECK(SparseMatrix::kron(As, Bs).to_dense() == Matrix::kron(A, B));
        Vec x = rand_vec(rng, k, N, 2);
        CHECK(vec_eq(As.apply(x), A.apply(x)));
        SparseVec xs = SparseVec::from_dense(x);
        CHECK(vec_eq(As.apply(xs).to_dense(m, N), A.apply(x)));
        Matrix A2 = rand_sparse_matrix(rng, m, k, N, 2);
        CHECK((As + A2.to_sparse()).to_dense() == A + A2);
        CHECK((As - A2.to_sparse()).to_dense() == A - A2);
    }
    SparseMatrix id = SparseMatrix::identity(4, N);
    CHECK(id.to_dense() == Matrix::identity(4, N));
    CHECK(id.nnz() == 4);
}

TEST_CASE("sparse vectors normalize") {
    const long N = 8;
    Vec v = zero_vec(5, N);
    v[1] = CycNumber(3, N);
    v[4] = CycNumber::root_of_unity(8, 2);
    SparseVec s = SparseVec::from_dense(v);
    REQUIRE(s.ent.size() == 2);
    CHECK(s.ent[0].first == 1);
    CHECK(s.ent[1].first == 4);
    CHECK(vec_eq(s.to_dense(5, N), v));
    CHECK(SparseVec::from_dense(zero_vec(3, N)).empty());
}

TEST_CASE("rref, rank and nullspace") {
    const long N = 4;
    // Fixed rank-one example.
    Matrix A(2, 3, N);
    long vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = CycNumber(vals[i][j], N);
    Echelon e = rref(A);
    CHECK(e.rank == 1);
    REQUIRE(e.pivot_cols.size() == 1);
    CHECK(e.pivot_cols[0] == 0);
    Matrix ns = nullspace(A);
    CHECK(ns.cols() == 2);
    CHECK((A * ns).is_zero());

    Matrix Z(3, 3, N);
    CHECK(rank(Z) == 0);
    CHECK(nullspace(Z).cols() == 3);
    CHECK(rank(Matrix::identity(3, N)) == 3);
    CHECK(nullspace(Matrix::identity(3, N)).cols() == 0);

    std::mt19937_64 rng(0x917Aull);
    for (int t = 0; t < 20; ++t) {
        int m = static_cast<int>(pick(rng, 1, 5)), n = static_cast<int>(pick(rng, 1, 5));
        Matrix R = rand_sparse_matrix(rng, m, n, 8, 2);
        Matrix K = nullspace(R);
        if (K.cols() > 0) CHECK((R * K).is_zero());
        CHECK(rank(R) + K.cols() == n);
        // Nullspace columns are independent: their matrix has full column rank.
        if (K.cols() > 0) CHECK(rank(K) == K.cols());
    }
}

TEST_CASE("solve") {
    const long N = 8;
    std::mt19937_64 rng(0x501Eull);
    for (int t = 0; t < 20; ++t) {
        int m = static_cast<int>(pick(rng, 1, 5)), n = static_cast<int>(pick(rng, 1, 5));
        Matrix A = rand_matrix(rng, m, n, N, 2);
        Vec x = rand_vec(rng, n, N, 2);
        Vec b = A.apply(x);
        auto sol = solve(A, b);
        REQUIRE(sol.has_value());
        CHECK(vec_eq(A.apply(*sol), b));
    }
    Matrix A(2, 1, N);
    A.at(0, 0) = CycNumber::one(N);
    A.at(1, 0) = CycNumber::one(N);
    Vec b = {CycNumber::one(N), CycNumber(2, N)};
    CHECK(!solve(A, b).has_value());
}

TEST_CASE("determinant against the cofactor oracle") {
    const long N = 12;
    std::mt19937_64 rng(0xDE7ull);
    for (int t = 0; t < 20; ++t) {
        Matrix A = rand_matrix(rng, 3, 3, N, 2);
        CHECK(det(A) == det_cofactor(A));
    }
    for (int t = 0; t < 8; ++t) {
        Matrix A = rand_matrix(rng, 4, 4, 8, 2), B = rand_matrix(rng, 4, 4, 8, 2);
        CHECK(det(A * B) == det(A) * det(B));
    }
    CHECK(det(Matrix::identity(5, N)) == CycNumber::one(N));

    // Singular by construction: third row = first + second.
    Matrix S = rand_matrix(rng, 3, 3, N, 2);
    for (int j = 0; j < 3; ++j) S.at(2, j) = S.at(0, j) + S.at(1, j);
    CHECK(det(S) == CycNumber::zero(N));

    // Row swap flips the sign.
    Matrix A = rand_matrix(rng, 3, 3, N, 2);
    Matrix B = A;
    for (int j = 0; j < 3; ++j) std::swap(B.at(0, j), B.at(1, j));
    CHECK(det(B) == -det(A));
}

TEST_CASE("inverse") {
    const long N = 8;
    std::mt19937_64 rng(0x1472ull);
    int done = 0;
    while (done < 10) {
        Matrix A = rand_matrix(rng, 4, 4, N, 2);
        if (det(A).is_zero()) continue;
        auto Ai = inverse(A);
        REQUIRE(Ai.has_value());
        CHECK(A * *Ai == Matrix::identity(4, N));
        CHECK(*Ai * A == Matrix::identity(4, N));
        ++done;
    }
    Matrix S(2, 2, N);
    S.at(0, 0) = CycNumber::one(N);
    S.at(1, 0) = CycNumber::one(N);
    CHECK(!inverse(S).has_value());
}

TEST_CASE("vector helpers") {
    const long N = 8;
    std::mt19937_64 rng(0x8181ull);
    Vec a = rand_vec(rng, 6, N), b = rand_vec(rng, 6, N);
    CHECK(vec_eq(vec_sub(vec_add(a, b), b), a));
    CHECK(vec_is_zero(vec_sub(a, a)));
    CHECK(dot(a, b) == dot(b, a));
    CycNumber c = rand_cyc(rng, N);
    CHECK(dot(vec_scale(a, c), b) == c * dot(a, b));
}
