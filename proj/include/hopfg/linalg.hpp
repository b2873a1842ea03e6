#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfg/cyclotomic.hpp"

namespace hopfg {

// Coordinate vectors over a fixed Q(zeta_N). All entries must share the
// modulus; the helpers below assume that and the matrix types enforce it.
using Vec = std::vector<CycNumber>;

Vec zero_vec(int n, long N);
Vec unit_vec(int n, int i, long N);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const CycNumber& c);
// Bilinear pairing sum_i a_i b_i (used for evaluating forms; no conjugation).
CycNumber dot(const Vec& a, const Vec& b);
// Tensor of coordinate vectors, left factor major: index = i*b.size() + j.
Vec kron_vec(const Vec& a, const Vec& b);

// Sparse vector: entries sorted by index, exact zeros dropped.
struct SparseVec {
    std::vector<std::pair<int, CycNumber>> ent;

    static SparseVec from_dense(const Vec& v);
    Vec to_dense(int n, long N) const;
    bool empty() const { return ent.empty(); }
};

class SparseMatrix;

/*
 * Dense matrix over Q(zeta_N), row major. Small and mid-size exact kernels
 * (elimination, Gram matrices, module actions at desk scale) use this type;
 * the sparse type below carries the large structured maps. The two are
 * interchangeable through to_sparse()/to_dense() without value change.
 */
class Matrix {
public:
    Matrix() : N_(1), rows_(0), cols_(0) {}
    Matrix(int rows, int cols, long N);
    static Matrix identity(int n, long N);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long modulus() const { return N_; }

    CycNumber& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycNumber& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const CycNumber& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Vec apply(const Vec& v) const;        // matrix * column
    Vec apply_row(const Vec& row) const;  // row * matrix

    Matrix col_slice(const std::vector<int>& cols) const;
    SparseMatrix to_sparse() const;

    static Matrix kron(const Matrix& A, const Matrix& B);

private:
    long N_;
    int rows_, cols_;
    std::vector<CycNumber> a_;
};

/*
 * Sparse matrix in compressed-column form: per column a sorted list of
 * (row, value). Used for coproduct/antipode/action matrices whose columns
 * are structurally sparse (tensor dimensions reach 729 at r = 3 and dense
 * storage there is both slow and memory hungry).
 */
class SparseMatrix {
public:
    SparseMatrix() : N_(1), rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols, long N);
    static SparseMatrix identity(int n, long N);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long modulus() const { return N_; }

    void set(int i, int j, const CycNumber& v);  // overwrite entry
    void add(int i, int j, const CycNumber& v);  // accumulate entry
    CycNumber get(int i, int j) const;
    const std::vector<std::pair<int, CycNumber>>& col(int j) const { return cols_data_[j]; }
    void set_col(int j, SparseVec v);
    std::size_t nnz() const;

    SparseVec apply(const SparseVec& v) const;
    Vec apply(const Vec& v) const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix operator*(const CycNumber& c) const;
    SparseMatrix transpose() const;
    bool operator==(const SparseMatrix& o) const;
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix to_dense() const;
    static SparseMatrix kron(const SparseMatrix& A, const SparseMatrix& B);

private:
    long N_;
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, CycNumber>>> cols_data_;
};

/*
 * Exact elimination. The forward pass is fraction-free in the Bareiss style:
 * the update M(i,j) <- (M(i,j) * pivot - M(i,k) * M(k,j)) / previous_pivot
 * keeps every intermediate entry equal to a minor of the original matrix,
 * which controls coefficient growth; the division is exact in the field and
 * costs one inverse per pivot step. Pivot rows are chosen by fewest nonzeros
 * (ties by lowest index) so structured systems stay sparse; the choice is
 * deterministic, so results are reproducible byte for byte.
 */
struct Echelon {
    Matrix R;                     // reduced row echelon form
    std::vector<int> pivot_cols;  // ascending
    int rank = 0;
    int swap_sign = 1;            // parity of row swaps in the forward pass
};

Echelon rref(Matrix A);

// Columns form a basis of {x : Ax = 0}; cols == 0 when the kernel is trivial.
Matrix nullspace(const Matrix& A);

// A particular solution of Ax = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& A, const Vec& b);

int rank(const Matrix& A);
CycNumber det(const Matrix& A);
std::optional<Matrix> inverse(const Matrix& A);

}  // namespace hopfg
