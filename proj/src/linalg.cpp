#include "hopfg/linalg.hpp"

#include <algorithm>
#include <map>

namespace hopfg {

namespace {

void check_same_modulus(long a, long b, const char* what) {
    if (a != b)
        throw ModulusMismatch(std::string(what) + ": modulus " + std::to_string(a) + " vs " +
                              std::to_string(b));
}

}  // namespace

Vec zero_vec(int n, long N) { return Vec(n, CycNumber::zero(N)); }

Vec unit_vec(int n, int i, long N) {
    Vec v = zero_vec(n, N);
    v[i] = CycNumber::one(N);
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const Vec& a, const CycNumber& c) {
    Vec out = a;
    for (auto& x : out) x *= c;
    return out;
}

CycNumber dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    if (a.empty()) return CycNumber();
    CycNumber acc = CycNumber::zero(a[0].modulus());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

Vec kron_vec(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec out = zero_vec(static_cast<int>(a.size() * b.size()), a[0].modulus());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

SparseVec SparseVec::from_dense(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.ent.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

Vec SparseVec::to_dense(int n, long N) const {
    Vec v = zero_vec(n, N);
    for (const auto& [i, x] : ent) v[i] = x;
    return v;
}

Matrix::Matrix(int rows, int cols, long N)
    : N_(N),
      rows_(rows),
      cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, CycNumber::zero(N)) {}

Matrix Matrix::identity(int n, long N) {
    Matrix m(n, n, N);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycNumber::one(N);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_modulus(N_, o.N_, "matrix add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add: shape");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_modulus(N_, o.N_, "matrix sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub: shape");
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_modulus(N_, o.N_, "matrix mul");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix mul: inner dimension");
    Matrix m(rows_, o.cols_, N_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycNumber& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator*(const CycNumber& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, N_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    check_same_modulus(N_, o.N_, "matrix compare");
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix apply: size");
    Vec out = zero_vec(rows_, N_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    }
    return out;
}

Vec Matrix::apply_row(const Vec& row) const {
    if (static_cast<int>(row.size()) != rows_) throw DimensionMismatch("matrix apply_row: size");
    Vec out = zero_vec(cols_, N_);
    for (int i = 0; i < rows_; ++i) {
        if (row[i].is_zero()) continue;
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[j] += row[i] * at(i, j);
    }
    return out;
}

Matrix Matrix::col_slice(const std::vector<int>& cols) const {
    Matrix m(rows_, static_cast<int>(cols.size()), N_);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows_; ++i) m.at(i, static_cast<int>(j)) = at(i, cols[j]);
    return m;
}

SparseMatrix Matrix::to_sparse() const {
    SparseMatrix s(rows_, cols_, N_);
    for (int j = 0; j < cols_; ++j) {
        SparseVec col;
        for (int i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) col.ent.emplace_back(i, at(i, j));
        s.set_col(j, std::move(col));
    }
    return s;
}

Matrix Matrix::kron(const Matrix& A, const Matrix& B) {
    check_same_modulus(A.N_, B.N_, "kron");
    Matrix m(A.rows_ * B.rows_, A.cols_ * B.cols_, A.N_);
    for (int ia = 0; ia < A.rows_; ++ia)
        for (int ja = 0; ja < A.cols_; ++ja) {
            const CycNumber& a = A.at(ia, ja);
            if (a.is_zero()) continue;
            for (int ib = 0; ib < B.rows_; ++ib)
                for (int jb = 0; jb < B.cols_; ++jb) {
                    const CycNumber& b = B.at(ib, jb);
                    if (b.is_zero()) continue;
                    m.at(ia * B.rows_ + ib, ja * B.cols_ + jb) = a * b;
                }
        }
    return m;
}

SparseMatrix::SparseMatrix(int rows, int cols, long N)
    : N_(N), rows_(rows), cols_(cols), cols_data_(cols) {}

SparseMatrix SparseMatrix::identity(int n, long N) {
    SparseMatrix s(n, n, N);
    for (int i = 0; i < n; ++i) s.cols_data_[i].emplace_back(i, CycNumber::one(N));
    return s;
}

void SparseMatrix::set(int i, int j, const CycNumber& v) {
    auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& p, int row) { return p.first < row; });
    if (it != col.end() && it->first == i) {
        if (v.is_zero())
            col.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        col.insert(it, {i, v});
    }
}

void SparseMatrix::add(int i, int j, const CycNumber& v) {
    if (v.is_zero()) return;
    auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& p, int row) { return p.first < row; });
    if (it != col.end() && it->first == i) {
        it->second += v;
        if (it->second.is_zero()) col.erase(it);
    } else {
        col.insert(it, {i, v});
    }
}

CycNumber SparseMatrix::get(int i, int j) const {
    const auto& col = cols_data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const auto& p, int row) { return p.first < row; });
    if (it != col.end() && it->first == i) return it->second;
    return CycNumber::zero(N_);
}

void SparseMatrix::set_col(int j, SparseVec v) { cols_data_[j] = std::move(v.ent); }

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_data_) n += c.size();
    return n;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    std::map<int, CycNumber> acc;
    for (const auto& [j, x] : v.ent) {
        if (j < 0 || j >= cols_) throw DimensionMismatch("sparse apply: index");
        for (const auto& [i, a] : cols_data_[j]) {
            auto it = acc.find(i);
            if (it == acc.end())
                acc.emplace(i, a * x);
            else
                it->second += a * x;
        }
    }
    SparseVec out;
    for (auto& [i, x] : acc)
        if (!x.is_zero()) out.ent.emplace_back(i, std::move(x));
    return out;
}

Vec SparseMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("sparse apply: size");
    Vec out = zero_vec(rows_, N_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, a] : cols_data_[j]) out[i] += a * v[j];
    }
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    check_same_modulus(N_, o.N_, "sparse mul");
    if (cols_ != o.rows_) throw DimensionMismatch("sparse mul: inner dimension");
    SparseMatrix out(rows_, o.cols_, N_);
    for (int j = 0; j < o.cols_; ++j) {
        std::map<int, CycNumber> acc;
        for (const auto& [k, b] : o.cols_data_[j])
            for (const auto& [i, a] : cols_data_[k]) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, a * b);
                else
                    it->second += a * b;
            }
        auto& col = out.cols_data_[j];
        for (auto& [i, x] : acc)
            if (!x.is_zero()) col.emplace_back(i, std::move(x));
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    check_same_modulus(N_, o.N_, "sparse add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sparse add: shape");
    SparseMatrix out = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) out.add(i, j, v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    check_same_modulus(N_, o.N_, "sparse sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sparse sub: shape");
    SparseMatrix out = *this;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : o.cols_data_[j]) out.add(i, j, -v);
    return out;
}

SparseMatrix SparseMatrix::operator*(const CycNumber& c) const {
    SparseMatrix out(rows_, cols_, N_);
    if (c.is_zero()) return out;
    out = *this;
    for (auto& col : out.cols_data_)
        for (auto& [i, v] : col) v *= c;
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols_, rows_, N_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) out.cols_data_[i].emplace_back(j, v);
    // Row indices arrive in increasing j per output column already sorted.
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    check_same_modulus(N_, o.N_, "sparse compare");
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int j = 0; j < cols_; ++j) {
        if (cols_data_[j].size() != o.cols_data_[j].size()) return false;
        for (std::size_t k = 0; k < cols_data_[j].size(); ++k) {
            if (cols_data_[j][k].first != o.cols_data_[j][k].first) return false;
            if (cols_data_[j][k].second != o.cols_data_[j][k].second) return false;
        }
    }
    return true;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_data_)
        if (!c.empty()) return false;
    return true;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, cols_, N_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : cols_data_[j]) m.at(i, j) = v;
    return m;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& A, const SparseMatrix& B) {
    check_same_modulus(A.N_, B.N_, "sparse kron");
    SparseMatrix out(A.rows_ * B.rows_, A.cols_ * B.cols_, A.N_);
    for (int ja = 0; ja < A.cols_; ++ja)
        for (int jb = 0; jb < B.cols_; ++jb) {
            auto& col = out.cols_data_[ja * B.cols_ + jb];
            for (const auto& [ia, a] : A.cols_data_[ja])
                for (const auto& [ib, b] : B.cols_data_[jb])
                    col.emplace_back(ia * B.rows_ + ib, a * b);
            std::sort(col.begin(), col.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    return out;
}

namespace {

struct Forward {
    Matrix M;
    std::vector<int> pivot_cols;
    int rank = 0;
    int swap_sign = 1;
    CycNumber last_pivot;  // Bareiss pivot chain tail (determinant up to sign)
};

Forward forward_eliminate(Matrix A) {
    const long N = A.modulus();
    Forward f{std::move(A), {}, 0, 1, CycNumber::one(N)};
    Matrix& M = f.M;
    const int rows = M.rows(), cols = M.cols();
    CycNumber prev = CycNumber::one(N);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Pivot row: fewest nonzeros among rows >= r with M(i,c) != 0.
        int best = -1;
        std::size_t best_nnz = 0;
        for (int i = r; i < rows; ++i) {
            if (M.at(i, c).is_zero()) continue;
            std::size_t nnz = 0;
            for (int j = c; j < cols; ++j)
                if (!M.at(i, j).is_zero()) ++nnz;
            if (best < 0 || nnz < best_nnz) {
                best = i;
                best_nnz = nnz;
            }
        }
        if (best < 0) continue;
        if (best != r) {
            for (int j = 0; j < cols; ++j) std::swap(M.at(r, j), M.at(best, j));
            f.swap_sign = -f.swap_sign;
        }
        const CycNumber pivot = M.at(r, c);
        const CycNumber prev_inv = prev.inv();
        for (int i = r + 1; i < rows; ++i) {
            const CycNumber mic = M.at(i, c);
            for (int j = c + 1; j < cols; ++j) {
                // Fraction-free Bareiss update; the division is exact.
                CycNumber v = M.at(i, j) * pivot;
                if (!mic.is_zero() && !M.at(r, j).is_zero()) v -= mic * M.at(r, j);
                M.at(i, j) = v * prev_inv;
            }
            M.at(i, c) = CycNumber::zero(N);
        }
        prev = pivot;
        f.pivot_cols.push_back(c);
        ++r;
    }
    f.rank = r;
    f.last_pivot = prev;
    return f;
}

}  // namespace

Echelon rref(Matrix A) {
    const long N = A.modulus();
    Forward f = forward_eliminate(std::move(A));
    Matrix& M = f.M;
    const int cols = M.cols();
    // Normalize pivot rows, then eliminate above each pivot.
    for (int k = f.rank - 1; k >= 0; --k) {
        const int pc = f.pivot_cols[k];
        const CycNumber inv = M.at(k, pc).inv();
        for (int j = pc; j < cols; ++j)
            if (!M.at(k, j).is_zero()) M.at(k, j) *= inv;
        for (int i = 0; i < k; ++i) {
            const CycNumber c = M.at(i, pc);
            if (c.is_zero()) continue;
            for (int j = pc; j < cols; ++j)
                if (!M.at(k, j).is_zero()) M.at(i, j) -= c * M.at(k, j);
            M.at(i, pc) = CycNumber::zero(N);
        }
    }
    return Echelon{std::move(f.M), std::move(f.pivot_cols), f.rank, f.swap_sign};
}

Matrix nullspace(const Matrix& A) {
    const long N = A.modulus();
    Echelon e = rref(A);
    const int cols = A.cols();
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < cols; ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Matrix basis(cols, static_cast<int>(free_cols.size()), N);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = CycNumber::one(N);
        for (int i = 0; i < e.rank; ++i)
            basis.at(e.pivot_cols[i], static_cast<int>(k)) = -e.R.at(i, fc);
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw DimensionMismatch("solve: rhs size");
    const long N = A.modulus();
    Matrix aug(A.rows(), A.cols() + 1, N);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    // Inconsistent iff the last column is a pivot column.
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == A.cols()) return std::nullopt;
    Vec x = zero_vec(A.cols(), N);
    for (int i = 0; i < e.rank; ++i) x[e.pivot_cols[i]] = e.R.at(i, A.cols());
    return x;
}

int rank(const Matrix& A) { return forward_eliminate(A).rank; }

CycNumber det(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("det: matrix not square");
    const long N = A.modulus();
    if (A.rows() == 0) return CycNumber::one(N);
    Forward f = forward_eliminate(A);
    if (f.rank < A.rows()) return CycNumber::zero(N);
    // After a full fraction-free sweep the final pivot is det(A) up to the
    // row-swap sign.
    CycNumber d = f.last_pivot;
    if (f.swap_sign < 0) d = -d;
    return d;
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("inverse: matrix not square");
    const int n = A.rows();
    const long N = A.modulus();
    Matrix aug(n, 2 * n, N);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = CycNumber::one(N);
    }
    Echelon e = rref(std::move(aug));
    if (e.rank < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.R.at(i, n + j);
    return inv;
}

}  // namespace hopfg
