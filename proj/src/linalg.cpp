#include "hopfyb/linalg.hpp"

namespace hopfyb {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    // ikj order so whole rows of o are skipped on zero entries
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix diff shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw dimension_error("matrix apply shape mismatch");
    Vec r(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            if (at(i, j).is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

Vec Matrix::column(int c) const {
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = at(i, c);
    return r;
}

std::optional<std::pair<int, int>> Matrix::first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("comparing matrices of different shape");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

Matrix flip_matrix(int n) {
    Matrix r(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j * n + i, i * n + j) = Scalar(1);
    return r;
}

namespace {

// Gauss-Jordan on an augmented matrix [a | rhs]; pivots on the first nonzero
// entry of each column. Returns pivot columns.
std::vector<int> gauss_jordan(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix rref(const Matrix& a) {
    Matrix m = a;
    gauss_jordan(m);
    return m;
}

int rank(const Matrix& a) {
    Matrix m = a;
    return static_cast<int>(gauss_jordan(m).size());
}

Matrix mat_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("inverting a non-square matrix");
    const int n = a.rows();
    Matrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n + i) = Scalar(1);
    }
    std::vector<int> pivots = gauss_jordan(m);
    int r = 0;
    for (int c : pivots)
        if (c < n) ++r;
    if (r < n) throw singular_matrix_error(r, n);
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
    return inv;
}

std::vector<Vec> nullspace(const Matrix& a) {
    Matrix m = a;
    std::vector<int> pivots = gauss_jordan(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b, std::vector<Vec>* free_dims) {
    if (static_cast<int>(b.size()) != a.rows()) throw dimension_error("solve shape mismatch");
    Matrix m(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        m.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = gauss_jordan(m);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    Vec x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(static_cast<int>(r), a.cols());
    if (free_dims) {
        free_dims->clear();
        std::vector<bool> is_pivot(a.cols(), false);
        for (int c : pivots) is_pivot[c] = true;
        for (int free = 0; free < a.cols(); ++free) {
            if (is_pivot[free]) continue;
            Vec v(a.cols());
            v[free] = Scalar(1);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -m.at(static_cast<int>(r), free);
            free_dims->push_back(std::move(v));
        }
    }
    return x;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
    return r;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int dim) {
    auto to_rref = [dim](const std::vector<Vec>& rows) {
        Matrix m(static_cast<int>(rows.size()), dim);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
        Matrix r = rref(m);
        // drop zero rows for shape-independent comparison
        std::vector<Vec> out;
        for (int i = 0; i < r.rows(); ++i) {
            Vec v = Vec(dim);
            bool nz = false;
            for (int j = 0; j < dim; ++j) {
                v[j] = r.at(i, j);
                nz = nz || !v[j].is_zero();
            }
            if (nz) out.push_back(std::move(v));
        }
        return out;
    };
    return to_rref(a) == to_rref(b);
}

Matrix Tensor3::as_matrix() const {
    Matrix m(n_, n_ * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) m.at(k, i * n_ + j) = at(i, j, k);
    return m;
}

std::optional<BraidDefect> braid_equation_defect(const Matrix& r, int n) {
    if (r.rows() != n * n || r.cols() != n * n) throw dimension_error("operator is not n^2 x n^2");
    Matrix id = Matrix::identity(n);
    Matrix r1 = kron(r, id);   // r on legs 1,2
    Matrix r2 = kron(id, r);   // r on legs 2,3
    Matrix lhs = r1 * r2 * r1;
    Matrix rhs = r2 * r1 * r2;
    auto diff = Matrix::first_difference(lhs, rhs);
    if (!diff) return std::nullopt;
    return BraidDefect{diff->first, diff->second, lhs.at(diff->first, diff->second),
                       rhs.at(diff->first, diff->second)};
}

}  // namespace hopfyb
