// Dense exact vectors, matrices and order-3 tensors over Scalar.
//
// Conventions, fixed across the whole codebase:
//   - matrices act on column coordinate vectors; column j is the image of e_j
//   - tensor factors flatten row-major: e_i (x) e_j -> index i*n + j
//   - Tensor3 t: (e_i, e_j) -> sum_k t(i,j,k) e_k
#ifndef HOPFYB_LINALG_HPP
#define HOPFYB_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfyb/scalar.hpp"

namespace hopfyb {

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_matrix_error : std::runtime_error {
    int rank;
    singular_matrix_error(int r, int n)
        : std::runtime_error("singular matrix (rank " + std::to_string(r) + " of " +
                             std::to_string(n) + ")"),
          rank(r) {}
};

using Vec = std::vector<Scalar>;

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Vec apply(const Vec& v) const;
    Vec column(int c) const;

    // first (row, col) where the two matrices differ, row-major
    static std::optional<std::pair<int, int>> first_difference(const Matrix& a, const Matrix& b);

  private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix flip_matrix(int n);                 // e_i (x) e_j -> e_j (x) e_i on H (x) H
Matrix mat_inverse(const Matrix& a);       // exact Gauss-Jordan, first nonzero pivot
std::vector<Vec> nullspace(const Matrix& a);
Matrix rref(const Matrix& a);              // reduced row echelon form
int rank(const Matrix& a);

// Solves a x = b exactly. Returns nullopt when inconsistent; when the system is
// underdetermined, *free_dims (if given) receives a basis of the homogeneous
// solution space and the returned vector is one particular solution.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b, std::vector<Vec>* free_dims = nullptr);

bool vec_is_zero(const Vec& v);
Vec vec_sub(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

// span equality of two lists of vectors of common dimension, decided via RREF
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int dim);

// Checks (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) for an
// n^2 x n^2 operator r on H (x) H; both n^3 x n^3 composites are materialized
// and compared entrywise. Returns the first differing entry on failure.
struct BraidDefect {
    int row, col;
    Scalar lhs, rhs;
};
std::optional<BraidDefect> braid_equation_defect(const Matrix& r, int n);

class Tensor3 {
  public:
    Tensor3() : n_(0) {}
    explicit Tensor3(int n) : n_(n), e_(static_cast<std::size_t>(n) * n * n) {}

    int dim() const { return n_; }
    Scalar& at(int i, int j, int k) {
        return e_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return e_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    // the induced linear map H (x) H -> H as an n x n^2 matrix
    Matrix as_matrix() const;

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<Scalar> e_;
};

}  // namespace hopfyb

#endif
