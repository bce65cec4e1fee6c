#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfyb/hopf.hpp"
#include "hopfyb/linalg.hpp"

using namespace hopfyb;

namespace {

Matrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(coeff(rng));
    return m;
}

// direct-expansion oracle for the Kronecker product entry
Scalar kron_entry(const Matrix& a, const Matrix& b, int r, int c) {
    return a.at(r / b.rows(), c / b.cols()) * b.at(r % b.rows(), c % b.cols());
}

}  // namespace

TEST_CASE("kron basics") {
    Matrix i2 = Matrix::identity(2);
    CHECK(kron(i2, i2) == Matrix::identity(4));
    Matrix swap(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    CHECK(kron(swap, Matrix::identity(1)) == swap);
}

TEST_CASE("kron mixed product identity on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
        Matrix c = random_matrix(rng, 2), d = random_matrix(rng, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        Matrix k = kron(a, b);
        for (int r = 0; r < 4; ++r)
            for (int cc = 0; cc < 4; ++cc) CHECK(k.at(r, cc) == kron_entry(a, b, r, cc));
    }
}

TEST_CASE("composition is associative on random matrices") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = random_matrix(rng, 3), b = random_matrix(rng, 3), c = random_matrix(rng, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("flip matrix") {
    CHECK(flip_matrix(1) == Matrix::identity(1));
    CHECK(flip_matrix(2) * flip_matrix(2) == Matrix::identity(4));
    for (int n = 2; n <= 8; ++n) CHECK(flip_matrix(n) * flip_matrix(n) == Matrix::identity(n * n));
    // e_3 (x) e_5 -> e_5 (x) e_3 in dimension 8
    Vec v(64);
    v[3 * 8 + 5] = Scalar(1);
    Vec w = flip_matrix(8).apply(v);
    CHECK(w[5 * 8 + 3].is_one());
    Scalar total;
    for (const auto& s : w) total += s;
    CHECK(total.is_one());
}

TEST_CASE("matrix inverse") {
    CHECK(mat_inverse(Matrix::identity(8)) == Matrix::identity(8));
    CHECK_THROWS_AS(mat_inverse(Matrix(2, 2)), singular_matrix_error);
    try {
        mat_inverse(Matrix(2, 2));
    } catch (const singular_matrix_error& e) {
        CHECK(e.rank == 0);
    }

    std::mt19937 rng(5);
    int inverted = 0;
    while (inverted < 10) {
        Matrix m = random_matrix(rng, 4);
        try {
            Matrix inv = mat_inverse(m);
            CHECK(m * inv == Matrix::identity(4));
            CHECK(inv * m == Matrix::identity(4));
            ++inverted;
        } catch (const singular_matrix_error&) {
        }
    }

    // symbolic entries
    Matrix m(2, 2);
    m.at(0, 0) = Scalar::parameter();
    m.at(0, 1) = Scalar(1);
    m.at(1, 1) = Scalar(1);
    Matrix inv = mat_inverse(m);
    CHECK(m * inv == Matrix::identity(2));
}

TEST_CASE("antipode of a_c2c2 inverts exactly") {
    HopfAlgebra h = a_c2c2();
    Matrix sinv = mat_inverse(h.antipode);
    CHECK(h.antipode * sinv == Matrix::identity(8));
    CHECK(sinv * h.antipode == Matrix::identity(8));
    // S has order 4 here, so S^-1 = S^3 differs from S
    CHECK(sinv != h.antipode);
    CHECK(sinv == h.antipode * h.antipode * h.antipode);
}

TEST_CASE("nullspace") {
    CHECK(nullspace(Matrix::identity(3)).empty());
    CHECK(nullspace(Matrix(2, 2)).size() == 2);
    Matrix m(2, 3);
    m.at(0, 0) = Scalar(1);
    m.at(0, 2) = Scalar(-1);
    m.at(1, 1) = Scalar(1);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    for (const auto& v : basis) CHECK(vec_is_zero(m.apply(v)));
}

TEST_CASE("solve_linear") {
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(2);
    m.at(1, 1) = Scalar::parameter();
    Vec b{Scalar(4), Scalar::parameter()};
    auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1].is_one());

    // inconsistent system
    Matrix z(2, 1);
    z.at(0, 0) = Scalar(1);
    z.at(1, 0) = Scalar(1);
    Vec rhs{Scalar(0), Scalar(1)};
    CHECK(!solve_linear(z, rhs).has_value());
}

TEST_CASE("span equality") {
    Vec a{Scalar(1), Scalar(-1), Scalar(0)};
    Vec b{Scalar(0), Scalar(1), Scalar(1)};
    Vec sum{Scalar(1), Scalar(0), Scalar(1)};
    Vec twice{Scalar(2), Scalar(-2), Scalar(0)};
    CHECK(same_span({a, b}, {sum, twice}, 3));
    CHECK(!same_span({a}, {b}, 3));
    CHECK(same_span({}, {}, 3));
}

TEST_CASE("braid defect of the flip is zero") {
    CHECK(!braid_equation_defect(flip_matrix(2), 2).has_value());
    Matrix not_braid = Matrix::identity(4);
    not_braid.at(0, 0) = Scalar(2);
    // scaled identity blocks fail the braid equation generically
    Matrix m(4, 4);
    m.at(0, 1) = Scalar(1);
    m.at(1, 0) = Scalar(1);
    m.at(2, 3) = Scalar(1);
    m.at(3, 2) = Scalar(2);
    CHECK(braid_equation_defect(m, 2).has_value());
}
