#include <cmath>
#include <random>

#include <doctest.h>

#include "kolan/errors.hpp"
#include "kolan/linalg.hpp"

using namespace kolan;
using namespace kolan::linalg;

namespace {

Matrix random_symmetric(std::size_t n, std::mt19937& rng, double span = 10.0) {
    std::uniform_real_distribution<double> dist(-span, span);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double v = dist(rng);
            a.at(i, j) = v;
            a.at(j, i) = v;
        }
    }
    return a;
}

// residual oracle: ||A v - lambda v||_inf per eigenpair
double max_residual(const Matrix& a, const EigenResult& eig) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t k = 0; k < n; ++k) av += a.at(i, k) * eig.vectors.at(k, j);
            worst = std::max(worst, std::fabs(av - eig.values[j] * eig.vectors.at(i, j)));
        }
    }
    return worst;
}

double max_orthonormality_defect(const Matrix& v) {
    Matrix gram = v.transposed() * v;
    return max_abs_diff(gram, Matrix::identity(v.rows()));
}

}  // namespace

TEST_CASE("identity matrix has unit eigenvalues") {
    EigenResult eig = eigen_sym(Matrix::identity(3));
    for (double v : eig.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("analytic 2x2: [[2,1],[1,2]] -> (3,1) with (1,±1)/sqrt(2)") {
    Matrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = 2;
    EigenResult eig = eigen_sym(a);
    CHECK(eig.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // eigenvectors are sign-ambiguous; compare |components|
    CHECK(std::fabs(eig.vectors.at(0, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(std::fabs(eig.vectors.at(1, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(eig.vectors.at(0, 0) * eig.vectors.at(1, 0) > 0);  // same sign on PC1
    CHECK(eig.vectors.at(0, 1) * eig.vectors.at(1, 1) < 0);  // opposite on PC2
}

TEST_CASE("asymmetric input is refused") {
    Matrix a(2, 2);
    a.at(0, 1) = 1.0;
    a.at(1, 0) = 2.0;
    CHECK_THROWS_AS(eigen_sym(a), NotSymmetric);
}

TEST_CASE("100 random symmetric 6x6 matrices meet the residual contract") {
    std::mt19937 rng(20240612);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix a = random_symmetric(6, rng);
        EigenResult eig = eigen_sym(a);
        double bound = 1e-8 * std::max(1.0, inf_norm(a));
        CHECK(max_residual(a, eig) <= bound);
        CHECK(max_orthonormality_defect(eig.vectors) <= 1e-10);
        for (std::size_t j = 1; j < eig.values.size(); ++j)
            CHECK(eig.values[j - 1] >= eig.values[j]);
        double trace = 0.0, sum = 0.0;
        for (std::size_t i = 0; i < 6; ++i) trace += a.at(i, i);
        for (double v : eig.values) sum += v;
        CHECK(std::fabs(sum - trace) <= 1e-8 * std::max(1.0, std::fabs(trace)));
    }
}

TEST_CASE("random 2x2 matches the closed form within 1e-10") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        double a = dist(rng), b = dist(rng), c = dist(rng);
        Matrix m(2, 2);
        m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = b; m.at(1, 1) = c;
        EigenResult eig = eigen_sym(m);
        double mean = (a + c) / 2.0;
        double rad = std::sqrt((a - c) * (a - c) / 4.0 + b * b);
        CHECK(eig.values[0] == doctest::Approx(mean + rad).epsilon(1e-10));
        CHECK(eig.values[1] == doctest::Approx(mean - rad).epsilon(1e-10));
    }
}

TEST_CASE("rank-deficient matrices converge") {
    // outer product v v^T has eigenvalues (|v|^2, 0, 0)
    Matrix a(3, 3);
    double v[3] = {1.0, 2.0, 3.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = v[i] * v[j];
    EigenResult eig = eigen_sym(a);
    CHECK(eig.values[0] == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(std::fabs(eig.values[1]) <= 1e-10);
    CHECK(std::fabs(eig.values[2]) <= 1e-10);
}
