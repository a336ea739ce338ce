#pragma once

#include <cstddef>
#include <vector>

namespace kolan::linalg {

// Dense row-major matrix. Sized for this problem (p=6, n in the tens);
// no view/expression machinery on purpose.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;

    const std::vector<double>& data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double inf_norm(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

struct EigenResult {
    std::vector<double> values;  // descending
    Matrix vectors;              // column j pairs with values[j]; orthonormal
};

// Symmetric eigendecomposition by cyclic Jacobi rotations. Sweeps until the
// largest off-diagonal magnitude drops below 1e-12 * max(1, ||A||inf),
// capped at 100 sweeps. Throws NotSymmetric / NoConvergence.
EigenResult eigen_sym(const Matrix& a);

}  // namespace kolan::linalg
