#include "kolan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kolan/errors.hpp"

namespace kolan::linalg {

namespace {
constexpr double kSymTolerance = 1e-12;
constexpr double kOffDiagTolerance = 1e-12;
constexpr int kMaxSweeps = 100;
}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            double v = at(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    }
    return out;
}

double inf_norm(const Matrix& a) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) row += std::fabs(a.at(r, c));
        best = std::max(best, row);
    }
    return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            best = std::max(best, std::fabs(a.at(r, c) - b.at(r, c)));
    return best;
}

EigenResult eigen_sym(const Matrix& input) {
    const std::size_t n = input.rows();
    const double scale = std::max(1.0, inf_norm(input));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(input.at(i, j) - input.at(j, i)) > kSymTolerance * scale)
                throw NotSymmetric();

    Matrix a = input;
    Matrix v = Matrix::identity(n);

    auto max_off_diag = [&]() {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::fabs(a.at(i, j)));
        return m;
    };

    int sweep = 0;
    while (max_off_diag() > kOffDiagTolerance * scale) {
        if (++sweep > kMaxSweeps) throw NoConvergence(kMaxSweeps);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a.at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(p, i) = a.at(i, p);
                    a.at(i, q) = s * aip + c * aiq;
                    a.at(q, i) = a.at(i, q);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * viq;
                    v.at(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.at(x, x) > a.at(y, y); });

    EigenResult res;
    res.values.resize(n);
    res.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.values[j] = a.at(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) res.vectors.at(i, j) = v.at(i, order[j]);
    }
    return res;
}

}  // namespace kolan::linalg
