#pragma once

// Dense real symmetric eigensolver (cyclic Jacobi rotations).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ladderwalk {

/// Row-major dense real matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    double row_sum(std::size_t i) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += (*this)(i, j);
        }
        return acc;
    }

    /// max |A_ij - A_ji|
    double asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
            }
        }
        return worst;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct SymmetricEigen {
    std::vector<double> values; ///< ascending
    DenseMatrix vectors;        ///< column k belongs to values[k]
    std::size_t sweeps = 0;
};

inline double off_diagonal_norm(const DenseMatrix &a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                acc += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(acc);
}

/**
 * Cyclic Jacobi: row-by-row sweeps of plane rotations until the Frobenius
 * norm of the off-diagonal part falls below `tol`. Throws std::runtime_error
 * after `max_sweeps` sweeps without convergence.
 */
inline SymmetricEigen jacobi_eigen(DenseMatrix a, double tol = 1e-12, std::size_t max_sweeps = 100) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("jacobi_eigen: matrix is not square");
    }
    DenseMatrix v = DenseMatrix::identity(n);
    std::size_t sweep = 0;
    while (off_diagonal_norm(a) >= tol) {
        if (sweep == max_sweeps) {
            throw std::runtime_error("jacobi_eigen: no convergence within the sweep limit");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    SymmetricEigen out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

/// max_k || A v_k - lambda_k v_k ||_inf
inline double eigen_residual(const DenseMatrix &a, const SymmetricEigen &eig) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = -eig.values[k] * eig.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                acc += a(i, j) * eig.vectors(j, k);
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

} // namespace ladderwalk
