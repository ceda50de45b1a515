#pragma once

// Chebyshev polynomials of the second kind at z = 2 and the series
// Sigma(L) = sum_{k=0}^{L-2} 1 / (U_k U_{k+1}) built from them.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ladderwalk {

/// Roots of l^2 - 4 l + 1 = 0.
inline const double lambda_plus = 2.0 + std::sqrt(3.0);
inline const double lambda_minus = 2.0 - std::sqrt(3.0);

inline constexpr double chebyshev_overflow_guard = 1e300;

/// U_0(2), ..., U_n(2) from U_{k+1} = 4 U_k - U_{k-1}.
class ChebyshevTable {
  public:
    explicit ChebyshevTable(std::size_t n) : values_{1.0} {
        values_.reserve(n + 1);
        if (n >= 1) {
            values_.push_back(4.0);
        }
        for (std::size_t k = 2; k <= n; ++k) {
            const double next = 4.0 * values_[k - 1] - values_[k - 2];
            if (next > chebyshev_overflow_guard) {
                throw std::overflow_error("U_" + std::to_string(k) +
                                          "(2) exceeds the overflow guard");
            }
            values_.push_back(next);
        }
    }

    std::size_t max_index() const { return values_.size() - 1; }
    double operator[](std::size_t k) const { return values_[k]; }
    double at(std::size_t k) const { return values_.at(k); }
    const std::vector<double> &values() const { return values_; }

  private:
    std::vector<double> values_;
};

inline ChebyshevTable chebyshev(std::size_t n) { return ChebyshevTable(n); }

/// Sigma(L); Sigma(1) = 0 (empty sum).
inline double sigma(std::size_t L, const ChebyshevTable &u) {
    if (L == 0) {
        throw std::invalid_argument("sigma: L must be at least 1");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k + 2 <= L; ++k) {
        acc += 1.0 / (u.at(k) * u.at(k + 1));
    }
    return acc;
}

inline double sigma(std::size_t L) { return sigma(L, chebyshev(L == 0 ? 0 : L)); }

/// U_{L-1}(2), with U_0 = 1 covering L = 1.
inline double chebyshev_tail(std::size_t L, const ChebyshevTable &u) { return u.at(L - 1); }

/// Sigma(40) stands in for the limit; the tail beyond it is below 1e-40.
inline constexpr std::size_t sigma_infinity_proxy_length = 40;

inline double sigma_infinity() {
    static const double value = sigma(sigma_infinity_proxy_length);
    return value;
}

} // namespace ladderwalk
