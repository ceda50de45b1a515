#pragma once

// Complex amplitude vectors over an EdgeBasis and the handful of BLAS-1
// operations the rest of the library needs.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ladderwalk {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/// Above this dimension squared norms use compensated summation.
inline constexpr std::size_t compensated_norm_threshold = 1000;

inline void require_dimension(const EdgeBasis &basis, std::span<const Amplitude> s) {
    if (s.size() != basis.size()) {
        throw std::invalid_argument("state dimension " + std::to_string(s.size()) +
                                    " does not match edge basis of size " +
                                    std::to_string(basis.size()));
    }
}

inline void require_same_size(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state dimensions differ: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

inline StateVector zero_state(const EdgeBasis &basis) { return StateVector(basis.size()); }

inline StateVector unit_state(const EdgeBasis &basis, Vertex tail, Vertex head) {
    StateVector s(basis.size());
    s[basis.index_of(tail, head)] = 1.0;
    return s;
}

/// <a|b>, antilinear in the first argument.
inline Amplitude inner(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    require_same_size(a, b);
    Amplitude acc{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

inline double norm_squared(std::span<const Amplitude> s) {
    if (s.size() <= compensated_norm_threshold) {
        double acc = 0.0;
        for (const auto &a : s) {
            acc += std::norm(a);
        }
        return acc;
    }
    // Neumaier summation
    double sum = 0.0;
    double carry = 0.0;
    for (const auto &a : s) {
        const double term = std::norm(a);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

inline double norm(std::span<const Amplitude> s) { return std::sqrt(norm_squared(s)); }

/// y += alpha * x
inline void axpy(Amplitude alpha, std::span<const Amplitude> x, std::span<Amplitude> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("axpy: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

inline void scale(std::span<Amplitude> s, Amplitude factor) {
    for (auto &a : s) {
        a *= factor;
    }
}

inline StateVector difference(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    require_same_size(a, b);
    StateVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

inline double distance(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    return norm(difference(a, b));
}

/// Largest modulus among the amplitudes at the sink vertex.
inline double sink_support(const EdgeBasis &basis, std::span<const Amplitude> s) {
    require_dimension(basis, s);
    double worst = 0.0;
    for (std::size_t i : sink_indices(basis)) {
        worst = std::max(worst, std::abs(s[i]));
    }
    return worst;
}

} // namespace ladderwalk
