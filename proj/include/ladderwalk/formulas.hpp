#pragma once

/**
 * @file
 * Closed-form limits of the survival probability for an initial state
 * x|(0,2)> + y|(0,1)> + z|(0,0)>.
 *
 *     S_1 = S_a + S_d             = |x - y|^2 Sigma(L)
 *     S_2 = S_1 + S_{b\a}
 *     S_3 = S_1 + S_{c\a}
 *     S_4 = S_2 + S_{c\{a,b}}
 *
 * Every formula accepts L = 1 through Sigma(1) = 0 and U_0 = 1.
 * Large-L forms use Sigma(40) in place of Sigma(infinity).
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "chebyshev.hpp"
#include "graph.hpp"
#include "walk.hpp"

namespace ladderwalk {

namespace detail {

struct LadderScalars {
    double L;
    double sigma;
    double inv_tail; ///< 1 / U_{L-1}
};

inline LadderScalars ladder_scalars(std::size_t L) {
    if (L == 0) {
        throw std::invalid_argument("ladder length must be at least 1");
    }
    const auto u = chebyshev(L);
    return {static_cast<double>(L), sigma(L, u), 1.0 / chebyshev_tail(L, u)};
}

} // namespace detail

/// S_a = S_d = |x - y|^2 Sigma(L) / 2.
inline double s_a(std::size_t L, const InitialState &p) {
    return 0.5 * std::norm(p.x - p.y) * detail::ladder_scalars(L).sigma;
}
inline double s_d(std::size_t L, const InitialState &p) { return s_a(L, p); }

inline double s1(std::size_t L, const InitialState &p) {
    return std::norm(p.x - p.y) * detail::ladder_scalars(L).sigma;
}

/// |x Sigma + y (1 - Sigma) - z|^2 / (4 - 2 Sigma)
inline double s_b_minus_a(std::size_t L, const InitialState &p) {
    const double sg = detail::ladder_scalars(L).sigma;
    return std::norm(p.x * sg + p.y * (1.0 - sg) - p.z) / (4.0 - 2.0 * sg);
}

/// |x - z + (y - x)(1 - Sigma - 1/U_{L-1}) / 2|^2 / (L + 4 - Sigma - 1/U_{L-1})
inline double s_c_minus_a(std::size_t L, const InitialState &p) {
    const auto [l, sg, iu] = detail::ladder_scalars(L);
    const Amplitude num = p.x - p.z + 0.5 * (p.y - p.x) * (1.0 - sg - iu);
    return std::norm(num) / (l + 4.0 - sg - iu);
}

inline double s_c_minus_ab(std::size_t L, const InitialState &p) {
    const auto [l, sg, iu] = detail::ladder_scalars(L);
    const Amplitude num = p.x - p.z + (2.0 * p.x - p.y - p.z) * iu / (2.0 - sg);
    const double overlap = 2.0 - sg - iu;
    const double den = 4.0 * (l + 4.0 - sg - iu - overlap * overlap / (4.0 - 2.0 * sg));
    return std::norm(num) / den;
}

// Large-L forms, remainders O(lambda_-^{2L}) except S_4 (O(lambda_-^L)).

inline double s1_asymptotic(const InitialState &p) { return std::norm(p.x - p.y) * sigma_infinity(); }

inline double s_b_minus_a_asymptotic(const InitialState &p) {
    const double sg = sigma_infinity();
    return std::norm(p.x * sg + p.y * (1.0 - sg) - p.z) / (4.0 - 2.0 * sg);
}

inline double s_c_minus_a_asymptotic(std::size_t L, const InitialState &p) {
    const double sg = sigma_infinity();
    const Amplitude num = p.x * (1.0 + sg) + p.y * (1.0 - sg) - 2.0 * p.z;
    return std::norm(num) / (4.0 * (static_cast<double>(L) + 4.0 - sg));
}

inline double s_c_minus_ab_asymptotic(std::size_t L, const InitialState &p) {
    const double sg = sigma_infinity();
    return std::norm(p.x - p.z) / (4.0 * (static_cast<double>(L) + 3.0 - 0.5 * sg));
}

inline double asymptotic_total(LadderConfig config, std::size_t L, const InitialState &p) {
    double total = s1_asymptotic(p);
    if (has_short_loop(config)) {
        total += s_b_minus_a_asymptotic(p);
    }
    if (config == LadderConfig::long_loop) {
        total += s_c_minus_a_asymptotic(L, p);
    } else if (config == LadderConfig::all_loops) {
        total += s_c_minus_ab_asymptotic(L, p);
    }
    return total;
}

struct SurvivalComponents {
    double s_a = 0.0;
    double s_d = 0.0;
    std::optional<double> s_b_minus_a;
    std::optional<double> s_c_minus_a;
    std::optional<double> s_c_minus_ab;

    double sum() const {
        return s_a + s_d + s_b_minus_a.value_or(0.0) + s_c_minus_a.value_or(0.0) +
               s_c_minus_ab.value_or(0.0);
    }
};

struct SurvivalReport {
    LadderConfig config = LadderConfig::cycles_only;
    std::size_t length = 1;
    InitialState init;
    SurvivalComponents components;
    double total = 0.0;
    double asymptotic_total = 0.0;
    std::optional<double> numeric_projector_total;
    std::optional<double> simulated_total;
    std::optional<bool> simulation_converged;
};

struct TotalOptions {
    bool auto_normalize = false;
    double normalization_tol = 1e-9;
};

/// Per-configuration sum of the closed-form components for one (config, L, init).
inline SurvivalReport total(LadderConfig config, std::size_t L, InitialState init,
                            const TotalOptions &opts = {}) {
    LadderSpec{config, L}.validate();
    if (!init.is_normalized(opts.normalization_tol)) {
        if (!opts.auto_normalize) {
            throw std::invalid_argument("initial state is not normalized");
        }
        init = init.normalized();
    }
    SurvivalReport r;
    r.config = config;
    r.length = L;
    r.init = init;
    r.components.s_a = s_a(L, init);
    r.components.s_d = s_d(L, init);
    if (has_short_loop(config)) {
        r.components.s_b_minus_a = s_b_minus_a(L, init);
    }
    if (config == LadderConfig::long_loop) {
        r.components.s_c_minus_a = s_c_minus_a(L, init);
    } else if (config == LadderConfig::all_loops) {
        r.components.s_c_minus_ab = s_c_minus_ab(L, init);
    }
    r.total = r.components.sum();
    r.asymptotic_total = asymptotic_total(config, L, init);
    return r;
}

/**
 * Initial states whose long-path contribution vanishes exponentially in L.
 * Config 3: z = (x (1 + Sigma) + y (1 - Sigma)) / 2. Config 4: x = z.
 */
struct SpecialInitialState {
    LadderConfig config;

    bool satisfied_by(const InitialState &p, double tol = 1e-12) const {
        if (config == LadderConfig::long_loop) {
            const double sg = sigma_infinity();
            return std::abs(p.z - 0.5 * (p.x * (1.0 + sg) + p.y * (1.0 - sg))) <= tol;
        }
        return std::abs(p.x - p.z) <= tol;
    }

    /// Normalized representative: y = 0 for config 3, x = z = 1/sqrt(2) for config 4.
    InitialState witness() const {
        if (config == LadderConfig::long_loop) {
            const double sg = sigma_infinity();
            const double x = 2.0 / std::sqrt(5.0 + 2.0 * sg + sg * sg);
            return {x, 0.0, 0.5 * x * (1.0 + sg)};
        }
        const double h = 1.0 / std::sqrt(2.0);
        return {h, 0.0, h};
    }
};

inline SpecialInitialState special_initial_state(LadderConfig config) {
    if (!has_long_loop(config)) {
        throw std::invalid_argument("special initial states exist only for configs 3 and 4");
    }
    return {config};
}

} // namespace ladderwalk
