#pragma once

/**
 * @file
 * Bundled invariant checks over L = 1..L_max and all four configurations:
 * unitarity, analytic dark eigenvectors, orthonormality of the dark basis,
 * the Theta-sum identities, the dark-dimension census, the Dirichlet
 * transition-matrix boundary check and agreement of closed forms with the projector.
 *
 * The coin is a template parameter so a deliberately broken coin can be fed
 * through the same checks.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "darkspace.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "walk.hpp"

namespace ladderwalk {

/// sum_j (-1)^{j+1} Theta_{0j}; closed form -2 (1 - Sigma(L) - 1/U_{L-1}).
inline double theta_first_row_alternating_sum(const ThetaMatrix &theta) {
    double acc = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        acc += (j % 2 == 1 ? 1.0 : -1.0) * theta(0, j);
    }
    return acc;
}

/// sum_ij (-1)^{i+j} Theta_ij; closed form 2 (L - 2 + Sigma(L) + 1/U_{L-1}).
inline double theta_alternating_total(const ThetaMatrix &theta) {
    double acc = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        for (std::size_t j = 0; j < theta.size(); ++j) {
            acc += ((i + j) % 2 == 1 ? -1.0 : 1.0) * theta(i, j);
        }
    }
    return acc;
}

/// K(L) = 1/2 sum_{k=0}^{L-2} (U_{k+1}^2 + U_k^2 - 1) / (U_k U_{k+1}), which reduces to 2(L - 1).
inline double k_series(std::size_t L) {
    const auto u = chebyshev(L);
    double acc = 0.0;
    for (std::size_t k = 0; k + 2 <= L; ++k) {
        acc += (u[k + 1] * u[k + 1] + u[k] * u[k] - 1.0) / (u[k] * u[k + 1]);
    }
    return 0.5 * acc;
}

/**
 * U_k^2 - U_{k+1} U_{k-1} - 1, which vanishes identically. The products are
 * split into head and fma-recovered tail so the cancellation is exact while
 * U_k fits the 53-bit mantissa (k <= 27).
 */
inline double pell_residual(std::size_t k, const ChebyshevTable &u) {
    if (k == 0 || k + 1 > u.max_index()) {
        throw std::out_of_range("pell_residual: need 1 <= k < table size - 1");
    }
    const double a = u[k], lo = u[k - 1], hi = u[k + 1];
    const double sq = a * a;
    const double sq_err = std::fma(a, a, -sq);
    const double pr = hi * lo;
    const double pr_err = std::fma(hi, lo, -pr);
    return ((sq - pr) - 1.0) + (sq_err - pr_err);
}

inline InitialState random_initial_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    InitialState s{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
    return s.normalized();
}

inline StateVector random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    StateVector s(dim);
    for (auto &a : s) {
        a = {g(rng), g(rng)};
    }
    return s;
}

struct CheckResult {
    std::string name;
    int config = 0; ///< 0 when the check does not depend on the configuration
    std::size_t length = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    std::size_t lmax = 6;
    std::uint64_t seed = 20200301;
    std::size_t random_states = 5;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto &c : checks) {
            n += c.passed ? 0 : 1;
        }
        return n;
    }
};

namespace detail {

inline void record(VerifyReport &rep, std::string name, int config, std::size_t L, double residual,
                   double tol) {
    rep.checks.push_back({std::move(name), config, L, residual, tol, residual <= tol});
}

inline void record_bool(VerifyReport &rep, std::string name, int config, std::size_t L, bool ok) {
    rep.checks.push_back({std::move(name), config, L, ok ? 0.0 : 1.0, 0.0, ok});
}

} // namespace detail

template <VertexCoin Coin = GroverCoin>
VerifyReport run_verification(const VerifyOptions &opts, const Coin &coin = {}) {
    VerifyReport rep;
    rep.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);

    for (std::size_t L = 1; L <= opts.lmax; ++L) {
        // configuration-independent identities
        if (L >= 2) {
            const auto u = chebyshev(L);
            const double sg = sigma(L, u);
            const double iu = 1.0 / chebyshev_tail(L, u);
            const auto th = theta_matrix(L, CycleFamily::a);
            const auto thp = theta_matrix(L, CycleFamily::d);
            detail::record(rep, "theta00_equals_4sigma", 0, L,
                           std::max(std::abs(th(0, 0) - 4 * sg), std::abs(thp(0, 0) - 4 * sg)), 1e-9);
            detail::record(rep, "theta_row_sum_identity", 0, L,
                           std::abs(theta_first_row_alternating_sum(th) + 2 * (1 - sg - iu)), 1e-9);
            detail::record(rep, "theta_total_identity", 0, L,
                           std::abs(theta_alternating_total(th) - 2 * (static_cast<double>(L) - 2 + sg + iu)),
                           1e-9);
            detail::record(rep, "k_series_identity", 0, L, std::abs(k_series(L) - 2.0 * static_cast<double>(L - 1)),
                           1e-9);
            const auto un = chebyshev(L);
            detail::record(rep, "chebyshev_pell_identity", 0, L, std::abs(pell_residual(L - 1, un)), 1e-9);
        }
        const auto dir = dirichlet_support_check(L);
        detail::record_bool(rep, "dirichlet_support", 0, L, dir.passed());

        for (int id = 1; id <= 4; ++id) {
            const LadderSpec spec{config_from_int(id), L};
            const auto basis = build_ladder(spec);
            const auto dim = basis.size();

            double unitarity = 0.0, involution = 0.0;
            for (std::size_t r = 0; r < opts.random_states; ++r) {
                const auto s = random_state(dim, rng);
                const double n0 = norm(s);
                unitarity = std::max(unitarity, std::abs(norm(evolve(basis, s, coin)) - n0) / n0);
                involution = std::max(involution, distance(shift(basis, shift(basis, s)), s) / n0);
                involution = std::max(involution, distance(ladderwalk::coin(basis, ladderwalk::coin(basis, s, coin), coin), s) / n0);
            }
            detail::record(rep, "unitarity", id, L, unitarity, 1e-12);
            detail::record(rep, "involutions", id, L, involution, 1e-12);

            const auto dark = build_dark_basis(basis);
            double eig_res = 0.0, sink = 0.0;
            for (const auto &[v, lambda] : dark.eigenvectors()) {
                auto w = step_with_sink(basis, v, coin);
                axpy(-lambda, v, w);
                eig_res = std::max(eig_res, norm(w));
                sink = std::max(sink, sink_support(basis, v));
            }
            detail::record(rep, "dark_eigenvectors", id, L, eig_res, 1e-12);
            detail::record(rep, "dark_sink_support", id, L, sink, 0.0);

            const auto ortho = dark.orthonormal();
            double gram = 0.0;
            for (std::size_t i = 0; i < ortho.size(); ++i) {
                for (std::size_t j = 0; j < ortho.size(); ++j) {
                    gram = std::max(gram, std::abs(inner(ortho[i], ortho[j]) - (i == j ? 1.0 : 0.0)));
                }
            }
            detail::record(rep, "orthonormality", id, L, gram, 1e-10);

            const auto bright = bright_space(basis, {}, coin);
            const auto dark_dim = dim - bright.dimension();
            detail::record(rep, "dark_dimension", id, L,
                           std::abs(static_cast<double>(dark_dim) - static_cast<double>(dark_dimension_analytic(spec))),
                           0.0);

            double closed = 0.0;
            for (std::size_t r = 0; r < opts.random_states; ++r) {
                const auto init = random_initial_state(rng);
                const double proj = norm_squared(project_dark(dark, init.to_state(basis)));
                closed = std::max(closed, std::abs(total(spec.config, L, init).total - proj));
            }
            detail::record(rep, "closed_form_vs_projector", id, L, closed, 1e-10);
        }
    }
    return rep;
}

inline void write_verify_report(std::ostream &os, const VerifyReport &rep) {
    os << "seed " << rep.seed << '\n';
    for (const auto &c : rep.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (c.config != 0) {
            os << " config=" << c.config;
        }
        os << " L=" << c.length << " residual=" << format_number(c.residual)
           << " tol=" << format_number(c.tolerance) << '\n';
    }
    os << (rep.passed() ? "all checks passed" : std::to_string(rep.failures()) + " check(s) failed") << " ("
       << rep.checks.size() << " total)\n";
}

} // namespace ladderwalk
