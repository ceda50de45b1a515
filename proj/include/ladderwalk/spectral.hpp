#pragma once

/**
 * @file
 * First-principles checks that the analytic dark states exhaust the dark
 * subspace.
 *
 * The bright space is the smallest U-invariant subspace containing the sink
 * subspace; its orthogonal complement is the dark subspace. It is grown as a
 * Krylov closure under U^T. Independently, the Dirichlet transition matrix of
 * the 3-regular ladder (config 4) must have no eigenvector vanishing on the
 * sink neighbours {2L-1, 2L}.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "jacobi.hpp"
#include "state.hpp"
#include "walk.hpp"

namespace ladderwalk {

/// 2(L-1) face cycles, plus b and c where the loops allow them.
inline std::size_t dark_dimension_analytic(const LadderSpec &spec) {
    return 2 * (spec.length - 1) + (has_short_loop(spec.config) ? 1 : 0) +
           (has_long_loop(spec.config) ? 1 : 0);
}

struct BrightSpace {
    std::vector<StateVector> basis; ///< orthonormal
    std::size_t rounds = 0;         ///< Krylov generations until closure

    std::size_t dimension() const { return basis.size(); }
};

struct KrylovOptions {
    double rank_tol = 1e-9;
};

namespace detail {

/// Two passes of modified Gram-Schmidt; returns the residual norm.
inline double orthogonalize(std::span<const StateVector> q, StateVector &w) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &e : q) {
            axpy(-inner(e, w), e, w);
        }
    }
    return norm(w);
}

} // namespace detail

/**
 * Grows span{(U^T)^t e : e in H_sink, t >= 0}. Each new basis vector is mapped
 * once; the span is closed when a generation contributes no direction with
 * residual above rank_tol.
 */
template <VertexCoin Coin = GroverCoin>
BrightSpace bright_space(const EdgeBasis &basis, const KrylovOptions &opts = {}, const Coin &coin = {}) {
    BrightSpace out;
    std::vector<StateVector> frontier;
    for (std::size_t i : sink_indices(basis)) {
        StateVector e(basis.size());
        e[i] = 1.0;
        if (detail::orthogonalize(out.basis, e) > opts.rank_tol) {
            scale(e, 1.0 / norm(e));
            out.basis.push_back(e);
            frontier.push_back(std::move(e));
        }
    }
    while (!frontier.empty()) {
        ++out.rounds;
        std::vector<StateVector> next;
        for (const auto &v : frontier) {
            StateVector w = evolve_adjoint(basis, v, coin);
            const double r = detail::orthogonalize(out.basis, w);
            if (r > opts.rank_tol) {
                scale(w, 1.0 / r);
                out.basis.push_back(w);
                next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline std::size_t bright_dimension(const EdgeBasis &basis, const KrylovOptions &opts = {}) {
    return bright_space(basis, opts).dimension();
}

inline std::size_t dark_dimension_numeric(const EdgeBasis &basis, const KrylovOptions &opts = {}) {
    return basis.size() - bright_dimension(basis, opts);
}

/// s minus its projection onto the bright space.
inline StateVector dark_projector_numeric(const BrightSpace &bright, std::span<const Amplitude> s) {
    StateVector out(s.begin(), s.end());
    for (const auto &e : bright.basis) {
        if (e.size() != s.size()) {
            throw std::invalid_argument("dark_projector_numeric: dimension mismatch");
        }
        axpy(-inner(e, out), e, out);
    }
    return out;
}

/**
 * (2L+1)x(2L+1) transition matrix of the simple random walk on the 3-regular
 * ladder with the sink row and column removed (Dirichlet boundary).
 */
inline DenseMatrix transition_matrix(std::size_t L) {
    const auto basis = build_ladder({LadderConfig::all_loops, L});
    const Vertex sink = basis.spec().sink();
    DenseMatrix t(sink, sink);
    for (const auto &e : basis.edges()) {
        if (e.tail != sink && e.head != sink) {
            t(e.tail, e.head) += 1.0 / static_cast<double>(basis.degree(e.tail));
        }
    }
    return t;
}

struct EigenCluster {
    double value = 0.0;
    std::size_t multiplicity = 0;
    double boundary_sigma_min = 0.0; ///< smallest singular value on {2L, 2L-1}
};

struct PropagationReplay {
    std::vector<Vertex> zeroed_order; ///< entries forced to zero, in deduction order
    bool all_zero = false;
};

struct DirichletReport {
    std::size_t length = 0;
    std::vector<double> eigenvalues;
    std::vector<EigenCluster> clusters;
    double eigen_residual = 0.0;
    std::size_t sweeps = 0;
    PropagationReplay replay;
    bool spectral_pass = false;

    bool passed() const { return spectral_pass && replay.all_zero; }
};

struct DirichletOptions {
    double jacobi_tol = 1e-12;
    std::size_t max_sweeps = 100;
    double cluster_gap = 1e-8;
    double rank_tol = 1e-8;
};

namespace detail {

/// Smallest of the m singular values of a 2 x m matrix given by its rows.
inline double smallest_singular_2xm(std::span<const double> r0, std::span<const double> r1) {
    const std::size_t m = r0.size();
    if (m == 1) {
        return std::hypot(r0[0], r1[0]);
    }
    if (m > 2) {
        return 0.0;
    }
    const double fro2 = r0[0] * r0[0] + r0[1] * r0[1] + r1[0] * r1[0] + r1[1] * r1[1];
    const double det = std::abs(r0[0] * r1[1] - r0[1] * r1[0]);
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
    const double smax = std::sqrt(0.5 * (fro2 + disc));
    return smax > 0.0 ? det / smax : 0.0;
}

} // namespace detail

/**
 * Seeds f(2L) = f(2L-1) = 0 and walks the eigen-equations (T f)(r) = mu f(r)
 * from row 2L downward. Whenever a row whose own entry is known to vanish has
 * a single unknown neighbour, that neighbour is forced to zero for every mu.
 */
inline PropagationReplay propagation_replay(const DenseMatrix &t) {
    const std::size_t n = t.rows();
    PropagationReplay out;
    std::vector<bool> known(n, false);
    known[n - 1] = true; // 2L
    if (n >= 2) {
        known[n - 2] = true; // 2L-1
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t r = n; r-- > 0;) {
            if (!known[r]) {
                continue;
            }
            std::size_t unknown = n;
            std::size_t count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (t(r, j) != 0.0 && !known[j]) {
                    unknown = j;
                    ++count;
                }
            }
            if (count == 1) {
                known[unknown] = true;
                out.zeroed_order.push_back(unknown);
                progress = true;
            }
        }
    }
    out.all_zero = std::all_of(known.begin(), known.end(), [](bool k) { return k; });
    return out;
}

inline DirichletReport dirichlet_support_check(std::size_t L, const DirichletOptions &opts = {}) {
    const DenseMatrix t = transition_matrix(L);
    const std::size_t n = t.rows();
    const auto eig = jacobi_eigen(t, opts.jacobi_tol, opts.max_sweeps);

    DirichletReport report;
    report.length = L;
    report.eigenvalues = eig.values;
    report.eigen_residual = eigen_residual(t, eig);
    report.sweeps = eig.sweeps;

    const std::size_t top = 2 * L, below = 2 * L - 1;
    report.spectral_pass = true;
    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && eig.values[end] - eig.values[end - 1] < opts.cluster_gap) {
            ++end;
        }
        std::vector<double> r0, r1;
        for (std::size_t c = k; c < end; ++c) {
            r0.push_back(eig.vectors(top, c));
            r1.push_back(eig.vectors(below, c));
        }
        EigenCluster cluster{eig.values[k], end - k, detail::smallest_singular_2xm(r0, r1)};
        if (cluster.boundary_sigma_min < opts.rank_tol) {
            report.spectral_pass = false;
        }
        report.clusters.push_back(cluster);
        k = end;
    }
    report.replay = propagation_replay(t);
    return report;
}

} // namespace ladderwalk
