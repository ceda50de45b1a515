#pragma once

/**
 * @file
 * Analytic dark states of the Grover walk on the ladder and orthonormal
 * bases of the dark subspaces.
 *
 * Face-cycle states a_i (eigenvalue -1) and d_i (eigenvalue +1) live on the
 * eight arcs around face i = 0..L-2. The short-path state b appears with a
 * loop at vertex 1, the long-path state c with a loop at vertex 2L; both have
 * eigenvalue -1. K = span{d_i}; M = span{a_i} plus b and/or c.
 *
 * Consecutive face-cycle states overlap by +-1/4, which makes the
 * Gram-Schmidt recursion solvable in closed form with U_k = U_k(2):
 *
 *     Phi_k  = 2 / sqrt(U_k U_{k+1}) * sum_{l<=k} (-1)^{k-l} U_l a_l
 *     Phi'_k = 2 / sqrt(U_k U_{k+1}) * sum_{l<=k}            U_l d_l
 */

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "chebyshev.hpp"
#include "graph.hpp"
#include "state.hpp"

namespace ladderwalk {

enum class CycleFamily {
    a, ///< eigenvalue -1
    d, ///< eigenvalue +1
};

struct FaceCycles {
    std::vector<StateVector> a;
    std::vector<StateVector> d;
};

/// Number of face-cycle states of each type: L - 1.
inline std::size_t face_cycle_count(const LadderSpec &spec) { return spec.length - 1; }

inline FaceCycles face_cycle_states(const EdgeBasis &basis) {
    const double w = 1.0 / std::sqrt(8.0);
    const std::size_t count = face_cycle_count(basis.spec());
    FaceCycles out;
    out.a.reserve(count);
    out.d.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Vertex bl = 2 * i, br = 2 * i + 1, tl = 2 * i + 2, tr = 2 * i + 3;
        auto put = [&](StateVector &v, Vertex from, Vertex to, double sign) {
            v[basis.index_of(from, to)] = sign * w;
        };
        StateVector a(basis.size());
        put(a, bl, tl, -1);
        put(a, tl, bl, -1);
        put(a, tl, tr, +1);
        put(a, tr, tl, +1);
        put(a, tr, br, -1);
        put(a, br, tr, -1);
        put(a, br, bl, +1);
        put(a, bl, br, +1);
        out.a.push_back(std::move(a));

        StateVector d(basis.size());
        put(d, bl, tl, +1);
        put(d, tl, bl, -1);
        put(d, tl, tr, +1);
        put(d, tr, tl, -1);
        put(d, tr, br, +1);
        put(d, br, tr, -1);
        put(d, br, bl, +1);
        put(d, bl, br, -1);
        out.d.push_back(std::move(d));
    }
    return out;
}

/// b = (-|(0,0)> + |(0,1)> + |(1,0)> - |(1,1)>) / 2. Requires the loop at 1.
inline StateVector short_path_state(const EdgeBasis &basis) {
    if (!has_short_loop(basis.spec().config)) {
        throw std::invalid_argument("short-path state needs the loop at vertex 1 (config 2 or 4)");
    }
    StateVector b(basis.size());
    b[basis.index_of(0, 0)] = -0.5;
    b[basis.index_of(0, 1)] = 0.5;
    b[basis.index_of(1, 0)] = 0.5;
    b[basis.index_of(1, 1)] = -0.5;
    return b;
}

/// Alternating path up the left rail between the loops at 0 and 2L.
inline StateVector long_path_state(const EdgeBasis &basis) {
    const auto &spec = basis.spec();
    if (!has_long_loop(spec.config)) {
        throw std::invalid_argument("long-path state needs the loop at vertex 2L (config 3 or 4)");
    }
    const std::size_t L = spec.length;
    const double w = 1.0 / std::sqrt(2.0 * static_cast<double>(L + 1));
    StateVector c(basis.size());
    c[basis.index_of(0, 0)] = -w;
    c[basis.index_of(2 * L, 2 * L)] = (L % 2 == 0 ? w : -w);
    for (std::size_t j = 0; j < L; ++j) {
        const double s = (j % 2 == 0 ? w : -w);
        c[basis.index_of(2 * j, 2 * j + 2)] = s;
        c[basis.index_of(2 * j + 2, 2 * j)] = s;
    }
    return c;
}

struct LoopStates {
    std::optional<StateVector> b;
    std::optional<StateVector> c;
};

/// Whichever of b, c the configuration admits.
inline LoopStates loop_states(const EdgeBasis &basis) {
    LoopStates out;
    if (has_short_loop(basis.spec().config)) {
        out.b = short_path_state(basis);
    }
    if (has_long_loop(basis.spec().config)) {
        out.c = long_path_state(basis);
    }
    return out;
}

/// Coefficients of v_k = alpha_k Phi_{k-1} + beta_k Phi_k. alpha_0 = 0.
inline double cycle_alpha(std::size_t k, const ChebyshevTable &u, CycleFamily family) {
    if (k == 0) {
        return 0.0;
    }
    const double mag = 0.5 * std::sqrt(u.at(k - 1) / u.at(k));
    return family == CycleFamily::a ? mag : -mag;
}

inline double cycle_beta(std::size_t k, const ChebyshevTable &u) {
    return 0.5 * std::sqrt(u.at(k + 1) / u.at(k));
}

struct OrthonormalCycles {
    std::vector<StateVector> phi;
    std::vector<double> alpha;
    std::vector<double> beta;
};

/// Closed-form Gram-Schmidt of a consecutive face-cycle family.
inline OrthonormalCycles orthonormalize_cycles(std::span<const StateVector> cycles,
                                               CycleFamily family) {
    OrthonormalCycles out;
    if (cycles.empty()) {
        return out;
    }
    const std::size_t n = cycles.size();
    const std::size_t dim = cycles.front().size();
    const auto u = chebyshev(n);
    for (std::size_t k = 0; k < n; ++k) {
        StateVector phi(dim);
        const double pref = 2.0 / std::sqrt(u[k] * u[k + 1]);
        for (std::size_t l = 0; l <= k; ++l) {
            double coeff = pref * u[l];
            if (family == CycleFamily::a && (k - l) % 2 == 1) {
                coeff = -coeff;
            }
            axpy(coeff, cycles[l], phi);
        }
        out.phi.push_back(std::move(phi));
        out.alpha.push_back(cycle_alpha(k, u, family));
        out.beta.push_back(cycle_beta(k, u));
    }
    return out;
}

/// Symmetric (L-1)x(L-1) coefficient matrix of a face-cycle projector.
class ThetaMatrix {
  public:
    ThetaMatrix() = default;
    explicit ThetaMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/**
 * Pi_A = sum_ij Theta_ij |a_i><a_j| with
 * Theta_ij = 4 (-1)^{i+j} U_i U_j sum_{k=max(i,j)}^{L-2} 1/(U_k U_{k+1});
 * the d-family (Pi_K) drops the sign factor.
 */
inline ThetaMatrix theta_matrix(std::size_t L, CycleFamily family) {
    if (L < 2) {
        throw std::invalid_argument("theta_matrix: no face cycles for L < 2");
    }
    const std::size_t n = L - 1;
    const auto u = chebyshev(L);
    std::vector<double> tail(n + 1, 0.0); // tail[m] = sum_{k=m}^{n-1} 1/(U_k U_{k+1})
    for (std::size_t k = n; k-- > 0;) {
        tail[k] = tail[k + 1] + 1.0 / (u[k] * u[k + 1]);
    }
    ThetaMatrix theta(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = 4.0 * u[i] * u[j] * tail[std::max(i, j)];
            if (family == CycleFamily::a && (i + j) % 2 == 1) {
                v = -v;
            }
            theta(i, j) = v;
        }
    }
    return theta;
}

/// Applies sum_k |e_k><e_k| for an orthonormal set.
inline StateVector project_onto(std::span<const StateVector> orthonormal,
                                std::span<const Amplitude> s) {
    StateVector out(s.size());
    for (const auto &e : orthonormal) {
        axpy(inner(e, s), e, out);
    }
    return out;
}

/// s - sum_k |e_k><e_k| s
inline StateVector project_out(std::span<const StateVector> orthonormal,
                               std::span<const Amplitude> s) {
    StateVector out(s.begin(), s.end());
    for (const auto &e : orthonormal) {
        axpy(-inner(e, out), e, out);
    }
    return out;
}

/// B = (b - 8^{-1/2} sum_i Theta_{i0} a_i) / sqrt(1 - Sigma(L)/2).
inline StateVector gram_schmidt_B(const EdgeBasis &basis, std::span<const StateVector> a_family) {
    StateVector b = short_path_state(basis);
    const std::size_t L = basis.spec().length;
    if (a_family.size() != face_cycle_count(basis.spec())) {
        throw std::invalid_argument("gram_schmidt_B: a-family size does not match the ladder");
    }
    if (L >= 2) {
        const auto theta = theta_matrix(L, CycleFamily::a);
        for (std::size_t i = 0; i < a_family.size(); ++i) {
            axpy(-theta(i, 0) / std::sqrt(8.0), a_family[i], b);
        }
    }
    scale(b, 1.0 / std::sqrt(1.0 - 0.5 * sigma(L)));
    return b;
}

inline StateVector gram_schmidt_B(const EdgeBasis &basis) {
    return gram_schmidt_B(basis, face_cycle_states(basis).a);
}

/// ||(1 - Pi_A) c||^2 = (L + 4 - Sigma(L) - 1/U_{L-1}) / (2(L+1)).
inline double long_path_residual_norm_squared(std::size_t L) {
    const auto u = chebyshev(L);
    return (static_cast<double>(L) + 4.0 - sigma(L, u) - 1.0 / chebyshev_tail(L, u)) /
           (2.0 * static_cast<double>(L + 1));
}

struct CprimeResult {
    StateVector vector;
    double residual_norm_squared = 0.0; ///< squared norm before normalization
};

/**
 * Normalized (1 - Pi_A [- Pi_B]) c. The face-cycle projector is applied
 * through its orthonormal basis phi; `B` is subtracted when given.
 */
inline CprimeResult gram_schmidt_Cprime(const EdgeBasis &basis, std::span<const StateVector> phi,
                                        const std::optional<StateVector> &B) {
    StateVector c = long_path_state(basis);
    if (B && !has_short_loop(basis.spec().config)) {
        throw std::invalid_argument("gram_schmidt_Cprime: B given for a configuration without b");
    }
    StateVector r = project_out(phi, c);
    if (B) {
        axpy(-inner(*B, r), *B, r);
    }
    const double n2 = norm_squared(r);
    scale(r, 1.0 / std::sqrt(n2));
    return {std::move(r), n2};
}

/**
 * Face-cycle, loop and orthonormalized dark states for one ladder.
 * M is built b-first: M = A (+) B (+) C'.
 */
struct DarkBasis {
    LadderSpec spec;
    std::vector<StateVector> a;
    std::vector<StateVector> d;
    std::optional<StateVector> b;
    std::optional<StateVector> c;

    OrthonormalCycles phi;       ///< A
    OrthonormalCycles phi_prime; ///< K
    std::optional<StateVector> B;
    std::optional<StateVector> C_prime;

    /// Orthonormal basis of K.
    std::vector<StateVector> k_basis() const { return phi_prime.phi; }

    /// Orthonormal basis of M.
    std::vector<StateVector> m_basis() const {
        std::vector<StateVector> out = phi.phi;
        if (B) {
            out.push_back(*B);
        }
        if (C_prime) {
            out.push_back(*C_prime);
        }
        return out;
    }

    std::vector<StateVector> orthonormal() const {
        auto out = k_basis();
        for (auto &v : m_basis()) {
            out.push_back(std::move(v));
        }
        return out;
    }

    std::size_t dimension() const { return phi.phi.size() + phi_prime.phi.size() + (B ? 1 : 0) + (C_prime ? 1 : 0); }

    /// Every analytic (non-orthogonalized) dark vector with its eigenvalue under U.
    std::vector<std::pair<StateVector, double>> eigenvectors() const {
        std::vector<std::pair<StateVector, double>> out;
        for (const auto &v : a) {
            out.emplace_back(v, -1.0);
        }
        for (const auto &v : d) {
            out.emplace_back(v, +1.0);
        }
        if (b) {
            out.emplace_back(*b, -1.0);
        }
        if (c) {
            out.emplace_back(*c, -1.0);
        }
        return out;
    }
};

inline DarkBasis build_dark_basis(const EdgeBasis &basis) {
    DarkBasis dark;
    dark.spec = basis.spec();
    auto cycles = face_cycle_states(basis);
    dark.a = std::move(cycles.a);
    dark.d = std::move(cycles.d);
    auto loops = loop_states(basis);
    dark.b = std::move(loops.b);
    dark.c = std::move(loops.c);
    dark.phi = orthonormalize_cycles(dark.a, CycleFamily::a);
    dark.phi_prime = orthonormalize_cycles(dark.d, CycleFamily::d);
    if (dark.b) {
        dark.B = gram_schmidt_B(basis, dark.a);
    }
    if (dark.c) {
        dark.C_prime = gram_schmidt_Cprime(basis, dark.phi.phi, dark.B).vector;
    }
    return dark;
}

/// (Pi_K + Pi_M) s.
inline StateVector project_dark(const DarkBasis &dark, std::span<const Amplitude> s) {
    const auto basis = dark.orthonormal();
    if (!basis.empty() && basis.front().size() != s.size()) {
        throw std::invalid_argument("project_dark: dimension mismatch");
    }
    return project_onto(basis, s);
}

inline StateVector project_dark(const EdgeBasis &basis, std::span<const Amplitude> s) {
    require_dimension(basis, s);
    return project_dark(build_dark_basis(basis), s);
}

/// Orthonormal basis of M for config 4 with c orthogonalized before b.
inline std::vector<StateVector> m_basis_c_first(const DarkBasis &dark) {
    if (!dark.b || !dark.c) {
        throw std::invalid_argument("m_basis_c_first needs both loop states");
    }
    std::vector<StateVector> out = dark.phi.phi;
    for (const StateVector *v : {&*dark.c, &*dark.b}) {
        StateVector r = project_out(out, *v);
        scale(r, 1.0 / norm(r));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace ladderwalk
