#pragma once

/**
 * @file
 * Grover walk with an absorbing sink.
 *
 * One step is U = C R followed by the sink projector: R is the flip-flop
 * shift (swap each arc with its reversal, fix loops), C the Grover coin
 * 2|Psi_v><Psi_v| - I_v on every vertex subspace. All operators act
 * matrix-free in O(|E|).
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "state.hpp"

namespace ladderwalk {

/// Grover diffusion on one vertex slice: a -> (2/d) sum(a) - a.
struct GroverCoin {
    void operator()(std::span<Amplitude> slice) const {
        Amplitude sum{};
        for (const auto &a : slice) {
            sum += a;
        }
        const Amplitude mean2 = sum * (2.0 / static_cast<double>(slice.size()));
        for (auto &a : slice) {
            a = mean2 - a;
        }
    }
};

template <class Coin>
concept VertexCoin = requires(const Coin &c, std::span<Amplitude> s) { c(s); };

inline void apply_shift(const EdgeBasis &basis, std::span<Amplitude> s) {
    require_dimension(basis, s);
    const auto &rev = basis.reversal();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (rev[i] > i) {
            std::swap(s[i], s[rev[i]]);
        }
    }
}

template <VertexCoin Coin = GroverCoin>
void apply_coin(const EdgeBasis &basis, std::span<Amplitude> s, const Coin &coin = {}) {
    require_dimension(basis, s);
    for (const auto &slice : basis.slices()) {
        coin(s.subspan(slice.offset, slice.degree));
    }
}

/// Zeroes the sink subspace in place.
inline void apply_sink_projector(const EdgeBasis &basis, std::span<Amplitude> s) {
    require_dimension(basis, s);
    for (std::size_t i : sink_indices(basis)) {
        s[i] = 0.0;
    }
}

inline StateVector shift(const EdgeBasis &basis, StateVector s) {
    apply_shift(basis, s);
    return s;
}

template <VertexCoin Coin = GroverCoin>
StateVector coin(const EdgeBasis &basis, StateVector s, const Coin &c = {}) {
    apply_coin(basis, s, c);
    return s;
}

/// U s = C R s.
template <VertexCoin Coin = GroverCoin>
StateVector evolve(const EdgeBasis &basis, StateVector s, const Coin &c = {}) {
    apply_shift(basis, s);
    apply_coin(basis, s, c);
    return s;
}

/// U^T s = R C s. U is real orthogonal, so this is also its adjoint.
template <VertexCoin Coin = GroverCoin>
StateVector evolve_adjoint(const EdgeBasis &basis, StateVector s, const Coin &c = {}) {
    apply_coin(basis, s, c);
    apply_shift(basis, s);
    return s;
}

/// Pi U s.
template <VertexCoin Coin = GroverCoin>
StateVector step_with_sink(const EdgeBasis &basis, StateVector s, const Coin &c = {}) {
    apply_shift(basis, s);
    apply_coin(basis, s, c);
    apply_sink_projector(basis, s);
    return s;
}

/// Amplitudes x, y, z on |(0,2)>, |(0,1)>, |(0,0)>.
struct InitialState {
    Amplitude x{};
    Amplitude y{};
    Amplitude z{};

    double norm_squared() const { return std::norm(x) + std::norm(y) + std::norm(z); }

    bool is_normalized(double tol = 1e-9) const { return std::abs(norm_squared() - 1.0) <= tol; }

    InitialState normalized() const {
        const double n = std::sqrt(norm_squared());
        if (n == 0.0) {
            throw std::invalid_argument("initial state is the zero vector");
        }
        return {x / n, y / n, z / n};
    }

    StateVector to_state(const EdgeBasis &basis) const {
        StateVector s(basis.size());
        s[basis.index_of(0, 2)] = x;
        s[basis.index_of(0, 1)] = y;
        s[basis.index_of(0, 0)] = z;
        return s;
    }
};

/// S(0), ..., S(t_max) with S(t) = ||(Pi U)^t psi0||^2.
inline std::vector<double> survival_series(const EdgeBasis &basis, const InitialState &init,
                                           std::size_t t_max) {
    std::vector<double> out;
    out.reserve(t_max + 1);
    StateVector s = init.to_state(basis);
    out.push_back(norm_squared(s));
    for (std::size_t t = 1; t <= t_max; ++t) {
        s = step_with_sink(basis, std::move(s));
        out.push_back(norm_squared(s));
    }
    return out;
}

struct LimitOptions {
    double tol = 1e-10;
    std::size_t t_cap = 1'000'000;
};

struct LimitResult {
    double survival = 0.0;
    std::size_t steps = 0;
    bool converged = false;
};

/**
 * Iterates Pi U until |S(t) - S(t-w)| < tol with the window w = 4 |E|, or
 * until t_cap steps. A capped run returns converged = false.
 */
inline LimitResult simulate_limit(const EdgeBasis &basis, const InitialState &init,
                                  const LimitOptions &opts = {}) {
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("simulate_limit: tolerance must be positive");
    }
    const std::size_t window = 4 * basis.size();
    StateVector s = init.to_state(basis);
    std::deque<double> history{norm_squared(s)};
    std::size_t t = 0;
    while (t < opts.t_cap) {
        s = step_with_sink(basis, std::move(s));
        ++t;
        history.push_back(norm_squared(s));
        if (history.size() > window + 1) {
            history.pop_front();
        }
        if (history.size() == window + 1 && std::abs(history.back() - history.front()) < opts.tol) {
            return {history.back(), t, true};
        }
    }
    return {history.back(), t, false};
}

} // namespace ladderwalk
