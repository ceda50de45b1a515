#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ladderwalk/darkspace.hpp"
#include "ladderwalk/spectral.hpp"
#include "ladderwalk/verify.hpp"
#include "oracles.hpp"

using namespace ladderwalk;

namespace {

std::size_t support_size(const StateVector &v) {
    std::size_t n = 0;
    for (const auto &a : v) {
        n += (a != Amplitude{}) ? 1 : 0;
    }
    return n;
}

double real_inner(const StateVector &a, const StateVector &b) { return inner(a, b).real(); }

} // namespace

// Chebyshev table and Sigma

TEST(Chebyshev, FirstValuesMatchIntegerRecurrence) {
    const auto u = chebyshev(25);
    const auto exact = oracle::chebyshev_exact(25);
    EXPECT_EQ(u[0], 1.0);
    EXPECT_EQ(u[1], 4.0);
    EXPECT_EQ(u[2], 15.0);
    EXPECT_EQ(u[3], 56.0);
    EXPECT_EQ(u[4], 209.0);
    for (std::size_t k = 0; k <= 25; ++k) {
        EXPECT_EQ(u[k], static_cast<double>(exact[k]));
        if (k > 0) {
            EXPECT_GT(u[k], u[k - 1]);
        }
    }
}

TEST(Chebyshev, PellIdentity) {
    const auto u = chebyshev(21);
    for (std::size_t k = 1; k <= 20; ++k) {
        EXPECT_EQ(pell_residual(k, u), 0.0) << "k=" << k;
    }
}

TEST(Chebyshev, ClosedFormInRoots) {
    EXPECT_NEAR(lambda_plus * lambda_minus, 1.0, 1e-15);
    EXPECT_NEAR(lambda_plus + lambda_minus, 4.0, 1e-15);
    const auto u = chebyshev(30);
    for (std::size_t k = 0; k <= 30; ++k) {
        const double binet = (std::pow(lambda_plus, k + 1) - std::pow(lambda_minus, k + 1)) / (lambda_plus - lambda_minus);
        EXPECT_NEAR(u[k] / binet, 1.0, 1e-9) << "k=" << k;
    }
}

TEST(Chebyshev, OverflowGuard) {
    EXPECT_NO_THROW(chebyshev(500));
    EXPECT_THROW(chebyshev(600), std::overflow_error);
}

TEST(Sigma, ValuesAndLimit) {
    EXPECT_EQ(sigma(1), 0.0);
    EXPECT_NEAR(sigma(3), 4.0 / 15.0, 1e-15);
    EXPECT_NEAR(sigma(40), 0.26795, 5e-6);
    EXPECT_THROW(sigma(0), std::invalid_argument);
    for (std::size_t L = 1; L <= 30; ++L) {
        EXPECT_NEAR(sigma(L), static_cast<double>(oracle::sigma_exact(L)), 1e-15);
        // increments drop below one ulp past L = 14
        if (L > 1 && L <= 14) {
            EXPECT_GT(sigma(L), sigma(L - 1));
        } else if (L > 14) {
            EXPECT_GE(sigma(L), sigma(L - 1));
        }
        EXPECT_LT(sigma(L), 1.0 / (1.0 - lambda_minus * lambda_minus));
    }
    const double lm2 = lambda_minus * lambda_minus;
    EXPECT_NEAR(lm2 - lm2 * lm2, 0.066642, 1e-6);
    EXPECT_NEAR(1.0 / (1.0 - lm2), 1.07735, 1e-5);
    EXPECT_GT(sigma_infinity(), lm2 - lm2 * lm2);
}

// Face-cycle and loop states

TEST(FaceCycles, CountsAndSupport) {
    EXPECT_TRUE(face_cycle_states(build_ladder({LadderConfig::cycles_only, 1})).a.empty());
    const auto basis = build_ladder({LadderConfig::cycles_only, 2});
    const auto fc = face_cycle_states(basis);
    ASSERT_EQ(fc.a.size(), 1u);
    ASSERT_EQ(fc.d.size(), 1u);
    EXPECT_EQ(support_size(fc.a[0]), 8u);
    EXPECT_EQ(support_size(fc.d[0]), 8u);
    EXPECT_NEAR(norm(fc.a[0]), 1.0, 1e-15);
}

TEST(FaceCycles, OverlapPattern) {
    const auto basis = build_ladder({LadderConfig::all_loops, 5});
    const auto fc = face_cycle_states(basis);
    for (std::size_t i = 0; i < fc.a.size(); ++i) {
        EXPECT_EQ(sink_support(basis, fc.a[i]), 0.0);
        EXPECT_EQ(sink_support(basis, fc.d[i]), 0.0);
        for (std::size_t j = 0; j < fc.a.size(); ++j) {
            EXPECT_NEAR(real_inner(fc.a[i], fc.d[j]), 0.0, 1e-15);
            const auto gap = i > j ? i - j : j - i;
            const double aa = gap == 0 ? 1.0 : (gap == 1 ? 0.25 : 0.0);
            const double dd = gap == 0 ? 1.0 : (gap == 1 ? -0.25 : 0.0);
            EXPECT_NEAR(real_inner(fc.a[i], fc.a[j]), aa, 1e-15);
            EXPECT_NEAR(real_inner(fc.d[i], fc.d[j]), dd, 1e-15);
        }
    }
}

TEST(FaceCycles, OverlapWithInitialState) {
    std::mt19937_64 rng(11);
    const auto basis = build_ladder({LadderConfig::cycles_only, 4});
    const auto fc = face_cycle_states(basis);
    for (int r = 0; r < 10; ++r) {
        const auto init = oracle::random_init(rng);
        const auto psi = init.to_state(basis);
        for (std::size_t i = 0; i < fc.a.size(); ++i) {
            const Amplitude expected = i == 0 ? (init.y - init.x) / std::sqrt(8.0) : Amplitude{};
            EXPECT_LT(std::abs(inner(fc.a[i], psi) - expected), 1e-15);
            EXPECT_LT(std::abs(inner(fc.d[i], psi) + expected), 1e-15);
        }
    }
}

TEST(LoopStates, RequireTheirLoops) {
    EXPECT_THROW(short_path_state(build_ladder({LadderConfig::cycles_only, 3})), std::invalid_argument);
    EXPECT_THROW(short_path_state(build_ladder({LadderConfig::long_loop, 3})), std::invalid_argument);
    EXPECT_THROW(long_path_state(build_ladder({LadderConfig::cycles_only, 3})), std::invalid_argument);
    EXPECT_THROW(long_path_state(build_ladder({LadderConfig::short_loop, 3})), std::invalid_argument);
    const auto none = loop_states(build_ladder({LadderConfig::cycles_only, 3}));
    EXPECT_FALSE(none.b);
    EXPECT_FALSE(none.c);
}

TEST(LoopStates, ShapeAndOverlaps) {
    const std::size_t L = 4;
    const auto basis = build_ladder({LadderConfig::all_loops, L});
    const auto fc = face_cycle_states(basis);
    const auto b = short_path_state(basis);
    const auto c = long_path_state(basis);
    EXPECT_EQ(support_size(b), 4u);
    for (const auto &a : b) {
        EXPECT_TRUE(a == Amplitude{} || std::abs(std::abs(a) - 0.5) < 1e-15);
    }
    EXPECT_EQ(support_size(c), 2 * L + 2);
    for (const auto &a : c) {
        EXPECT_TRUE(a == Amplitude{} || std::abs(std::abs(a) - 1.0 / std::sqrt(2.0 * (L + 1))) < 1e-15);
    }
    EXPECT_NEAR(norm(b), 1.0, 1e-15);
    EXPECT_NEAR(norm(c), 1.0, 1e-15);
    for (std::size_t j = 0; j < fc.a.size(); ++j) {
        EXPECT_NEAR(real_inner(fc.a[j], b), j == 0 ? 1.0 / std::sqrt(8.0) : 0.0, 1e-15);
        const double sign = j % 2 == 0 ? -1.0 : 1.0;
        EXPECT_NEAR(real_inner(fc.a[j], c), sign / (2.0 * std::sqrt(L + 1.0)), 1e-15);
        EXPECT_NEAR(real_inner(fc.d[j], b), 0.0, 1e-15);
        EXPECT_NEAR(real_inner(fc.d[j], c), 0.0, 1e-15);
    }
    const auto b3 = build_ladder({LadderConfig::all_loops, 3});
    EXPECT_NEAR(real_inner(long_path_state(b3), short_path_state(b3)), 1.0 / (2.0 * std::sqrt(8.0)), 1e-15);
}

// Closed-form Gram-Schmidt

TEST(OrthonormalCycles, Amplitudes) {
    const auto u = chebyshev(5);
    EXPECT_NEAR(cycle_alpha(1, u, CycleFamily::a), 0.25, 1e-15);
    EXPECT_NEAR(cycle_beta(1, u), std::sqrt(15.0) / 4.0, 1e-15);
    for (std::size_t k = 0; k < 5; ++k) {
        const double a = cycle_alpha(k, u, CycleFamily::a);
        const double b = cycle_beta(k, u);
        EXPECT_NEAR(a * a + b * b, 1.0, 1e-15);
        EXPECT_GT(b, 0.0);
        EXPECT_EQ(cycle_alpha(k, u, CycleFamily::d), -a);
        if (k + 1 < 5) {
            EXPECT_NEAR(b * cycle_alpha(k + 1, u, CycleFamily::a), 0.25, 1e-15);
        }
    }
}

TEST(OrthonormalCycles, ReconstructsAndIsOrthonormal) {
    const auto basis = build_ladder({LadderConfig::cycles_only, 6});
    const auto fc = face_cycle_states(basis);
    for (auto family : {CycleFamily::a, CycleFamily::d}) {
        const auto &raw = family == CycleFamily::a ? fc.a : fc.d;
        const auto on = orthonormalize_cycles(raw, family);
        ASSERT_EQ(on.phi.size(), raw.size());
        EXPECT_LT(distance(on.phi[0], raw[0]), 1e-15);
        for (std::size_t k = 1; k < raw.size(); ++k) {
            StateVector rebuilt(basis.size());
            axpy(on.alpha[k], on.phi[k - 1], rebuilt);
            axpy(on.beta[k], on.phi[k], rebuilt);
            EXPECT_LT(distance(rebuilt, raw[k]), 1e-12);
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            for (std::size_t j = 0; j < raw.size(); ++j) {
                EXPECT_NEAR(std::abs(inner(on.phi[i], on.phi[j])), i == j ? 1.0 : 0.0, 1e-12);
            }
        }
    }
    const auto a_on = orthonormalize_cycles(fc.a, CycleFamily::a);
    const auto d_on = orthonormalize_cycles(fc.d, CycleFamily::d);
    for (std::size_t k = 0; k < fc.a.size(); ++k) {
        EXPECT_EQ(d_on.alpha[k], -a_on.alpha[k]);
        EXPECT_EQ(d_on.beta[k], a_on.beta[k]);
    }
}

TEST(OrthonormalCycles, MatchesBruteForceSpan) {
    const auto basis = build_ladder({LadderConfig::cycles_only, 8});
    const auto fc = face_cycle_states(basis);
    const auto on = orthonormalize_cycles(fc.a, CycleFamily::a);
    const auto q = oracle::orthonormalize(fc.a);
    std::mt19937_64 rng(12);
    for (int r = 0; r < 10; ++r) {
        const auto s = oracle::random_state(basis.size(), rng);
        EXPECT_LT(distance(project_onto(on.phi, s), oracle::project(q, s)), 1e-12);
    }
}

// Theta matrices

TEST(Theta, DiagonalCornerIsFourSigma) {
    for (std::size_t L = 2; L <= 10; ++L) {
        EXPECT_NEAR(theta_matrix(L, CycleFamily::a)(0, 0), 4.0 * sigma(L), 1e-14);
        EXPECT_NEAR(theta_matrix(L, CycleFamily::d)(0, 0), 4.0 * sigma(L), 1e-14);
    }
    EXPECT_NEAR(theta_matrix(3, CycleFamily::a)(0, 0), 16.0 / 15.0, 1e-15);
    EXPECT_THROW(theta_matrix(1, CycleFamily::a), std::invalid_argument);
}

TEST(Theta, SignPatternAndSymmetry) {
    const auto ta = theta_matrix(7, CycleFamily::a);
    const auto td = theta_matrix(7, CycleFamily::d);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        for (std::size_t j = 0; j < ta.size(); ++j) {
            EXPECT_EQ(ta(i, j), ta(j, i));
            EXPECT_EQ(td(i, j), std::abs(ta(i, j)));
            EXPECT_EQ(ta(i, j) < 0, (i + j) % 2 == 1);
        }
    }
}

TEST(Theta, ThetaSumIdentities) {
    for (std::size_t L = 2; L <= 15; ++L) {
        const auto u = chebyshev(L);
        const double sg = sigma(L, u);
        const double iu = 1.0 / chebyshev_tail(L, u);
        const auto th = theta_matrix(L, CycleFamily::a);
        EXPECT_NEAR(theta_first_row_alternating_sum(th), -2.0 * (1.0 - sg - iu), 1e-10) << "L=" << L;
        EXPECT_NEAR(theta_alternating_total(th), 2.0 * (L - 2.0 + sg + iu), 1e-10) << "L=" << L;
        EXPECT_NEAR(k_series(L), 2.0 * (L - 1.0), 1e-9) << "L=" << L;
    }
}

TEST(Theta, ProjectorFormAgreesWithOrthonormalForm) {
    std::mt19937_64 rng(13);
    for (std::size_t L = 2; L <= 8; ++L) {
        const auto basis = build_ladder({LadderConfig::cycles_only, L});
        const auto fc = face_cycle_states(basis);
        for (auto family : {CycleFamily::a, CycleFamily::d}) {
            const auto &raw = family == CycleFamily::a ? fc.a : fc.d;
            const auto th = theta_matrix(L, family);
            const auto on = orthonormalize_cycles(raw, family);
            const auto s = oracle::random_state(basis.size(), rng);
            StateVector via_theta(basis.size());
            for (std::size_t i = 0; i < raw.size(); ++i) {
                for (std::size_t j = 0; j < raw.size(); ++j) {
                    axpy(th(i, j) * inner(raw[j], s), raw[i], via_theta);
                }
            }
            EXPECT_LT(distance(via_theta, project_onto(on.phi, s)), 1e-12);
        }
    }
}

// Loop-state Gram-Schmidt

TEST(GramSchmidtB, UnitNormAndOrthogonality) {
    for (std::size_t L = 1; L <= 10; ++L) {
        const auto basis = build_ladder({LadderConfig::short_loop, L});
        const auto fc = face_cycle_states(basis);
        const auto B = gram_schmidt_B(basis);
        EXPECT_NEAR(norm(B), 1.0, 1e-12);
        for (std::size_t i = 0; i < fc.a.size(); ++i) {
            EXPECT_LT(std::abs(inner(fc.a[i], B)), 1e-12);
            EXPECT_LT(std::abs(inner(fc.d[i], B)), 1e-12);
        }
    }
    const auto b1 = build_ladder({LadderConfig::short_loop, 1});
    EXPECT_LT(distance(gram_schmidt_B(b1), short_path_state(b1)), 1e-15);
    EXPECT_THROW(gram_schmidt_B(build_ladder({LadderConfig::long_loop, 3})), std::invalid_argument);
}

TEST(GramSchmidtB, OverlapWithInitialState) {
    std::mt19937_64 rng(14);
    const std::size_t L = 5;
    const auto basis = build_ladder({LadderConfig::short_loop, L});
    const auto B = gram_schmidt_B(basis);
    const double sg = static_cast<double>(oracle::sigma_exact(L));
    for (int r = 0; r < 10; ++r) {
        const auto p = oracle::random_init(rng);
        const Amplitude expected = (p.x * sg + p.y * (1.0 - sg) - p.z) / std::sqrt(4.0 - 2.0 * sg);
        EXPECT_LT(std::abs(inner(B, p.to_state(basis)) - expected), 1e-13);
    }
}

TEST(GramSchmidtCprime, ResidualNormOfLongPath) {
    for (std::size_t L = 1; L <= 10; ++L) {
        const auto basis = build_ladder({LadderConfig::long_loop, L});
        const auto fc = face_cycle_states(basis);
        const auto q = oracle::orthonormalize(fc.a);
        const auto res = gram_schmidt_Cprime(basis, q, std::nullopt);
        EXPECT_NEAR(res.residual_norm_squared, long_path_residual_norm_squared(L), 1e-12) << "L=" << L;
        EXPECT_NEAR(norm(res.vector), 1.0, 1e-12);
        for (std::size_t i = 0; i < fc.a.size(); ++i) {
            EXPECT_LT(std::abs(inner(fc.a[i], res.vector)), 1e-12);
            EXPECT_LT(std::abs(inner(fc.d[i], res.vector)), 1e-12);
        }
    }
    EXPECT_NEAR(long_path_residual_norm_squared(1), 1.0, 1e-15);
    EXPECT_THROW(gram_schmidt_Cprime(build_ladder({LadderConfig::short_loop, 2}), {}, std::nullopt),
                 std::invalid_argument);
}

TEST(GramSchmidtCprime, OverlapOfLongPathWithB) {
    const std::size_t L = 4;
    const auto basis = build_ladder({LadderConfig::all_loops, L});
    const auto B = gram_schmidt_B(basis);
    const auto c = long_path_state(basis);
    const auto u = chebyshev(L);
    const double sg = sigma(L, u);
    const double expected = (2.0 - sg - 1.0 / u[L - 1]) / std::sqrt(2.0 * (L + 1) * (4.0 - 2.0 * sg));
    EXPECT_NEAR(real_inner(c, B), expected, 1e-14);

    const auto dark = build_dark_basis(basis);
    ASSERT_TRUE(dark.C_prime);
    EXPECT_LT(std::abs(inner(*dark.C_prime, B)), 1e-12);
}

// Projector

TEST(ProjectDark, FixedPointsAndKernel) {
    const auto basis = build_ladder({LadderConfig::all_loops, 5});
    const auto dark = build_dark_basis(basis);
    const auto p = project_dark(dark, dark.phi.phi[2]);
    EXPECT_LT(distance(p, dark.phi.phi[2]), 1e-12);

    for (auto i : sink_indices(basis)) {
        StateVector e(basis.size());
        e[i] = 1.0;
        EXPECT_LT(norm(project_dark(dark, e)), 1e-15);
    }
    std::mt19937_64 rng(15);
    auto s = oracle::random_state(basis.size(), rng);
    s = project_out(dark.orthonormal(), s);
    EXPECT_LT(norm(project_dark(dark, s)), 1e-12);
    EXPECT_THROW(project_dark(dark, StateVector(3)), std::invalid_argument);
}

TEST(ProjectDark, IdempotentSelfAdjointAndEqualToBruteForce) {
    std::mt19937_64 rng(16);
    for (auto config : oracle::all_configs()) {
        for (std::size_t L = 1; L <= 8; ++L) {
            const auto basis = build_ladder({config, L});
            const auto dark = build_dark_basis(basis);
            const auto q = oracle::brute_force_dark_basis(basis);
            ASSERT_EQ(q.size(), dark.dimension());
            const auto s = oracle::random_state(basis.size(), rng);
            const auto t = oracle::random_state(basis.size(), rng);
            const auto ps = project_dark(dark, s);
            EXPECT_LT(distance(project_dark(dark, ps), ps), 1e-12);
            EXPECT_LT(std::abs(inner(t, ps) - inner(project_dark(dark, t), s)), 1e-12);
            EXPECT_LT(distance(ps, oracle::project(q, s)), 1e-12);
        }
    }
}

TEST(ProjectDark, GramMatrixIsIdentity) {
    for (auto config : oracle::all_configs()) {
        for (std::size_t L = 1; L <= 12; ++L) {
            const auto dark = build_dark_basis(build_ladder({config, L}));
            const auto on = dark.orthonormal();
            for (std::size_t i = 0; i < on.size(); ++i) {
                for (std::size_t j = 0; j < on.size(); ++j) {
                    EXPECT_NEAR(std::abs(inner(on[i], on[j])), i == j ? 1.0 : 0.0, 1e-10);
                }
            }
        }
    }
}

TEST(ProjectDark, LoopOrderDoesNotChangeM) {
    std::mt19937_64 rng(17);
    for (std::size_t L = 1; L <= 7; ++L) {
        const auto basis = build_ladder({LadderConfig::all_loops, L});
        const auto dark = build_dark_basis(basis);
        const auto b_first = dark.m_basis();
        const auto c_first = m_basis_c_first(dark);
        const auto s = oracle::random_state(basis.size(), rng);
        EXPECT_LT(distance(project_onto(b_first, s), project_onto(c_first, s)), 1e-12);
    }
}
