#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/sigma.hpp"

using namespace gaq;

namespace {

SigmaLattice lattice(std::size_t N) {
    SigmaLattice L;
    L.N = N;
    L.dx = 0.5;
    L.lambda = {0.2, -0.3, 1.0};
    return L;
}

SigmaFunctional coord(std::size_t k) {
    return [k](std::span<const Jet2> z) { return z[k]; };
}

}  // namespace

TEST(SigmaBracket, AntisymmetricAndJacobi) {
    const SigmaLattice L = lattice(3);
    const SigmaState s = sigma_random_state(L, 2, 0.8);
    const std::size_t n = 6 * L.N;
    // For linear functions the bracket is again linear; Jacobi is checked through the
    // bracket of a coordinate with the quadratic H.
    for (std::size_t a = 0; a < n; a += 5)
        for (std::size_t b = 0; b < n; b += 3)
            EXPECT_DOUBLE_EQ(sigma_bracket(coord(a), coord(b), s, L), -sigma_bracket(coord(b), coord(a), s, L));
    const auto pb = [&](std::size_t a, std::size_t b) {
        return SigmaFunctional([&, a, b](std::span<const Jet2> z) {
            // {z_a, z_b} is affine in z; rebuild it as a jet from the bracket at z's values.
            State y(n);
            for (std::size_t k = 0; k < n; ++k) y[k] = z[k].value();
            const SigmaState p = sigma_unflatten(y, L.N);
            Jet2 out(sigma_bracket(coord(a), coord(b), p, L));
            for (std::size_t k = 0; k < n; ++k) {
                State e(n, 0.0);
                e[k] = 1.0;
                State yk = y;
                yk[k] += 1.0;
                const double slope = sigma_bracket(coord(a), coord(b), sigma_unflatten(yk, L.N), L) -
                                     sigma_bracket(coord(a), coord(b), p, L);
                out += slope * (z[k] - y[k]);
            }
            return out;
        });
    };
    double worst = 0.0;
    for (std::size_t a : {0u, 4u, 9u, 13u})
        for (std::size_t b : {2u, 10u, 12u})
            for (std::size_t c : {1u, 11u, 15u}) {
                const double j = sigma_bracket(coord(a), pb(b, c), s, L) + sigma_bracket(coord(b), pb(c, a), s, L) +
                                 sigma_bracket(coord(c), pb(a, b), s, L);
                worst = std::max(worst, std::abs(j));
            }
    EXPECT_LT(worst, 1e-8);
}

TEST(SigmaDynamics, EquationsOfMotionMatchBracket) {
    const SigmaLattice L = lattice(5);
    EXPECT_LT(sigma_eom_crosscheck(sigma_random_state(L, 4, 1.0), L), 1e-12);
}

TEST(SigmaDynamics, ConservedQuantities) {
    const SigmaLattice L = lattice(6);
    const SigmaRun run = sigma_evolve(sigma_random_state(L, 8, 1.0), L, 0.5, 1e-3);
    EXPECT_LT(run.drift.max(), 1e-9);
    EXPECT_EQ(run.drift.casimir.size(), 6u);
}

TEST(SigmaDynamics, RejectsBadInput) {
    SigmaLattice L = lattice(2);
    L.lambda = {0.0, 0.0, 0.0};
    EXPECT_THROW(L.validate(), ArgumentError);
    EXPECT_THROW(sigma_unflatten(State(5), 1), ArgumentError);
}

TEST(LocalGroup, AxiomsAndChart) {
    const LieGroup G = sigma_group(lattice(2));
    EXPECT_NO_THROW(G.validate(32, 5));
    const std::array<double, 3> eps{0.3, -0.2, 0.5}, v{1.0, 2.0, -0.5};
    const auto r = chart_rotate<double>(std::span<const double>(eps), std::span<const double>(v));
    EXPECT_NEAR(r[0] * r[0] + r[1] * r[1] + r[2] * r[2], 5.25, 1e-13);
}

TEST(LocalGroup, FieldCommutators) {
    for (std::size_t N : {1u, 2u}) EXPECT_LT(sigma_local_group_fields(lattice(N)).max(), 1e-9);
}

TEST(LocalGroup, NoetherContractions) {
    const SigmaLattice L = lattice(2);
    const LieGroup G = sigma_group(L);
    std::mt19937_64 rng(6);
    for (int s = 0; s < 4; ++s) {
        const SigmaNoether n = sigma_theta_noether(L, G.sample(rng));
        EXPECT_LT(n.err_L, 1e-12);
        EXPECT_LT(n.err_S_opposite, 1e-12);
        EXPECT_LT(n.orbit_opposite, 1e-12);
    }
}

TEST(LocalGroup, PolarizationNeedsTheInvariantPhase) {
    const SigmaLattice L = lattice(1);
    for (int f : {0, 1}) {
        EXPECT_LT(sigma_polarization_check(L, SigmaPhase::invariant, f, 8, 2).max(), 1e-12);
        EXPECT_GT(sigma_polarization_check(L, SigmaPhase::dropped, f, 8, 2).max(), 1e-2);
    }
}

TEST(SigmaOperators, Commutators) {
    const OperatorSuiteReport r = sigma_operator_suite(lattice(1), 3);
    EXPECT_DOUBLE_EQ(r.s_coefficient, -1.0);
    EXPECT_DOUBLE_EQ(r.central, -1.0);
    EXPECT_EQ(r.exact_residual, 0.0);
    EXPECT_LT(r.jet_residual, 1e-12);
    EXPECT_EQ(r.s_s, 0.0);
    EXPECT_EQ(r.l_invariant, 0.0);
    for (const auto& [d, dh] : r.h_degrees) EXPECT_EQ(d, dh);
    EXPECT_THROW(sigma_op_L(0, Polynomial(1), lattice(2)), ArgumentError);
}
