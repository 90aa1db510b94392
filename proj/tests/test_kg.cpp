#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/kg.hpp"

using namespace gaq;

namespace {

KGState random_state(std::size_t N, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    KGState s;
    for (std::size_t i = 0; i < N; ++i) {
        s.phi.push_back(u(rng));
        s.phidot.push_back(u(rng));
    }
    return s;
}

}  // namespace

TEST(KG, ModeMapsAreSymplectic) {
    KGLattice L{10, 0.3, 0.5, 2.0};
    for (std::size_t j = 0; j < L.N; ++j) EXPECT_NEAR(kg_mode_map(L, j, 0.77).determinant(), 1.0, 1e-12);
}

TEST(KG, TranslationIsAdditiveAndInvertible) {
    KGLattice L{7, 0.5, 1.2, 0.9};
    const KGState s = random_state(7, 3);
    const KGState a = kg_time_translate(L, kg_time_translate(L, s, 0.3), 0.45);
    const KGState b = kg_time_translate(L, s, 0.75);
    const KGState back = kg_time_translate(L, b, -0.75);
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_NEAR(a.phi[i], b.phi[i], 1e-12);
        EXPECT_NEAR(a.phidot[i], b.phidot[i], 1e-12);
        EXPECT_NEAR(back.phi[i], s.phi[i], 1e-12);
    }
}

TEST(KG, ChargesRotateWithTheModeFrequency) {
    KGLattice L{8, 0.5, 0.8, 1.7};
    const KGState s = random_state(8, 5);
    const KGState t = kg_time_translate(L, s, 0.6);
    for (std::size_t j = 0; j < L.N; ++j) {
        const auto a0 = kg_noether_charge(L, s, j), a1 = kg_noether_charge(L, t, j);
        EXPECT_NEAR(std::abs(a1), std::abs(a0), 1e-12);
        EXPECT_NEAR(std::remainder(std::arg(a1 / a0) + L.c * L.omega(j) * 0.6, 2 * M_PI), 0.0, 1e-12);
    }
}

TEST(KG, GroupFieldsReproduceTheThreeFamilies) {
    KGLattice L{5, 0.7, 1.1, 1.3};
    const KGFieldsReport r = kg_group_fields(L);
    EXPECT_LT(r.max(), 1e-9);
    EXPECT_EQ(r.central_sign, -1);
    EXPECT_NO_THROW(kg_group(L).validate(16, 2));
}

TEST(KG, SemiInvarianceOnShellOnly) {
    EXPECT_LT(kg_semi_invariance_residual(0.7, 16, 4), 1e-10);
    EXPECT_GT(kg_semi_invariance_residual(0.7, 16, 4, 0.2), 1e-2);
}

TEST(KG, ValidatesLattice) {
    KGLattice L{0, 1.0, 1.0, 1.0};
    EXPECT_THROW(L.validate(), ArgumentError);
    KGLattice M{4, -1.0, 1.0, 1.0};
    EXPECT_THROW(M.validate(), ArgumentError);
}
