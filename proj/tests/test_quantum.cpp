#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/quantum.hpp"

using namespace gaq;

TEST(Su2, MetricClosedForm) {
    const Eigen::Matrix3d g = su2_metric({1.0, 0.0, 0.0});
    EXPECT_NEAR(g(0, 0), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR((g * su2_inverse_metric({1.0, 0.0, 0.0}) - Eigen::Matrix3d::Identity()).norm(), 0.0, 1e-13);
}

TEST(Su2, HamiltonianMomentumBracket) {
    // {H, pi_i} = -(1/4)(eps . pi) pi_i.
    for (const PhasePoint& p : sample_phase_points(8, 3)) {
        const double ep = p.eps[0] * p.pi[0] + p.eps[1] * p.pi[1] + p.eps[2] * p.pi[2];
        for (int i = 0; i < 3; ++i) {
            const double b =
                canonical_poisson_bracket(phase_function("H"), phase_function("pi" + std::to_string(i + 1)), p);
            EXPECT_NEAR(b, -0.25 * ep * p.pi[i], 1e-12);
        }
    }
}

TEST(Su2, PolynomialBracketIsAntisymmetricAndSatisfiesJacobi) {
    const Polynomial e1 = Polynomial::variable("e1"), e2 = Polynomial::variable("e2"), p1 = Polynomial::variable("p1"),
                     p3 = Polynomial::variable("p3");
    const Polynomial f = e1 * p1 + e2 * e2, g = p1 * p3 - e1, h = e2 * p3 * p1;
    EXPECT_EQ(canonical_poisson_bracket(f, g), -canonical_poisson_bracket(g, f));
    const Polynomial jac = canonical_poisson_bracket(f, canonical_poisson_bracket(g, h)) +
                           canonical_poisson_bracket(g, canonical_poisson_bracket(h, f)) +
                           canonical_poisson_bracket(h, canonical_poisson_bracket(f, g));
    EXPECT_TRUE(jac.is_zero());
}

TEST(So32, TableHoldsAndDeSitterSignFails) {
    EXPECT_LT(bracket_table_check(so32_bracket_table(-1.0), 16, 2).max_residual, 1e-10);
    EXPECT_GT(bracket_table_check(so32_bracket_table(+1.0), 16, 2).max_residual, 0.1);
}

TEST(Hypergeometric, TerminatingSeries) {
    // 2F1(-2, b; b; z) = (1 - z)^2.
    EXPECT_EQ(hyp2f1_terminating_exact(2, Rational(3, 2), Rational(3, 2), Rational(1, 3)), Rational(4, 9));
    EXPECT_NEAR(hyp2f1_terminating(3, 0.5, 2.5, 0.2), static_cast<double>(hyp2f1_terminating_exact(
                                                           3, Rational(1, 2), Rational(5, 2), Rational(1, 5))),
                1e-15);
    EXPECT_DOUBLE_EQ(hyp2f1_terminating(0, 4.0, 1.0, 0.9), 1.0);
}

TEST(Ads, StateParsingAndLambda) {
    const auto s = parse_state_list("0,0,0; 1,2,-1");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[1][2], -1);
    EXPECT_THROW(parse_state_list("0,1,2"), ArgumentError);
    EXPECT_THROW(parse_state_list("0,0"), ArgumentError);
    AdsParams p;
    EXPECT_GT(ads_lambda(p), 0.0);
}

TEST(Ads, PrintedWavefunctionIsNotAnEigenfunction) {
    AdsParams p;
    const auto r = ads_eigen_consistency(p, {{0, 0, 0}}, 8, 1, 1e-6);
    EXPECT_FALSE(r.passed);
}

TEST(GalileiGrid, ReferenceSectionSolvesSchroedinger) {
    const GridSection sec = galilei_reference_section(1.0);
    EXPECT_LT(galilei_polarization_residual(sec, 1.0).schrodinger, 1e-8);
    const OperatorResidual op = galilei_operator_suite(sec, 1.0);
    EXPECT_LT(op.commutator, 1e-6);
    // Dropping the time phase breaks the evolution equation.
    EXPECT_GT(galilei_polarization_residual(galilei_reference_section(1.0, false), 1.0).schrodinger, 1e-2);
}
