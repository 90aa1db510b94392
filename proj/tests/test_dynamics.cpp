#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gaq/dynamics.hpp"
#include "gaq/errors.hpp"
#include "gaq/lie.hpp"

using namespace gaq;

TEST(FieldConfig, ParsesAndRejects) {
    const FieldConfig c = parse_field_config("# comment\nA1 = -y\nA0 = t*x\n");
    EXPECT_EQ(c.kind, FieldKind4::em);
    const double x[3] = {2.0, 3.0, 0.0};
    const auto j = potential_jets(c, 0.5, x);
    EXPECT_DOUBLE_EQ(j[0][0], 1.0);
    EXPECT_DOUBLE_EQ(j[1][3], -1.0);
    EXPECT_DOUBLE_EQ(j[2][0], 0.0);
    EXPECT_THROW(parse_field_config("A1 = y\nh00 = x\n"), ParseError);
    EXPECT_THROW(parse_field_config("B = y\n"), ParseError);
    EXPECT_THROW(parse_field_config("A1 = y +\n"), ParseError);
}

TEST(Lorentz, CyclotronPeriod) {
    const double q = 0.9, m = 1.4, B = 2.0;
    const FieldConfig c = parse_field_config("A1 = -0.5*2*y\nA2 = 0.5*2*x\n");
    const double T = 2.0 * std::numbers::pi * m / (q * B);
    const auto tr = rk4_integrate(em_equations_of_motion(c, q, m), {0.1, -0.2, 0.0, 0.7, 0.3, 0.0}, T, T / 4000);
    const auto& y = tr.states.back();
    EXPECT_NEAR(y[0], 0.1, 1e-5);
    EXPECT_NEAR(y[1], -0.2, 1e-5);
    EXPECT_NEAR(y[3], 0.7, 1e-5);
    EXPECT_NEAR(y[4], 0.3, 1e-5);
    // Kinetic energy is conserved in a static magnetic field.
    for (const auto& s : tr.states) EXPECT_NEAR(s[3] * s[3] + s[4] * s[4], 0.58, 1e-10);
}

TEST(Lorentz, UniformElectricField) {
    const FieldConfig c = parse_field_config("A0 = -1.5*x\n");
    const double q = 0.7, m = 1.3;
    const auto tr = rk4_integrate(em_equations_of_motion(c, q, m), {0, 0, 0, 0, 0, 0}, 1.0, 1e-2);
    EXPECT_NEAR(tr.states.back()[0], 0.5 * q * 1.5 / m, 1e-12);
}

TEST(Gravity, MassCancels) {
    const FieldConfig c = parse_field_config("h00 = 0.3*x*y\nh1 = 0.5*y\nh3 = 0.2*t\n");
    const State y0{0.1, 0.2, 0.3, 0.4, 0.0, -0.1};
    const auto a = rk4_integrate(gravity_equations_of_motion(c, 1.0), y0, 1.0, 1e-3);
    const auto b = rk4_integrate(gravity_equations_of_motion(c, 7.0), y0, 1.0, 1e-3);
    EXPECT_EQ(a.states.back(), b.states.back());
    EXPECT_THROW(gravity_equations_of_motion(c, 0.0), ArgumentError);
}

TEST(Gravity, SingleGemConvention) {
    const FieldConfig c = parse_field_config("h00 = 0.3*x*y - 0.2*z^2\nh1 = 0.5*y + 0.2*x*z\nh2 = -0.4*x\n");
    const GemReport r = gem_equivalence_check(c, 32, 4);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.best().q_sign, -1.0);
    EXPECT_EQ(r.best().a0_sign, 1.0);
}

TEST(CharacteristicFlow, GalileiFreeParticle) {
    const LieGroup G = catalog("galilei_ext_1p1", {{"m", 2.0}, {"hbar", 1.0}});
    const auto tr = flow_characteristic(G, {0.0, 1.0, 0.5, 0.0}, 2.0, 1e-2);
    const auto& p = tr.states.back();
    EXPECT_NEAR(p[0], 2.0, 1e-12);
    EXPECT_NEAR(p[1], 2.0, 1e-10);
    EXPECT_NEAR(p[2], 0.5, 1e-12);
    EXPECT_LT(conservation_report(G, tr).max(), 1e-10);
}
