#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/group.hpp"
#include "gaq/lie.hpp"

using namespace gaq;

namespace {

LieGroup galilei(double m = 1.0) { return catalog("galilei_ext_1p1", {{"m", m}, {"hbar", 1.0}}); }

}  // namespace

TEST(Group, CatalogGroupsSatisfyAxioms) {
    EXPECT_NO_THROW(galilei(2.0).validate(64, 3));
    const LieGroup em = catalog("galilei_em_3p1", {{"m", 1.0}, {"q", 0.5}, {"hbar", 1.0}});
    EXPECT_NO_THROW(em.validate(32, 3));
    EXPECT_LT(associativity_check(em, 32, 4), 1e-9);
}

TEST(Group, NewtonInverseMatchesClosedForm) {
    const LieGroup G = galilei(1.7);
    std::mt19937_64 rng(9);
    for (int s = 0; s < 8; ++s) {
        const auto g = G.sample(rng);
        const auto gi = G.inverse(g);
        const auto e = G.compose(gi, g);
        for (double v : e) EXPECT_NEAR(v, 0.0, 1e-12);
    }
}

TEST(Group, CatalogRejectsMissingParameters) {
    EXPECT_THROW(catalog("galilei_ext_1p1", {{"m", 1.0}}), ArgumentError);
    EXPECT_THROW(catalog("nope", {}), ArgumentError);
}

TEST(Lie, GalileiConstantsAndClassification) {
    const LieGroup G = galilei(2.5);
    const StructureTable T = structure_constants(G);
    EXPECT_NEAR(T.at("x", "t", "v"), 1.0, 1e-12);
    EXPECT_NEAR(T.at("phi", "x", "v"), -2.5, 1e-12);
    EXPECT_NEAR(T.at("phi", "v", "x"), 2.5, 1e-12);
    EXPECT_LT(T.left_right_residual, 1e-12);
    EXPECT_LT(jacobi_residuals(T).max_residual, 1e-12);
    const auto cls = classify_parameters(T, "phi");
    EXPECT_EQ(cls.basic, (std::set<std::string>{"x", "v"}));
    EXPECT_EQ(cls.non_basic, (std::set<std::string>{"t"}));
}

TEST(Lie, ThetaAndNoetherAtAPoint) {
    const double m = 1.5;
    const LieGroup G = galilei(m);
    const std::vector<double> g{0.4, -0.8, 0.6, 0.3};
    const Eigen::VectorXd th = theta(G, g);
    EXPECT_NEAR(th[0], -0.5 * m * 0.36, 1e-12);
    EXPECT_NEAR(th[1], 0.0, 1e-12);
    EXPECT_NEAR(th[2], -m * -0.8, 1e-12);
    EXPECT_NEAR(th[3], 1.0, 1e-12);
    // Momentum is m v on the right field of x.
    EXPECT_NEAR(noether_invariant(G, G.index_of("x"), g), m * 0.6, 1e-12);
}

TEST(Lie, CharacteristicKernelIsTheFreeFlow) {
    const LieGroup G = galilei(1.0);
    const std::vector<double> g{0.1, 0.2, -0.7, 0.0};
    const auto ker = characteristic_kernel(G, g);
    ASSERT_EQ(ker.basis.size(), 1u);
    const Eigen::VectorXd k = ker.basis[0] / ker.basis[0][0];
    EXPECT_NEAR(k[1], -0.7, 1e-12);
    EXPECT_NEAR(k[2], 0.0, 1e-12);
    EXPECT_NEAR(k[3], 0.5 * 0.49, 1e-12);
}

TEST(Lie, InvarianceSuiteOnCatalogGroups) {
    EXPECT_LT(invariance_suite(galilei(1.3), 16, 2).max(), 1e-10);
    const LieGroup em = catalog("galilei_em_3p1", {{"m", 1.2}, {"q", -0.4}, {"hbar", 1.0}});
    const InvarianceReport r = invariance_suite(em, 8, 2);
    EXPECT_LT(r.max(), 1e-10);
    EXPECT_EQ(r.skipped, 0);
}

TEST(Lie, EmChargeConstants) {
    const LieGroup em = catalog("galilei_em_3p1", {{"m", 1.0}, {"q", 0.7}, {"hbar", 1.0}});
    const StructureTable T = structure_constants(em);
    EXPECT_NEAR(T.at("phi", "t", "At"), 0.7, 1e-12);
    EXPECT_NEAR(T.at("phi", "x1", "A1"), -0.7, 1e-12);
    EXPECT_NEAR(T.at("phi", "x2", "v2"), -1.0, 1e-12);
}

TEST(Lie, RightFieldsCommuteWithLeftFields) {
    const LieGroup G = galilei(1.0);
    const VectorField c = commutator_field(left_field(G, 2), right_field(G, 1));
    const std::vector<double> g{0.3, 0.1, -0.2, 0.5};
    EXPECT_LT(c.value(g).norm(), 1e-12);
}

TEST(Lie, ParameterizedJacobi) {
    const ParamStructureTable T = parse_algebra_file(R"(algebra heis
params a b
basis p q r z
central z
C[p,q,z] = a
C[q,r,z] = b
C[r,p,q] = 1
)");
    // [p,[q,r]] + [q,[r,p]] + [r,[p,q]] = [p, b z] + [q, q] + [r, a z] = 0 for any a, b.
    EXPECT_TRUE(jacobi_residuals(T).empty());
    const auto specialized = jacobi_residuals(T.substitute("b", Polynomial::variable("a")).substitute("a", Polynomial(1)));
    EXPECT_TRUE(specialized.empty());
    EXPECT_THROW(parse_algebra_file("algebra x\nbasis a b\nC[a,c,b] = 1\n"), ParseError);
}

TEST(Group, NonAssociativeLawIsRejected) {
    GroupDefinition d = parse_group_file(R"(group bad
coords x y phi
central phi
identity 0 0 0
law:
x'' = x' + x
y'' = y' + y + x'*x*x
phi'' = phi' + phi + x'*y
)");
    const LieGroup G = LieGroup::from_definition(d);
    EXPECT_THROW(G.validate(), ValidationError);
}
