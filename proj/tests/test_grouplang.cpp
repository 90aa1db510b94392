#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/expr.hpp"
#include "gaq/gdf.hpp"
#include "gaq/group.hpp"
#include "gaq/poly.hpp"

using namespace gaq;

namespace {

const char* kGalilei = R"(group galilei
params m=1 hbar=1
coords t x v phi
central phi
identity 0 0 0 0
evolution t
law:
t'' = t' + t
x'' = x' + x + v'*t
v'' = v' + v
phi'' = phi' + phi + (m/hbar)*(x'*v + t*(v'*v + 0.5*v'^2))
)";

}  // namespace

TEST(Expr, EvaluatesWithPrimedAndParams) {
    Scope s;
    s.coords = {"x", "y"};
    s.params = {"k"};
    const ExprPtr e = parse_expression("k*x' + y^2 - sin(0)", s);
    const double left[2] = {2.0, 9.0}, right[2] = {5.0, 3.0}, par[1] = {0.5};
    EXPECT_DOUBLE_EQ(eval_expr<double>(*e, left, right, par), 0.5 * 2.0 + 9.0);
}

TEST(Expr, ReportsPositions) {
    Scope s;
    s.coords = {"x"};
    try {
        parse_expression("x + * 2", s);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 5u);
    }
    EXPECT_THROW(parse_expression("x + zz", s), ParseError);
    EXPECT_THROW(parse_expression("(x + 1", s), ParseError);
}

TEST(Expr, ToPolynomialIsExact) {
    Scope s;
    s.coords = {"x", "y"};
    const Polynomial p = to_polynomial(*parse_expression("(x + y)^2 - 0.5*x*y", s));
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    EXPECT_EQ(p, x * x + Polynomial(Rational(3, 2)) * x * y + y * y);
    EXPECT_THROW(to_polynomial(*parse_expression("sin(x)", s)), ValidationError);
}

TEST(Gdf, ParsesGalilei) {
    const GroupDefinition d = parse_group_file(kGalilei);
    EXPECT_EQ(d.dim(), 4u);
    EXPECT_EQ(d.coords[d.central], "phi");
    ASSERT_TRUE(d.evolution.has_value());
    EXPECT_EQ(*d.evolution, 0u);
    EXPECT_LT(identity_law_residual(d, d.default_params()), 1e-14);
}

TEST(Gdf, RejectsBrokenInput) {
    EXPECT_THROW(parse_group_file(""), ParseError);
    EXPECT_THROW(parse_group_file("group g\ncoords x\ncentral x\nidentity 0\nlaw:\nx'' = x' + \n"), ParseError);
    EXPECT_THROW(parse_group_file("group g\ncoords x x\ncentral x\nidentity 0\nlaw:\nx'' = x' + x\n"), ParseError);
    // Identity law violated.
    EXPECT_THROW(parse_group_file("group g\ncoords x\ncentral x\nidentity 0\nlaw:\nx'' = x' + 2*x\n"), ValidationError);
}

TEST(Gdf, UnknownParameterIsRejected) {
    const GroupDefinition d = parse_group_file(kGalilei);
    EXPECT_THROW(LieGroup::from_definition(d, {{"mass", 2.0}}), ArgumentError);
}
