#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/poly.hpp"

using namespace gaq;

TEST(Polynomial, RingOperations) {
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.degree(), 2u);
    EXPECT_EQ((x + Polynomial(1)).pow(3), x * x * x + Polynomial(3) * x * x + Polynomial(3) * x + Polynomial(1));
}

TEST(Polynomial, DerivativeAndSubstitution) {
    const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
    const Polynomial p = x * x * y + Polynomial(Rational(1, 3)) * y;
    EXPECT_EQ(p.derivative("x"), Polynomial(2) * x * y);
    EXPECT_EQ(p.substitute("y", Polynomial(3)), Polynomial(3) * x * x + Polynomial(1));
    EXPECT_DOUBLE_EQ(p.evaluate({{"x", 2.0}, {"y", 3.0}}), 13.0);
    EXPECT_THROW(p.evaluate({{"x", 1.0}}), ArgumentError);
}

TEST(Polynomial, DecimalParsingIsExact) {
    EXPECT_EQ(parse_decimal("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_decimal("2.50"), Rational(5, 2));
    EXPECT_EQ(parse_decimal("1e-3"), Rational(1, 1000));
    EXPECT_THROW(parse_decimal("1.2.3"), ArgumentError);
    // Signs belong to the expression grammar, not to literals.
    EXPECT_THROW(parse_decimal("-2"), ArgumentError);
}
