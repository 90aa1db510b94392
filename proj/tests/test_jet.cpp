#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "gaq/errors.hpp"
#include "gaq/jet.hpp"
#include "gaq/linalg.hpp"
#include "gaq/ode.hpp"

using namespace gaq;

namespace {

template <class T>
T sample_fn(const T& x, const T& y, const T& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    return sin(x * y) + exp(0.3 * z) * cos(y) + sqrt(2.0 + x * x) / (1.5 + z * z) + powi(y - z, 3);
}

}  // namespace

TEST(Jet, MatchesFiniteDifferences) {
    const double p[3] = {0.3, -0.7, 0.45};
    const auto v = jet_vars(std::span<const double>(p, 3));
    const Jet2 f = sample_fn(v[0], v[1], v[2]);
    const auto eval = [&](double a, double b, double c) { return sample_fn(a, b, c); };
    const double h = 1e-4;
    EXPECT_NEAR(f.value(), eval(p[0], p[1], p[2]), 1e-15);
    for (int i = 0; i < 3; ++i) {
        double up[3] = {p[0], p[1], p[2]}, dn[3] = {p[0], p[1], p[2]};
        up[i] += h;
        dn[i] -= h;
        const double fd = (eval(up[0], up[1], up[2]) - eval(dn[0], dn[1], dn[2])) / (2 * h);
        EXPECT_NEAR(f.grad(i), fd, 1e-4);
        for (int j = 0; j < 3; ++j) {
            double pp[3] = {p[0], p[1], p[2]}, pm[3] = {p[0], p[1], p[2]}, mp[3] = {p[0], p[1], p[2]},
                   mm[3] = {p[0], p[1], p[2]};
            pp[i] += h, pp[j] += h;
            pm[i] += h, pm[j] -= h;
            mp[i] -= h, mp[j] += h;
            mm[i] -= h, mm[j] -= h;
            const double fd2 = (eval(pp[0], pp[1], pp[2]) - eval(pm[0], pm[1], pm[2]) - eval(mp[0], mp[1], mp[2]) +
                                eval(mm[0], mm[1], mm[2])) /
                               (4 * h * h);
            EXPECT_NEAR(f.hess(i, j), fd2, 1e-4);
        }
    }
}

TEST(Jet, HessianIsSymmetricAndConstantsMix) {
    const double p[2] = {0.2, 1.1};
    const auto v = jet_vars(std::span<const double>(p, 2));
    const Jet2 f = 3.0 * v[0] * v[0] * v[1] + Jet2(2.0);
    EXPECT_DOUBLE_EQ(f.hess(0, 1), f.hess(1, 0));
    EXPECT_DOUBLE_EQ(f.hess(0, 0), 6.0 * p[1]);
    EXPECT_DOUBLE_EQ(f.grad(1), 3.0 * p[0] * p[0]);
}

TEST(Jet, DomainErrors) {
    EXPECT_THROW(sqrt(Jet2(-1.0)), DomainError);
    EXPECT_THROW(asin(Jet2(1.5)), DomainError);
    EXPECT_THROW(log(Jet2(0.0)), DomainError);
    EXPECT_THROW(Jet2(1.0) / Jet2(0.0), DomainError);
}

TEST(Linalg, NullspaceOfRankDeficientMatrix) {
    Eigen::MatrixXd a(3, 3);
    a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
    const NullspaceResult r = nullspace(a);
    ASSERT_EQ(r.basis.size(), 1u);
    EXPECT_LT((a * r.basis[0]).norm(), 1e-12);
    EXPECT_NEAR(r.basis[0].norm(), 1.0, 1e-14);
    EXPECT_EQ(r.rank, 2);
}

TEST(Ode, Rk4IsFourthOrder) {
    const OdeField f = [](double, const State& y) { return State{y[1], -y[0]}; };
    const auto err = [&](double h) {
        const auto tr = rk4_integrate(f, {1.0, 0.0}, 2.0, h);
        return std::abs(tr.states.back()[0] - std::cos(2.0));
    };
    const double ratio = err(0.02) / err(0.01);
    EXPECT_GT(ratio, 14.0);
    EXPECT_LT(ratio, 18.0);
}

TEST(Ode, LandsOnFinalTime) {
    const OdeField f = [](double, const State& y) { return State{y[0]}; };
    const auto tr = rk4_integrate(f, {1.0}, 0.25, 0.1);
    EXPECT_DOUBLE_EQ(tr.times.back(), 0.25);
    EXPECT_NEAR(tr.states.back()[0], std::exp(0.25), 1e-6);
}
