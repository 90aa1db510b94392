#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gaq {

// Second-order truncated Taylor number in n active variables.
//
// The Hessian is stored packed (lower triangle, row major), so symmetry holds
// by construction. A jet with no active variables is a constant; constants mix
// freely with jets of any size.
class Jet2 {
public:
    Jet2() = default;
    Jet2(double value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    static Jet2 variable(double value, std::size_t index, std::size_t n);

    double value() const { return v_; }
    std::size_t size() const { return n_; }
    bool is_constant() const { return n_ == 0; }

    double grad(std::size_t i) const { return n_ ? g_[i] : 0.0; }
    double hess(std::size_t i, std::size_t j) const;

    Eigen::VectorXd gradient(std::size_t n) const;
    Eigen::MatrixXd hessian(std::size_t n) const;

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(double s);

    // f(a) given f, f', f'' at a.value().
    friend Jet2 chain(const Jet2& a, double f, double df, double d2f);
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator-(const Jet2& a);

private:
    static std::size_t packed(std::size_t i, std::size_t j) {
        return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
    }
    void promote(std::size_t n);

    double v_ = 0.0;
    std::size_t n_ = 0;
    std::vector<double> g_;
    std::vector<double> h_;
};

// Seeds variable `index` of `point` as a jet in point.size() variables.
Jet2 jet_var(std::span<const double> point, std::size_t index);
std::vector<Jet2> jet_vars(std::span<const double> point);

Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(double s, Jet2 a);
Jet2 operator*(Jet2 a, double s);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 asin(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 powi(const Jet2& a, int k);
Jet2 pow(const Jet2& a, double p);

double powi(double a, int k);

enum class JetOp { add, sub, mul, div, neg, sin, cos, tan, asin, sqrt, exp, powi };

// Tag-dispatched evaluation; `exponent` is used only by JetOp::powi.
Jet2 jet_eval(JetOp op, std::span<const Jet2> args, int exponent = 0);

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.value(); }

}  // namespace gaq
