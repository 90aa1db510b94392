#include "gaq/jet.hpp"

#include <cmath>
#include <string>

#include "gaq/errors.hpp"

namespace gaq {

Jet2 Jet2::variable(double value, std::size_t index, std::size_t n) {
    if (index >= n)
        throw ArgumentError("jet_var: index " + std::to_string(index) + " out of range for " +
                            std::to_string(n) + " variables");
    Jet2 j(value);
    j.promote(n);
    j.g_[index] = 1.0;
    return j;
}

void Jet2::promote(std::size_t n) {
    if (n_ == n) return;
    if (n_ != 0)
        throw ArgumentError("jet size mismatch: " + std::to_string(n_) + " vs " +
                            std::to_string(n));
    n_ = n;
    g_.assign(n, 0.0);
    h_.assign(n * (n + 1) / 2, 0.0);
}

double Jet2::hess(std::size_t i, std::size_t j) const {
    return n_ ? h_[packed(i, j)] : 0.0;
}

Eigen::VectorXd Jet2::gradient(std::size_t n) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n_ && i < n; ++i) out[static_cast<Eigen::Index>(i)] = g_[i];
    return out;
}

Eigen::MatrixXd Jet2::hessian(std::size_t n) const {
    const auto N = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N, N);
    if (n_ == 0) return out;
    for (std::size_t i = 0; i < n_ && i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double h = h_[packed(i, j)];
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = h;
            out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = h;
        }
    return out;
}

Jet2& Jet2::operator+=(const Jet2& o) {
    v_ += o.v_;
    if (o.n_ == 0) return *this;
    promote(o.n_);
    for (std::size_t i = 0; i < n_; ++i) g_[i] += o.g_[i];
    for (std::size_t k = 0; k < h_.size(); ++k) h_[k] += o.h_[k];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    v_ -= o.v_;
    if (o.n_ == 0) return *this;
    promote(o.n_);
    for (std::size_t i = 0; i < n_; ++i) g_[i] -= o.g_[i];
    for (std::size_t k = 0; k < h_.size(); ++k) h_[k] -= o.h_[k];
    return *this;
}

Jet2& Jet2::operator*=(double s) {
    v_ *= s;
    for (double& x : g_) x *= s;
    for (double& x : h_) x *= s;
    return *this;
}

Jet2 chain(const Jet2& a, double f, double df, double d2f) {
    Jet2 r(f);
    if (a.n_ == 0) return r;
    r.promote(a.n_);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i) r.g_[i] = df * a.g_[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = d2f * a.g_[i];
        for (std::size_t j = 0; j <= i; ++j, ++k) r.h_[k] = df * a.h_[k] + gi * a.g_[j];
    }
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    if (a.n_ == 0) return b * a.v_;
    if (b.n_ == 0) return a * b.v_;
    if (a.n_ != b.n_)
        throw ArgumentError("jet size mismatch: " + std::to_string(a.n_) + " vs " +
                            std::to_string(b.n_));
    Jet2 r(a.v_ * b.v_);
    r.promote(a.n_);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i) r.g_[i] = a.v_ * b.g_[i] + b.v_ * a.g_[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = a.g_[i], bi = b.g_[i];
        for (std::size_t j = 0; j <= i; ++j, ++k)
            r.h_[k] = a.v_ * b.h_[k] + b.v_ * a.h_[k] + ai * b.g_[j] + bi * a.g_[j];
    }
    return r;
}

Jet2 operator-(const Jet2& a) {
    Jet2 r(a);
    r *= -1.0;
    return r;
}

Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
Jet2 operator*(double s, Jet2 a) { return a *= s; }
Jet2 operator*(Jet2 a, double s) { return a *= s; }

Jet2 operator/(const Jet2& a, const Jet2& b) {
    const double d = b.value();
    if (d == 0.0) throw DomainError("divide", "division by zero");
    if (b.is_constant()) return a * (1.0 / d);
    return a * chain(b, 1.0 / d, -1.0 / (d * d), 2.0 / (d * d * d));
}

Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return chain(a, s, c, -s);
}

Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return chain(a, c, -s, -c);
}

Jet2 tan(const Jet2& a) {
    const double c = std::cos(a.value());
    if (c == 0.0) throw DomainError("tan", "argument at a pole");
    const double t = std::tan(a.value());
    const double sec2 = 1.0 + t * t;
    return chain(a, t, sec2, 2.0 * t * sec2);
}

Jet2 asin(const Jet2& a) {
    const double x = a.value();
    if (!(std::abs(x) < 1.0)) throw DomainError("asin", "argument " + std::to_string(x) + " outside (-1, 1)");
    const double w = 1.0 - x * x;
    const double d = 1.0 / std::sqrt(w);
    return chain(a, std::asin(x), d, x * d / w);
}

Jet2 sqrt(const Jet2& a) {
    const double x = a.value();
    if (x < 0.0) throw DomainError("sqrt", "negative argument " + std::to_string(x));
    if (x == 0.0) {
        if (a.is_constant()) return Jet2(0.0);
        throw DomainError("sqrt", "derivative undefined at 0");
    }
    const double s = std::sqrt(x);
    return chain(a, s, 0.5 / s, -0.25 / (s * x));
}

Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.value());
    return chain(a, e, e, e);
}

Jet2 log(const Jet2& a) {
    const double x = a.value();
    if (!(x > 0.0)) throw DomainError("log", "non-positive argument " + std::to_string(x));
    return chain(a, std::log(x), 1.0 / x, -1.0 / (x * x));
}

double powi(double a, int k) {
    if (k < 0) {
        if (a == 0.0) throw DomainError("pow", "zero base with negative exponent");
        return 1.0 / powi(a, -k);
    }
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a;
    return r;
}

Jet2 powi(const Jet2& a, int k) {
    const double x = a.value();
    if (k == 0) return Jet2(1.0);
    if (k == 1) return a;
    const double f = powi(x, k);
    const double df = k * powi(x, k - 1);
    const double d2f = static_cast<double>(k) * (k - 1) * powi(x, k - 2);
    return chain(a, f, df, d2f);
}

Jet2 pow(const Jet2& a, double p) {
    const double x = a.value();
    if (!(x > 0.0)) throw DomainError("pow", "non-positive base " + std::to_string(x));
    const double f = std::pow(x, p);
    return chain(a, f, p * f / x, p * (p - 1.0) * f / (x * x));
}

Jet2 jet_var(std::span<const double> point, std::size_t index) {
    if (index >= point.size())
        throw ArgumentError("jet_var: index " + std::to_string(index) + " out of range for " +
                            std::to_string(point.size()) + " variables");
    return Jet2::variable(point[index], index, point.size());
}

std::vector<Jet2> jet_vars(std::span<const double> point) {
    std::vector<Jet2> out;
    out.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) out.push_back(jet_var(point, i));
    return out;
}

Jet2 jet_eval(JetOp op, std::span<const Jet2> args, int exponent) {
    const auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw ArgumentError("jet_eval: expected " + std::to_string(k) + " arguments, got " +
                                std::to_string(args.size()));
    };
    switch (op) {
        case JetOp::add: need(2); return args[0] + args[1];
        case JetOp::sub: need(2); return args[0] - args[1];
        case JetOp::mul: need(2); return args[0] * args[1];
        case JetOp::div: need(2); return args[0] / args[1];
        case JetOp::neg: need(1); return -args[0];
        case JetOp::sin: need(1); return sin(args[0]);
        case JetOp::cos: need(1); return cos(args[0]);
        case JetOp::tan: need(1); return tan(args[0]);
        case JetOp::asin: need(1); return asin(args[0]);
        case JetOp::sqrt: need(1); return sqrt(args[0]);
        case JetOp::exp: need(1); return exp(args[0]);
        case JetOp::powi: need(1); return powi(args[0], exponent);
    }
    throw ArgumentError("jet_eval: unknown operation");
}

}  // namespace gaq
