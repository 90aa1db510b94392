#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaq {

using Rational = boost::multiprecision::cpp_rational;

// Multivariate polynomial over named variables with exact rational coefficients.
class Polynomial {
public:
    using Monomial = std::map<std::string, unsigned>;

    Polynomial() = default;
    Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
    Polynomial(long long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static Polynomial variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    unsigned degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned k) const;
    Polynomial derivative(const std::string& var) const;
    Polynomial substitute(const std::string& var, const Polynomial& value) const;
    double evaluate(const std::map<std::string, double>& values) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// Exact rational from a decimal literal such as "0.25" or "1e-3".
Rational parse_decimal(const std::string& text);

}  // namespace gaq
