#include "gaq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gaq/errors.hpp"

namespace gaq {

Polynomial::Polynomial(Rational c) {
    if (c != 0) terms_[Monomial{}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial{{name, 1u}}] = 1;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned k = 0;
        for (const auto& [v, e] : m) k += e;
        d = std::max(d, k);
    }
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Polynomial::Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        Monomial d = m;
        const unsigned e = it->second;
        if (e == 1) d.erase(var);
        else d[var] = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        unsigned e = 0;
        if (auto it = rest.find(var); it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        Polynomial term;
        term.terms_[rest] = c;
        r += term * value.pow(e);
    }
    return r;
}

double Polynomial::evaluate(const std::map<std::string, double>& values) const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = static_cast<double>(c);
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) throw ArgumentError("polynomial: no value for variable " + v);
            for (unsigned k = 0; k < e; ++k) t *= it->second;
        }
        s += t;
    }
    return s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (!unit || m.empty()) os << mag;
        bool sep = !unit || m.empty();
        for (const auto& [v, e] : m) {
            if (sep) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            sep = true;
        }
    }
    return os.str();
}

Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    boost::multiprecision::cpp_int num = 0;
    long long scale = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num = num * 10 + (text[i++] - '0');
        digits = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i++] - '0');
            --scale;
            digits = true;
        }
    }
    if (!digits) throw ArgumentError("not a decimal number: " + text);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        long long ex = 0;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ex = ex * 10 + (text[i++] - '0');
            any = true;
        }
        if (!any) throw ArgumentError("not a decimal number: " + text);
        scale += neg ? -ex : ex;
    }
    if (i != text.size()) throw ArgumentError("not a decimal number: " + text);
    boost::multiprecision::cpp_int p = 1;
    for (long long k = 0; k < (scale < 0 ? -scale : scale); ++k) p *= 10;
    return scale >= 0 ? Rational(num * p) : Rational(num, p);
}

}  // namespace gaq
