#include "gaq/group.hpp"

#include <algorithm>
#include <cmath>

#include "gaq/errors.hpp"

namespace gaq {

std::vector<double> GroupLaw::inverse(std::span<const double>) const {
    throw ArgumentError("group law has no closed-form inverse");
}

std::vector<Jet2> GroupLaw::inverse(std::span<const Jet2>) const {
    throw ArgumentError("group law has no closed-form inverse");
}

namespace {

class ExprLaw final : public GroupLaw {
public:
    ExprLaw(GroupDefinition def, std::vector<double> params)
        : def_(std::move(def)), params_(std::move(params)) {}

    std::size_t dim() const override { return def_.dim(); }

    std::vector<double> compose(std::span<const double> gp, std::span<const double> g) const override {
        return run<double>(def_.law, gp, g);
    }
    std::vector<Jet2> compose(std::span<const Jet2> gp, std::span<const Jet2> g) const override {
        return run<Jet2>(def_.law, gp, g);
    }
    bool has_inverse() const override { return !def_.inverse.empty(); }
    std::vector<double> inverse(std::span<const double> g) const override {
        return run<double>(def_.inverse, {}, g);
    }
    std::vector<Jet2> inverse(std::span<const Jet2> g) const override {
        return run<Jet2>(def_.inverse, {}, g);
    }

private:
    template <class T>
    std::vector<T> run(const std::vector<ExprPtr>& exprs, std::span<const T> gp, std::span<const T> g) const {
        check(gp.empty() ? dim() : gp.size());
        check(g.size());
        std::vector<T> out;
        out.reserve(exprs.size());
        for (const auto& e : exprs) out.push_back(eval_expr<T>(*e, gp, g, params_));
        return out;
    }
    void check(std::size_t n) const {
        if (n != dim())
            throw ArgumentError("group element of length " + std::to_string(n) + ", expected " +
                                std::to_string(dim()));
    }

    GroupDefinition def_;
    std::vector<double> params_;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

LieGroup::LieGroup(GroupInfo info, std::shared_ptr<const GroupLaw> law)
    : info_(std::move(info)), law_(std::move(law)) {
    const std::size_t n = law_->dim();
    if (info_.labels.size() != n || info_.identity.size() != n)
        throw ArgumentError("group info does not match the law dimension");
    if (info_.central >= n || info_.evolution >= n) throw ArgumentError("group slot out of range");
    if (info_.sample_radius.empty()) info_.sample_radius.assign(n, 1.0);
    if (info_.sample_radius.size() != n) throw ArgumentError("sample radius size mismatch");
}

LieGroup LieGroup::from_definition(const GroupDefinition& def, const std::map<std::string, double>& params) {
    std::vector<double> values = def.default_params();
    for (const auto& [name, v] : params) {
        auto it = std::find_if(def.params.begin(), def.params.end(),
                               [&](const auto& p) { return p.first == name; });
        if (it == def.params.end())
            throw ArgumentError("group " + def.name + " has no parameter '" + name + "'");
        values[static_cast<std::size_t>(it - def.params.begin())] = v;
    }
    GroupInfo info;
    info.name = def.name;
    info.labels = def.coords;
    info.central = def.central;
    info.identity = def.identity;
    info.evolution = def.evolution.value_or(0);
    return LieGroup(std::move(info), std::make_shared<ExprLaw>(def, std::move(values)));
}

std::size_t LieGroup::index_of(const std::string& label) const {
    auto it = std::find(info_.labels.begin(), info_.labels.end(), label);
    if (it == info_.labels.end()) throw ArgumentError("group " + name() + " has no coordinate '" + label + "'");
    return static_cast<std::size_t>(it - info_.labels.begin());
}

Eigen::MatrixXd LieGroup::left_jacobian(std::span<const double> h, std::span<const double> g) const {
    const std::size_t n = dim();
    std::vector<Jet2> hj;
    hj.reserve(n);
    for (std::size_t i = 0; i < n; ++i) hj.push_back(Jet2::variable(h[i], i, n));
    std::vector<Jet2> gj(g.begin(), g.end());
    const auto r = law_->compose(std::span<const Jet2>(hj), std::span<const Jet2>(gj));
    Eigen::MatrixXd J(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r[i].grad(j);
    return J;
}

std::vector<double> LieGroup::newton_inverse(std::span<const double> g) const {
    const std::size_t n = dim();
    std::vector<double> h = identity();
    double res = 0.0;
    for (int it = 0; it < 50; ++it) {
        const auto c = law_->compose(std::span<const double>(h), g);
        Eigen::VectorXd r(n);
        for (std::size_t i = 0; i < n; ++i) r[static_cast<Eigen::Index>(i)] = c[i] - identity()[i];
        res = r.lpNorm<Eigen::Infinity>();
        if (res < 1e-12) return h;
        const Eigen::VectorXd d = left_jacobian(h, g).partialPivLu().solve(r);
        for (std::size_t i = 0; i < n; ++i) h[i] -= d[static_cast<Eigen::Index>(i)];
    }
    const auto c = law_->compose(std::span<const double>(h), g);
    res = max_abs_diff(c, identity());
    if (res < 1e-12) return h;
    throw NumericError("inverse: Newton did not converge for group " + name(), res);
}

std::vector<double> LieGroup::inverse(std::span<const double> g) const {
    if (g.size() != dim()) throw ArgumentError("inverse: wrong element length");
    if (law_->has_inverse()) return law_->inverse(g);
    return newton_inverse(g);
}

std::vector<Jet2> LieGroup::inverse(std::span<const Jet2> g) const {
    if (g.size() != dim()) throw ArgumentError("inverse: wrong element length");
    if (law_->has_inverse()) return law_->inverse(g);
    const std::size_t n = dim();
    std::vector<double> gv(n);
    for (std::size_t i = 0; i < n; ++i) gv[i] = g[i].value();
    const std::vector<double> h0 = newton_inverse(gv);
    const Eigen::MatrixXd Jinv = left_jacobian(h0, gv).inverse();
    std::vector<Jet2> h(h0.begin(), h0.end());
    for (int pass = 0; pass < 2; ++pass) {
        auto F = law_->compose(std::span<const Jet2>(h), g);
        for (std::size_t i = 0; i < n; ++i) F[i] -= Jet2(identity()[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double a = Jinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                if (a != 0.0) h[i] -= a * F[j];
            }
    }
    return h;
}

std::vector<double> LieGroup::sample(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> g(dim());
    for (std::size_t i = 0; i < dim(); ++i) g[i] = info_.sample_radius[i] * u(rng);
    return g;
}

void LieGroup::validate(int samples, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const auto& e = identity();
    for (int s = 0; s < samples; ++s) {
        const auto g = sample(rng);
        const double r1 = std::max(max_abs_diff(compose(e, g), g), max_abs_diff(compose(g, e), g));
        if (!(r1 < 1e-10))
            throw ValidationError("group " + name() + ": identity axiom residual " + std::to_string(r1));
        const auto gi = inverse(g);
        const double r2 = std::max(max_abs_diff(compose(gi, g), e), max_abs_diff(compose(g, gi), e));
        if (!(r2 < 1e-9))
            throw ValidationError("group " + name() + ": inverse axiom residual " + std::to_string(r2));
    }
    const double r3 = associativity_check(*this, samples, seed + 1);
    if (!(r3 < 1e-9))
        throw ValidationError("group " + name() + ": associativity residual " + std::to_string(r3));
}

double associativity_check(const LieGroup& G, int samples, std::uint64_t seed) {
    if (samples < 1) throw ArgumentError("associativity_check: samples must be >= 1");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const auto a = G.sample(rng), b = G.sample(rng), c = G.sample(rng);
        const auto lhs = G.compose(G.compose(a, b), c);
        const auto rhs = G.compose(a, G.compose(b, c));
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return worst;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"galilei_ext_1p1",
         {"m", "hbar"},
         "Centrally extended Galilei group in 1+1 dimensions, coordinates (t, x, v, phi).",
         R"(group galilei_ext_1p1
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
inverse:
t^-1 = -t
x^-1 = -x + v*t
v^-1 = -v
phi^-1 = -phi - (m/hbar)*((-x + v*t)*v + t*(-v*v + 0.5*v^2))
)"},
        {"galilei_em_3p1",
         {"m", "q", "hbar"},
         "Galilei group in 3+1 dimensions extended by constant potentials (A_x, A_t) and two "
         "cocycles with coefficients m and q; rotations disregarded. The q-cocycle carries the "
         "left-factor A_t' in its t*A_t' term, the variant that passes the associativity check.",
         R"(group galilei_em_3p1
params m=1 q=1 hbar=1
coords t x1 x2 x3 v1 v2 v3 A1 A2 A3 At phi
central phi
identity 0 0 0 0 0 0 0 0 0 0 0 0
evolution t
law:
t'' = t' + t
x1'' = x1' + x1 + v1'*t
x2'' = x2' + x2 + v2'*t
x3'' = x3' + x3 + v3'*t
v1'' = v1' + v1
v2'' = v2' + v2
v3'' = v3' + v3
A1'' = A1' + A1
A2'' = A2' + A2
A3'' = A3' + A3
At'' = At' + At + v1'*A1 + v2'*A2 + v3'*A3
phi'' = phi' + phi + (m/hbar)*(x1'*v1 + x2'*v2 + x3'*v3 + t*(v1'*v1 + v2'*v2 + v3'*v3 + 0.5*(v1'^2 + v2'^2 + v3'^2))) + (q/hbar)*(x1'*A1 + x2'*A2 + x3'*A3 + t*(v1'*A1 + v2'*A2 + v3'*A3) + t*At')
)"},
    };
    return entries;
}

LieGroup catalog(const std::string& key, const std::map<std::string, double>& params) {
    for (const auto& e : catalog_entries()) {
        if (e.key != key) continue;
        for (const auto& p : e.required_params)
            if (!params.count(p)) throw ArgumentError("catalog " + key + ": missing required parameter '" + p + "'");
        const GroupDefinition def = parse_group_file(e.gdf);
        LieGroup G = LieGroup::from_definition(def, params).with_description(e.description);
        G.validate();
        return G;
    }
    throw ArgumentError("unknown catalog key '" + key + "'");
}

}  // namespace gaq
