#include "gaq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gaq/errors.hpp"
#include "gaq/lie.hpp"

namespace gaq {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// The bracket v ^ curl A - grad A0 - dA/dt from rows (value, d_t, d_x, d_y, d_z).
Vec3 lorentz_bracket(const std::array<std::array<double, 5>, 4>& P, const Vec3& v) {
    const Vec3 curl{P[3][3] - P[2][4], P[1][4] - P[3][2], P[2][2] - P[1][3]};
    const Vec3 vc = cross(v, curl);
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[i] = vc[i] - P[0][2 + i] - P[1 + i][1];
    return out;
}

std::array<std::array<double, 5>, 4> potential_rows(const std::array<ExprPtr, 4>& pot, double t, const double* x) {
    const double pt[4] = {t, x[0], x[1], x[2]};
    std::vector<Jet2> vars = jet_vars(std::span<const double>(pt, 4));
    std::array<std::array<double, 5>, 4> out{};
    for (int k = 0; k < 4; ++k) {
        const Jet2 j = eval_expr<Jet2>(*pot[k], {}, std::span<const Jet2>(vars), {});
        out[k][0] = j.value();
        for (std::size_t d = 0; d < 4; ++d) out[k][1 + d] = j.grad(d);
    }
    return out;
}

Vec3 gravity_accel(const std::array<std::array<double, 5>, 4>& H, const Vec3& v) {
    const Vec3 b = lorentz_bracket(H, v);
    Vec3 a;
    for (int i = 0; i < 3; ++i) {
        double hh = 0.0;  // d_i (h.h) = 2 h . d_i h
        for (int k = 1; k < 4; ++k) hh += 2.0 * H[k][0] * H[k][2 + i];
        a[i] = -b[i] + 0.25 * hh;
    }
    return a;
}

}  // namespace

const std::array<std::string, 4>& FieldConfig::names(FieldKind4 kind) {
    static const std::array<std::string, 4> em{"A0", "A1", "A2", "A3"};
    static const std::array<std::string, 4> grav{"h00", "h1", "h2", "h3"};
    return kind == FieldKind4::em ? em : grav;
}

Scope FieldConfig::scope() {
    Scope s;
    s.coords = {"t", "x", "y", "z"};
    s.allow_primed = false;
    return s;
}

FieldConfig parse_field_config(const std::string& text) {
    FieldConfig cfg;
    bool kind_set = false;
    std::istringstream is(text);
    std::size_t n = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++n;
        if (const auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        if (trim(raw).empty()) continue;
        const auto eq = raw.find('=');
        if (eq == std::string::npos) throw ParseError("expected NAME = EXPR", n, 1);
        const std::string name = trim(raw.substr(0, eq));
        std::optional<FieldKind4> kind;
        std::size_t slot = 0;
        for (FieldKind4 k : {FieldKind4::em, FieldKind4::gravity}) {
            const auto& nm = FieldConfig::names(k);
            if (auto it = std::find(nm.begin(), nm.end(), name); it != nm.end()) {
                kind = k;
                slot = static_cast<std::size_t>(it - nm.begin());
            }
        }
        if (!kind) throw ParseError("unknown potential '" + name + "'", n, 1);
        if (kind_set && *kind != cfg.kind) throw ParseError("mixes electromagnetic and gravitational potentials", n, 1);
        cfg.kind = *kind;
        kind_set = true;
        if (cfg.potential[slot]) throw ParseError("duplicate potential '" + name + "'", n, 1);
        cfg.potential[slot] = parse_expression(raw.substr(eq + 1), FieldConfig::scope(), n, eq + 1);
    }
    if (!kind_set) throw ParseError("field config defines no potentials", std::max<std::size_t>(n, 1), 1);
    for (auto& p : cfg.potential)
        if (!p) p = make_number(0.0);
    return cfg;
}

std::array<std::array<double, 5>, 4> potential_jets(const FieldConfig& cfg, double t, const double* x) {
    return potential_rows(cfg.potential, t, x);
}

OdeField em_equations_of_motion(const FieldConfig& cfg, double q, double m) {
    if (cfg.kind != FieldKind4::em) throw ArgumentError("em_equations_of_motion needs A0..A3");
    if (!(m > 0.0)) throw ArgumentError("mass must be positive");
    return [cfg, k = q / m](double t, const State& y) {
        if (y.size() != 6) throw ArgumentError("state must be (x1, x2, x3, v1, v2, v3)");
        const auto P = potential_rows(cfg.potential, t, y.data());
        const Vec3 v{y[3], y[4], y[5]};
        const Vec3 b = lorentz_bracket(P, v);
        return State{v[0], v[1], v[2], k * b[0], k * b[1], k * b[2]};
    };
}

OdeField gravity_equations_of_motion(const FieldConfig& cfg, double m) {
    if (cfg.kind != FieldKind4::gravity) throw ArgumentError("gravity_equations_of_motion needs h00, h1..h3");
    if (!(m > 0.0)) throw ArgumentError("mass must be positive");
    return [cfg](double t, const State& y) {
        if (y.size() != 6) throw ArgumentError("state must be (x1, x2, x3, v1, v2, v3)");
        const auto H = potential_rows(cfg.potential, t, y.data());
        const Vec3 a = gravity_accel(H, {y[3], y[4], y[5]});
        return State{y[3], y[4], y[5], a[0], a[1], a[2]};
    };
}

std::string GemConvention::label() const {
    std::ostringstream os;
    os << "q = " << (q_sign > 0 ? "+" : "-") << "m, A0 = h00 " << (a0_sign > 0 ? "+" : "-") << " h.h/4";
    return os.str();
}

GemReport gem_equivalence_check(const FieldConfig& gravity, int samples, std::uint64_t seed) {
    if (gravity.kind != FieldKind4::gravity) throw ArgumentError("gem_equivalence_check needs a gravity config");
    if (samples < 1) throw ArgumentError("samples must be >= 1");
    const auto& h = gravity.potential;
    ExprPtr hh = make_binary(NodeKind::add,
                             make_binary(NodeKind::add, make_binary(NodeKind::mul, h[1], h[1]),
                                         make_binary(NodeKind::mul, h[2], h[2])),
                             make_binary(NodeKind::mul, h[3], h[3]));
    ExprPtr quarter = make_binary(NodeKind::mul, make_number(0.25), hh);

    GemReport rep;
    std::size_t k = 0;
    for (double qs : {-1.0, 1.0})
        for (double as : {1.0, -1.0}) {
            GemConvention& c = rep.conventions[k];
            c.q_sign = qs;
            c.a0_sign = as;
            if (qs < 0 && as < 0) rep.printed = k;
            FieldConfig em;
            em.kind = FieldKind4::em;
            em.potential = {make_binary(as > 0 ? NodeKind::add : NodeKind::sub, h[0], quarter), h[1], h[2], h[3]};
            const OdeField fe = em_equations_of_motion(em, qs, 1.0);
            const OdeField fg = gravity_equations_of_motion(gravity, 1.0);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (int s = 0; s < samples; ++s) {
                const double t = u(rng);
                State y(6);
                for (double& yi : y) yi = u(rng);
                const State a = fe(t, y), b = fg(t, y);
                for (int i = 3; i < 6; ++i) c.residual = std::max(c.residual, std::abs(a[i] - b[i]));
            }
            ++k;
        }
    for (std::size_t i = 1; i < 4; ++i)
        if (rep.conventions[i].residual < rep.conventions[rep.chosen].residual) rep.chosen = i;
    const auto below = std::count_if(rep.conventions.begin(), rep.conventions.end(),
                                      [](const GemConvention& c) { return c.residual < 1e-9; });
    rep.passed = below == 1 && rep.best().residual < 1e-9;
    return rep;
}

std::vector<double> characteristic_direction(const LieGroup& G, const std::vector<double>& p) {
    const NullspaceResult ns = characteristic_kernel(G, p);
    if (ns.basis.size() != 1)
        throw ValidationError("characteristic kernel has dimension " + std::to_string(ns.basis.size()) +
                              ", expected 1");
    const Eigen::VectorXd& k = ns.basis[0];
    const double e = k[static_cast<Eigen::Index>(G.evolution())];
    if (std::abs(e) < 1e-12)
        throw NumericError("characteristic direction has no component along '" + G.labels()[G.evolution()] + "'", e);
    std::vector<double> out(G.dim());
    for (std::size_t i = 0; i < G.dim(); ++i) out[i] = k[static_cast<Eigen::Index>(i)] / e;
    return out;
}

OdeTrajectory flow_characteristic(const LieGroup& G, const std::vector<double>& p0, double t_final, double step) {
    if (p0.size() != G.dim()) throw ArgumentError("flow_characteristic: wrong point length");
    characteristic_direction(G, p0);  // structural check up front
    const OdeField f = [&G](double, const State& y) { return characteristic_direction(G, y); };
    return rk4_integrate(f, p0, t_final, step);
}

double ConservationReport::max() const {
    double m = 0.0;
    for (double d : drift) m = std::max(m, d);
    return m;
}

ConservationReport conservation_report(const LieGroup& G, const OdeTrajectory& traj) {
    ConservationReport rep;
    rep.labels = G.labels();
    rep.drift.assign(G.dim(), 0.0);
    rep.step = traj.step;
    rep.t_final = traj.times.empty() ? 0.0 : traj.times.back();
    if (traj.states.empty()) return rep;
    const Eigen::VectorXd F0 = noether_invariants(G, traj.states.front());
    for (const auto& s : traj.states) {
        const Eigen::VectorXd F = noether_invariants(G, s);
        for (std::size_t a = 0; a < G.dim(); ++a)
            rep.drift[a] = std::max(rep.drift[a], std::abs(F[static_cast<Eigen::Index>(a)] - F0[static_cast<Eigen::Index>(a)]));
    }
    return rep;
}

}  // namespace gaq
