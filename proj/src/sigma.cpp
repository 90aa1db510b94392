#include "gaq/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gaq/errors.hpp"

namespace gaq {

namespace {

// Levi-Civita symbol on 0-based indices.
double eta(std::size_t a, std::size_t b, std::size_t c) {
    if (a == b || b == c || a == c) return 0.0;
    return ((b + 3 - a) % 3 == 1) ? 1.0 : -1.0;
}

Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3d& a, const Vec3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3d sub(const Vec3d& a, const Vec3d& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

}  // namespace

void SigmaLattice::validate() const {
    if (N < 1) throw ArgumentError("sigma lattice needs at least one site");
    if (!(dx > 0.0)) throw ArgumentError("lattice spacing must be positive");
    if (norm(lambda) == 0.0) throw ArgumentError("lambda must be nonzero");
}

State sigma_flatten(const SigmaState& s) {
    const std::size_t N = s.S.size();
    if (s.L.size() != N) throw ArgumentError("S and L must have one entry per site");
    State y(6 * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t a = 0; a < 3; ++a) {
            y[3 * i + a] = s.S[i][a];
            y[3 * N + 3 * i + a] = s.L[i][a];
        }
    return y;
}

SigmaState sigma_unflatten(const State& y, std::size_t N) {
    if (y.size() != 6 * N) throw ArgumentError("flattened sigma state has the wrong length");
    SigmaState s;
    s.S.resize(N);
    s.L.resize(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t a = 0; a < 3; ++a) {
            s.S[i][a] = y[3 * i + a];
            s.L[i][a] = y[3 * N + 3 * i + a];
        }
    return s;
}

double sigma_bracket(const SigmaFunctional& F, const SigmaFunctional& G, const SigmaState& s, const SigmaLattice& L) {
    L.validate();
    const std::size_t N = L.N;
    const State y = sigma_flatten(s);
    if (y.size() != 6 * N) throw ArgumentError("state does not match the lattice size");
    const auto z = jet_vars(y);
    const Jet2 f = F(z), g = G(z);
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const auto S = [&](std::size_t a) { return 3 * i + a; };
        const auto Lx = [&](std::size_t a) { return 3 * N + 3 * i + a; };
        double site = 0.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t c = 0; c < 3; ++c) {
                    const double e = eta(a, b, c);
                    if (e == 0.0) continue;
                    const double Lc = s.L[i][c];
                    const double Sc = s.S[i][c] - L.lambda[c];
                    site += -e * Lc * f.grad(Lx(a)) * g.grad(Lx(b));
                    site += -e * Sc * (f.grad(Lx(a)) * g.grad(S(b)) - g.grad(Lx(a)) * f.grad(S(b)));
                }
        total += site / L.dx;
    }
    return total;
}

double sigma_hamiltonian(const SigmaState& s, const SigmaLattice& L) {
    L.validate();
    const std::size_t N = L.N;
    if (s.S.size() != N || s.L.size() != N) throw ArgumentError("state does not match the lattice size");
    double h = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const Vec3d d = sub(s.S[(i + 1) % N], s.S[i]);
        h += dot(s.L[i], s.L[i]) + dot(d, d) / (L.dx * L.dx);
    }
    return 0.5 * L.dx * h;
}

Jet2 sigma_hamiltonian_jet(std::span<const Jet2> z, const SigmaLattice& L) {
    const std::size_t N = L.N;
    Jet2 h(0.0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t a = 0; a < 3; ++a) {
            const Jet2& l = z[3 * N + 3 * i + a];
            const Jet2 d = z[3 * ((i + 1) % N) + a] - z[3 * i + a];
            h += l * l + (1.0 / (L.dx * L.dx)) * (d * d);
        }
    return (0.5 * L.dx) * h;
}

State sigma_rhs(const State& y, const SigmaLattice& L) {
    const std::size_t N = L.N;
    if (y.size() != 6 * N) throw ArgumentError("state does not match the lattice size");
    State out(6 * N);
    const double w = 1.0 / (L.dx * L.dx);
    for (std::size_t i = 0; i < N; ++i) {
        const std::size_t ip = (i + 1) % N, im = (i + N - 1) % N;
        Vec3d s, lap, l;
        for (std::size_t a = 0; a < 3; ++a) {
            s[a] = y[3 * i + a] - L.lambda[a];
            lap[a] = w * (y[3 * ip + a] - 2.0 * y[3 * i + a] + y[3 * im + a]);
            l[a] = y[3 * N + 3 * i + a];
        }
        const Vec3d dS = cross(s, l);
        const Vec3d dL = cross(lap, s);
        for (std::size_t a = 0; a < 3; ++a) {
            out[3 * i + a] = dS[a];
            out[3 * N + 3 * i + a] = dL[a];
        }
    }
    return out;
}

double sigma_eom_crosscheck(const SigmaState& s, const SigmaLattice& L) {
    const State y = sigma_flatten(s);
    const State rhs = sigma_rhs(y, L);
    const SigmaFunctional H = [&L](std::span<const Jet2> z) { return sigma_hamiltonian_jet(z, L); };
    double scale = 0.0, worst = 0.0;
    for (double r : rhs) scale = std::max(scale, std::abs(r));
    for (std::size_t k = 0; k < y.size(); ++k) {
        const SigmaFunctional zk = [k](std::span<const Jet2> z) { return z[k]; };
        worst = std::max(worst, std::abs(rhs[k] - sigma_bracket(zk, H, s, L)));
    }
    return worst / (1.0 + scale);
}

double SigmaDrift::max() const {
    double m = hamiltonian;
    for (double d : total_L) m = std::max(m, d);
    for (double d : casimir) m = std::max(m, d);
    return m;
}

Vec3d total_L(const SigmaState& s, const SigmaLattice& L) {
    Vec3d t{};
    for (const auto& l : s.L)
        for (std::size_t a = 0; a < 3; ++a) t[a] += L.dx * l[a];
    return t;
}

std::vector<double> casimirs(const SigmaState& s, const SigmaLattice& L) {
    std::vector<double> c;
    c.reserve(s.S.size());
    for (const auto& v : s.S) {
        const Vec3d d = sub(v, L.lambda);
        c.push_back(dot(d, d));
    }
    return c;
}

SigmaRun sigma_evolve(const SigmaState& s0, const SigmaLattice& L, double t_final, double step) {
    L.validate();
    if (!(step > 0.0)) throw ArgumentError("step must be positive");
    SigmaRun run;
    run.crosscheck = sigma_eom_crosscheck(s0, L);
    if (!(run.crosscheck < 1e-10))
        throw ValidationError("sigma equations of motion disagree with the bracket: " + std::to_string(run.crosscheck));
    const OdeField f = [&L](double, const State& y) { return sigma_rhs(y, L); };
    run.trajectory = rk4_integrate(f, sigma_flatten(s0), t_final, step);
    const double H0 = sigma_hamiltonian(s0, L);
    const Vec3d L0 = total_L(s0, L);
    const auto C0 = casimirs(s0, L);
    run.drift.casimir.assign(L.N, 0.0);
    for (const State& y : run.trajectory.states) {
        const SigmaState s = sigma_unflatten(y, L.N);
        run.drift.hamiltonian = std::max(run.drift.hamiltonian, std::abs(sigma_hamiltonian(s, L) - H0));
        const Vec3d Lt = total_L(s, L);
        for (std::size_t a = 0; a < 3; ++a) run.drift.total_L[a] = std::max(run.drift.total_L[a], std::abs(Lt[a] - L0[a]));
        const auto C = casimirs(s, L);
        for (std::size_t i = 0; i < L.N; ++i) run.drift.casimir[i] = std::max(run.drift.casimir[i], std::abs(C[i] - C0[i]));
    }
    return run;
}

SigmaState sigma_random_state(const SigmaLattice& L, std::uint64_t seed, double amplitude) {
    L.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SigmaState s;
    s.S.resize(L.N);
    s.L.resize(L.N);
    for (std::size_t i = 0; i < L.N; ++i)
        for (std::size_t a = 0; a < 3; ++a) s.S[i][a] = L.lambda[a] + amplitude * u(rng);
    for (std::size_t i = 0; i < L.N; ++i)
        for (std::size_t a = 0; a < 3; ++a) s.L[i][a] = amplitude * u(rng);
    return s;
}

// ---------------------------------------------------------------- local Euclidean group

template <class T>
std::array<T, 3> chart_rotate(std::span<const T> eps, std::span<const T> v) {
    using std::sqrt;
    const T e2 = eps[0] * eps[0] + eps[1] * eps[1] + eps[2] * eps[2];
    if (!(value_of(e2) < 4.0)) throw DomainError("chart_rotate", "chart requires |eps| < 2");
    const T s = sqrt(1.0 - 0.25 * e2);
    const std::array<T, 3> u{0.5 * eps[0], 0.5 * eps[1], 0.5 * eps[2]};
    const auto cr = [](const std::array<T, 3>& a, const std::array<T, 3>& b) {
        return std::array<T, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    const std::array<T, 3> vv{v[0], v[1], v[2]};
    const auto uv = cr(u, vv);
    const auto uuv = cr(u, uv);
    std::array<T, 3> out;
    for (std::size_t a = 0; a < 3; ++a) out[a] = vv[a] + 2.0 * (s * uv[a]) + 2.0 * uuv[a];
    return out;
}

template std::array<double, 3> chart_rotate(std::span<const double>, std::span<const double>);
template std::array<Jet2, 3> chart_rotate(std::span<const Jet2>, std::span<const Jet2>);

namespace {

class SigmaLaw {
public:
    explicit SigmaLaw(SigmaLattice L) : L_(L) {}
    std::size_t dim() const { return 6 * L_.N + 1; }

    template <class T>
    std::vector<T> compose(std::span<const T> gp, std::span<const T> g) const {
        using std::sqrt;
        check(gp.size());
        check(g.size());
        std::vector<T> out(dim());
        T cocycle(0.0);
        for (std::size_t i = 0; i < L_.N; ++i) {
            const std::size_t o = 6 * i;
            const auto ep = gp.subspan(o, 3), e = g.subspan(o, 3);
            const T sp = chart_scalar(ep), s = chart_scalar(e);
            for (std::size_t a = 0; a < 3; ++a) {
                const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
                out[o + a] = sp * e[a] + s * ep[a] + 0.5 * (ep[b] * e[c] - ep[c] * e[b]);
            }
            const auto Rt = chart_rotate<T>(ep, g.subspan(o + 3, 3));
            for (std::size_t a = 0; a < 3; ++a) {
                out[o + 3 + a] = Rt[a] + gp[o + 3 + a];
                cocycle += L_.lambda[a] * (Rt[a] - g[o + 3 + a]);
            }
        }
        out[6 * L_.N] = gp[6 * L_.N] + g[6 * L_.N] - L_.dx * cocycle;
        return out;
    }

    template <class T>
    std::vector<T> inverse(std::span<const T> g) const {
        check(g.size());
        std::vector<T> out(dim());
        T cocycle(0.0);
        for (std::size_t i = 0; i < L_.N; ++i) {
            const std::size_t o = 6 * i;
            std::array<T, 3> me{-g[o], -g[o + 1], -g[o + 2]};
            const auto Rt = chart_rotate<T>(std::span<const T>(me), g.subspan(o + 3, 3));  // R^T theta
            for (std::size_t a = 0; a < 3; ++a) {
                out[o + a] = me[a];
                out[o + 3 + a] = -Rt[a];
                cocycle += L_.lambda[a] * (Rt[a] - g[o + 3 + a]);
            }
        }
        out[6 * L_.N] = -g[6 * L_.N] + L_.dx * cocycle;
        return out;
    }

private:
    template <class T>
    static T chart_scalar(std::span<const T> e) {
        using std::sqrt;
        const T e2 = e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
        if (!(value_of(e2) < 4.0)) throw DomainError("sigma_group", "chart requires |eps| < 2");
        return sqrt(1.0 - 0.25 * e2);
    }
    void check(std::size_t n) const {
        if (n != dim()) throw ArgumentError("sigma group element has the wrong length");
    }
    SigmaLattice L_;
};

}  // namespace

LieGroup sigma_group(const SigmaLattice& L) {
    L.validate();
    GroupInfo info;
    info.name = "local_euclidean_" + std::to_string(L.N);
    for (std::size_t i = 0; i < L.N; ++i) {
        for (int a = 1; a <= 3; ++a) info.labels.push_back("phi" + std::to_string(a) + "@" + std::to_string(i));
        for (int a = 1; a <= 3; ++a) info.labels.push_back("theta" + std::to_string(a) + "@" + std::to_string(i));
    }
    info.labels.push_back("phase");
    info.central = 6 * L.N;
    info.evolution = 3;  // theta^1 of site 0; the group has no time coordinate
    info.identity.assign(6 * L.N + 1, 0.0);
    info.sample_radius.assign(6 * L.N + 1, 1.0);
    for (std::size_t i = 0; i < L.N; ++i)
        for (std::size_t a = 0; a < 3; ++a) info.sample_radius[6 * i + a] = 0.4;
    info.description = "Local SU(2) rotations acting on the time component of the cotangent field, centrally extended";
    return LieGroup(std::move(info), std::make_shared<NativeLaw<SigmaLaw, true>>(SigmaLaw(L)));
}

double SigmaFieldsReport::max() const { return std::max({phi_phi, phi_theta, central, theta_theta, stray}); }

SigmaFieldsReport sigma_local_group_fields(const SigmaLattice& L) {
    const LieGroup G = sigma_group(L);
    SigmaFieldsReport rep;
    rep.table = structure_constants(G);
    const auto& T = rep.table;
    const std::size_t N = L.N, n = G.dim(), z = 6 * N;
    const double dx = L.dx;
    const auto phi = [](std::size_t i, std::size_t a) { return 6 * i + a; };
    const auto th = [](std::size_t i, std::size_t a) { return 6 * i + 3 + a; };

    std::vector<char> seen(n * n * n, 0);
    const auto mark = [&](std::size_t c, std::size_t a, std::size_t b) { seen[(c * n + a) * n + b] = 1; };
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    for (std::size_t c = 0; c < 3; ++c) {
                        const double d = i == j ? 1.0 / dx : 0.0;
                        // Field outputs live at site i; functional constants are coordinate constants / dx.
                        const double pp = T(phi(i, c), phi(i, a), phi(j, b)) / dx;
                        rep.phi_phi = std::max(rep.phi_phi, std::abs(pp + eta(a, b, c) * d));
                        mark(phi(i, c), phi(i, a), phi(j, b));
                        const double pt = T(th(i, c), phi(i, a), th(j, b)) / dx;
                        rep.phi_theta = std::max(rep.phi_theta, std::abs(pt + eta(a, b, c) * d));
                        mark(th(i, c), phi(i, a), th(j, b));
                        const double tt = T(th(i, c), th(i, a), th(j, b)) / dx;
                        rep.theta_theta = std::max(rep.theta_theta, std::abs(tt));
                        mark(th(i, c), th(i, a), th(j, b));
                    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) {
                    double want = 0.0;
                    if (i == j)
                        for (std::size_t c = 0; c < 3; ++c) want += eta(a, b, c) * L.lambda[c] / dx;
                    const double got = T(z, phi(i, a), th(j, b)) / (dx * dx);
                    rep.central = std::max(rep.central, std::abs(got - want));
                    mark(z, phi(i, a), th(j, b));
                    rep.theta_theta = std::max(rep.theta_theta, std::abs(T(z, th(i, a), th(j, b))));
                    mark(z, th(i, a), th(j, b));
                    mark(z, phi(i, a), phi(j, b));
                    rep.stray = std::max(rep.stray, std::abs(T(z, phi(i, a), phi(j, b))));
                }
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (seen[(c * n + a) * n + b] || seen[(c * n + b) * n + a]) continue;
                rep.stray = std::max(rep.stray, std::abs(T(c, a, b)));
            }
    return rep;
}

SigmaNoether sigma_theta_noether(const SigmaLattice& L, const std::vector<double>& g) {
    const LieGroup G = sigma_group(L);
    if (g.size() != G.dim()) throw ArgumentError("sigma_theta_noether: wrong point length");
    SigmaNoether out;
    out.theta = theta(G, g);
    out.F = noether_invariants(G, g);
    const double lam = norm(L.lambda);
    for (std::size_t i = 0; i < L.N; ++i) {
        const std::size_t o = 6 * i;
        const Vec3d Lam = chart_rotate<double>(std::span<const double>(g).subspan(o, 3), std::span<const double>(L.lambda));
        const Vec3d th{g[o + 3], g[o + 4], g[o + 5]};
        Vec3d Lv, Sv;
        for (std::size_t a = 0; a < 3; ++a) {
            Lv[a] = out.F[static_cast<Eigen::Index>(o + a)] / L.dx;
            Sv[a] = out.F[static_cast<Eigen::Index>(o + 3 + a)] / L.dx;
        }
        const Vec3d want_L = cross(Lam, th);
        out.err_L = std::max(out.err_L, norm(sub(Lv, want_L)));
        out.err_S_printed = std::max(out.err_S_printed, norm(sub(Sv, sub(Lam, L.lambda))));
        out.err_S_opposite = std::max(out.err_S_opposite, norm(sub(Sv, sub(L.lambda, Lam))));
        const Vec3d sp{Sv[0] + L.lambda[0], Sv[1] + L.lambda[1], Sv[2] + L.lambda[2]};
        out.orbit_printed = std::max(out.orbit_printed, std::abs(norm(sp) - lam));
        out.orbit_opposite = std::max(out.orbit_opposite, std::abs(norm(sub(Sv, L.lambda)) - lam));
        out.Lambda.push_back(Lam);
        out.L_value.push_back(Lv);
        out.S_value.push_back(Sv);
    }
    return out;
}

PolarizationReport sigma_polarization_check(const SigmaLattice& Lin, SigmaPhase phase, int test_function, int samples,
                                            std::uint64_t seed) {
    SigmaLattice L = Lin;
    L.N = 1;
    const LieGroup G = sigma_group(L);
    const double kappa = phase == SigmaPhase::printed ? 1.0 : phase == SigmaPhase::invariant ? -1.0 : 0.0;
    PolarizationReport rep;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto g = G.sample(rng);
        const auto z = jet_vars(g);
        const std::span<const Jet2> zs(z);
        const std::array<Jet2, 3> lam{L.lambda[0], L.lambda[1], L.lambda[2]};
        // R^T theta = R(-eps) theta.
        const std::array<Jet2, 3> me{-z[0], -z[1], -z[2]};
        const auto Rt = chart_rotate<Jet2>(std::span<const Jet2>(me), zs.subspan(3, 3));
        Jet2 A = z[6];
        for (std::size_t a = 0; a < 3; ++a) A += (kappa * L.dx * L.lambda[a]) * (Rt[a] - z[3 + a]);
        const auto Lam = chart_rotate<Jet2>(zs.subspan(0, 3), std::span<const Jet2>(lam));
        Jet2 Phi(1.0);
        if (test_function == 1) {
            Phi = Jet2(0.0);
            for (std::size_t a = 0; a < 3; ++a) Phi += (Lam[a] - L.lambda[a]) * (Lam[a] - L.lambda[a]);
        } else if (test_function != 0) {
            throw ArgumentError("test_function must be 0 or 1");
        }
        const FieldJet fl = invariant_fields(G, FieldKind::left, g);
        // X Psi / e^{iA} = X Phi + i Phi X A.
        const auto apply = [&](const Eigen::VectorXd& X) {
            double xp = 0.0, xa = 0.0;
            for (std::size_t k = 0; k < 7; ++k) {
                xp += X[static_cast<Eigen::Index>(k)] * Phi.grad(k);
                xa += X[static_cast<Eigen::Index>(k)] * A.grad(k);
            }
            return std::complex<double>(xp, Phi.value() * xa);
        };
        Eigen::VectorXd Xl = Eigen::VectorXd::Zero(7);
        for (std::size_t a = 0; a < 3; ++a) Xl += L.lambda[a] * fl.X.col(static_cast<Eigen::Index>(a));
        rep.lambda_phi = std::max(rep.lambda_phi, std::abs(apply(Xl)));
        for (std::size_t a = 0; a < 3; ++a)
            rep.theta = std::max(rep.theta, std::abs(apply(fl.X.col(static_cast<Eigen::Index>(3 + a)))));
        const std::complex<double> u1 = apply(fl.X.col(6)) - std::complex<double>(0.0, Phi.value());
        rep.u1 = std::max(rep.u1, std::abs(u1));
    }
    return rep;
}

// ---------------------------------------------------------------- operators on polynomials of S (N = 1)

namespace {

const std::array<std::string, 3> kS{"S1", "S2", "S3"};

Rational exact(double x) { return Rational(x); }

void require_single_site(const SigmaLattice& L) {
    if (L.N != 1) throw ArgumentError("the operator realization is built for a single site");
}

Jet2 poly_jet(const Polynomial& p, std::span<const Jet2> s) {
    Jet2 out(0.0);
    for (const auto& [mono, coef] : p.terms()) {
        Jet2 t(static_cast<double>(coef));
        for (const auto& [var, e] : mono) {
            const auto it = std::find(kS.begin(), kS.end(), var);
            if (it == kS.end()) throw ArgumentError("unexpected variable " + var);
            t = t * powi(s[static_cast<std::size_t>(it - kS.begin())], static_cast<int>(e));
        }
        out += t;
    }
    return out;
}

double max_coefficient(const Polynomial& p) {
    double m = 0.0;
    for (const auto& [mono, coef] : p.terms()) m = std::max(m, std::abs(static_cast<double>(coef)));
    return m;
}

}  // namespace

Polynomial sigma_op_S(std::size_t a, const Polynomial& f, const SigmaLattice& L) {
    require_single_site(L);
    return (Polynomial::variable(kS.at(a)) - Polynomial(exact(L.lambda[a]))) * f;
}

Polynomial sigma_op_L(std::size_t a, const Polynomial& f, const SigmaLattice& L) {
    require_single_site(L);
    Polynomial out;
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c) {
            const double e = eta(a, b, c);
            if (e == 0.0) continue;
            out += Polynomial(Rational(static_cast<int>(e))) * Polynomial::variable(kS[b]) * f.derivative(kS[c]);
        }
    return Polynomial(Rational(1) / exact(L.dx)) * out;
}

Polynomial sigma_op_H(const Polynomial& f, const SigmaLattice& L) {
    require_single_site(L);
    // A single periodic site has no gradient term.
    Polynomial out;
    for (std::size_t a = 0; a < 3; ++a) out += sigma_op_L(a, sigma_op_L(a, f, L), L);
    return Polynomial(exact(L.dx) / 2) * out;
}

OperatorSuiteReport sigma_operator_suite(const SigmaLattice& Lin, std::uint64_t seed) {
    SigmaLattice L = Lin;
    L.N = 1;
    L.validate();
    OperatorSuiteReport rep;
    const Polynomial s1 = Polynomial::variable("S1"), s2 = Polynomial::variable("S2"), s3 = Polynomial::variable("S3");
    const std::vector<Polynomial> tests{Polynomial(1), s1, s1 * s2 + s3 * s3, s1 * s1 * s1 - Polynomial(2) * s2 * s3};

    const auto comm = [&](std::size_t a, std::size_t b, const Polynomial& f) {
        return sigma_op_L(a, sigma_op_S(b, f, L), L) - sigma_op_S(b, sigma_op_L(a, f, L), L);
    };

    // Measure alpha from [L_1, S_2] 1 = (alpha (S_3 - lambda_3) + beta lambda_3) / dx, and beta from
    // the pair whose eta_abc lambda_c is largest.
    {
        const Polynomial c12 = comm(0, 1, Polynomial(1));
        Polynomial lin = c12.derivative("S3");
        rep.s_coefficient = lin.evaluate({}) * L.dx;
        std::size_t ba = 0, bb = 1;
        double best = -1.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                double w = 0.0;
                for (std::size_t c = 0; c < 3; ++c) w += eta(a, b, c) * L.lambda[c];
                if (std::abs(w) > best) {
                    best = std::abs(w);
                    ba = a;
                    bb = b;
                }
            }
        double w = 0.0;
        for (std::size_t c = 0; c < 3; ++c) w += eta(ba, bb, c) * L.lambda[c];
        const Polynomial cab = comm(ba, bb, Polynomial(1));
        const double constant = cab.evaluate({{"S1", 0.0}, {"S2", 0.0}, {"S3", 0.0}}) * L.dx;
        // constant = -alpha w + beta w.
        rep.central = constant / w + rep.s_coefficient;
    }

    const Rational alpha(rep.s_coefficient), beta(rep.central);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const Polynomial& f : tests) {
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                Polynomial want;
                for (std::size_t c = 0; c < 3; ++c) {
                    const double e = eta(a, b, c);
                    if (e == 0.0) continue;
                    want += Polynomial(Rational(static_cast<int>(e)) / exact(L.dx)) *
                            (Polynomial(alpha) * sigma_op_S(c, f, L) + Polynomial(beta * exact(L.lambda[c])) * f);
                }
                const Polynomial got = comm(a, b, f);
                rep.exact_residual = std::max(rep.exact_residual, max_coefficient(got - want));
                rep.s_s = std::max(rep.s_s, max_coefficient(sigma_op_S(a, sigma_op_S(b, f, L), L) -
                                                            sigma_op_S(b, sigma_op_S(a, f, L), L)));

                // Jets: [L_a, S_b] f = L_a((S_b - lambda_b) f) - (S_b - lambda_b) L_a f at a random point.
                const double pt[3] = {u(rng), u(rng), u(rng)};
                const auto s = jet_vars(std::span<const double>(pt, 3));
                const Jet2 fj = poly_jet(f, s);
                const Jet2 sf = (s[b] - L.lambda[b]) * fj;
                const auto Lop = [&](const Jet2& h) {
                    double v = 0.0;
                    for (std::size_t bb = 0; bb < 3; ++bb)
                        for (std::size_t c = 0; c < 3; ++c) v += eta(a, bb, c) * pt[bb] * h.grad(c);
                    return v / L.dx;
                };
                const double jet_comm = Lop(sf) - (pt[b] - L.lambda[b]) * Lop(fj);
                rep.jet_residual = std::max(rep.jet_residual, std::abs(jet_comm - poly_jet(want, s).value()));
            }
        rep.h_degrees.emplace_back(f.degree(), sigma_op_H(f, L).degree());
    }
    const Polynomial ss = s1 * s1 + s2 * s2 + s3 * s3;
    for (std::size_t a = 0; a < 3; ++a) rep.l_invariant = std::max(rep.l_invariant, max_coefficient(sigma_op_L(a, ss, L)));
    return rep;
}

}  // namespace gaq
