#include "gaq/kg.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gaq/errors.hpp"

namespace gaq {

double KGLattice::k(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / (static_cast<double>(N) * dx);
}

double KGLattice::omega(std::size_t j) const {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
    return std::sqrt(m * m + (2.0 - 2.0 * std::cos(a)) / (dx * dx));
}

void KGLattice::validate() const {
    if (N < 1) throw ArgumentError("lattice needs at least one site");
    if (!(dx > 0.0)) throw ArgumentError("lattice spacing must be positive");
    if (!(m > 0.0)) throw ArgumentError("mass must be positive so every mode frequency is nonzero");
    if (!(c > 0.0)) throw ArgumentError("c must be positive");
}

namespace {

struct Dft {
    std::vector<double> cs, sn;  // cs[j * N + x]
    explicit Dft(const KGLattice& L) : cs(L.N * L.N), sn(L.N * L.N) {
        const double N = static_cast<double>(L.N);
        for (std::size_t j = 0; j < L.N; ++j)
            for (std::size_t x = 0; x < L.N; ++x) {
                const double a = 2.0 * std::numbers::pi * static_cast<double>((j * x) % L.N) / N;
                cs[j * L.N + x] = std::cos(a);
                sn[j * L.N + x] = std::sin(a);
            }
    }
};

template <class T>
void accumulate(T& acc, double w, const T& v) {
    if (w != 0.0) acc += w * v;
}

template <class T>
KGFields<T> translate_impl(const KGLattice& L, const Dft& D, const KGFields<T>& s, const T& b) {
    using std::cos;
    using std::sin;
    const std::size_t N = L.N;
    if (s.phi.size() != N || s.phidot.size() != N) throw ArgumentError("state does not match the lattice size");
    std::vector<T> pc(N, T(0.0)), ps(N, T(0.0)), dc(N, T(0.0)), ds(N, T(0.0));
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t x = 0; x < N; ++x) {
            const double c = D.cs[j * N + x], sn = D.sn[j * N + x];
            accumulate(pc[j], c, s.phi[x]);
            accumulate(ps[j], sn, s.phi[x]);
            accumulate(dc[j], c, s.phidot[x]);
            accumulate(ds[j], sn, s.phidot[x]);
        }
    for (std::size_t j = 0; j < N; ++j) {
        const double W = L.omega(j);
        const T arg = (L.c * W) * b;
        const T co = cos(arg), si = sin(arg);
        const T npc = co * pc[j] + (si * dc[j]) * (1.0 / W);
        const T nps = co * ps[j] + (si * ds[j]) * (1.0 / W);
        const T ndc = co * dc[j] - W * (si * pc[j]);
        const T nds = co * ds[j] - W * (si * ps[j]);
        pc[j] = npc;
        ps[j] = nps;
        dc[j] = ndc;
        ds[j] = nds;
    }
    KGFields<T> out{std::vector<T>(N, T(0.0)), std::vector<T>(N, T(0.0))};
    const double inv = 1.0 / static_cast<double>(N);
    for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t j = 0; j < N; ++j) {
            const double c = D.cs[j * N + x] * inv, sn = D.sn[j * N + x] * inv;
            accumulate(out.phi[x], c, pc[j]);
            accumulate(out.phi[x], sn, ps[j]);
            accumulate(out.phidot[x], c, dc[j]);
            accumulate(out.phidot[x], sn, ds[j]);
        }
    }
    return out;
}

class KGLaw {
public:
    explicit KGLaw(KGLattice L) : L_(L), D_(L) {}
    std::size_t dim() const { return 2 * L_.N + 2; }

    template <class T>
    std::vector<T> compose(std::span<const T> gp, std::span<const T> g) const {
        check(gp.size());
        check(g.size());
        const std::size_t N = L_.N;
        KGFields<T> Fp{{gp.begin() + 1, gp.begin() + 1 + N}, {gp.begin() + 1 + N, gp.begin() + 1 + 2 * N}};
        const KGFields<T> TF = translate_impl(L_, D_, Fp, g[0]);
        std::vector<T> out(dim());
        out[0] = gp[0] + g[0];
        T cocycle(0.0);
        for (std::size_t x = 0; x < N; ++x) {
            out[1 + x] = TF.phi[x] + g[1 + x];
            out[1 + N + x] = TF.phidot[x] + g[1 + N + x];
            cocycle += TF.phi[x] * g[1 + N + x] - TF.phidot[x] * g[1 + x];
        }
        out[2 * N + 1] = gp[2 * N + 1] + g[2 * N + 1] + (0.5 * L_.dx) * cocycle;
        return out;
    }

    template <class T>
    std::vector<T> inverse(std::span<const T> g) const {
        check(g.size());
        const std::size_t N = L_.N;
        KGFields<T> F{{g.begin() + 1, g.begin() + 1 + N}, {g.begin() + 1 + N, g.begin() + 1 + 2 * N}};
        const KGFields<T> TF = translate_impl(L_, D_, F, T(-g[0]));
        std::vector<T> out(dim());
        out[0] = -g[0];
        for (std::size_t x = 0; x < N; ++x) {
            out[1 + x] = -TF.phi[x];
            out[1 + N + x] = -TF.phidot[x];
        }
        out[2 * N + 1] = -g[2 * N + 1];
        return out;
    }

private:
    void check(std::size_t n) const {
        if (n != dim()) throw ArgumentError("KG group element has the wrong length");
    }
    KGLattice L_;
    Dft D_;
};

}  // namespace

template <class T>
KGFields<T> kg_time_translate(const KGLattice& L, const KGFields<T>& s, const T& b) {
    L.validate();
    return translate_impl(L, Dft(L), s, b);
}

template KGFields<double> kg_time_translate(const KGLattice&, const KGFields<double>&, const double&);
template KGFields<Jet2> kg_time_translate(const KGLattice&, const KGFields<Jet2>&, const Jet2&);

Eigen::Matrix2d kg_mode_map(const KGLattice& L, std::size_t j, double b) {
    L.validate();
    const double W = L.omega(j), a = b * L.c * W;
    Eigen::Matrix2d M;
    M << std::cos(a), std::sin(a) / W, -W * std::sin(a), std::cos(a);
    return M;
}

std::complex<double> kg_noether_charge(const KGLattice& L, const KGState& s, std::size_t j) {
    L.validate();
    if (s.phi.size() != L.N || s.phidot.size() != L.N) throw ArgumentError("state does not match the lattice size");
    const std::complex<double> I(0.0, 1.0);
    const double W = L.omega(j);
    std::complex<double> sum{};
    for (std::size_t x = 0; x < L.N; ++x) {
        const double kx = 2.0 * std::numbers::pi * static_cast<double>((j * x) % L.N) / static_cast<double>(L.N);
        sum += std::exp(I * kx) * (s.phidot[x] - I * W * s.phi[x]);
    }
    return I * L.dx * sum;
}

LieGroup kg_group(const KGLattice& L) {
    L.validate();
    GroupInfo info;
    info.name = "kg_lattice_" + std::to_string(L.N);
    info.labels.push_back("b");
    for (std::size_t x = 0; x < L.N; ++x) info.labels.push_back("phi" + std::to_string(x));
    for (std::size_t x = 0; x < L.N; ++x) info.labels.push_back("phidot" + std::to_string(x));
    info.labels.push_back("phase");
    info.central = 2 * L.N + 1;
    info.evolution = 0;
    info.identity.assign(2 * L.N + 2, 0.0);
    info.sample_radius.assign(2 * L.N + 2, 1.0);
    info.description = "Klein-Gordon field on a periodic lattice with the time action and its cocycle";
    return LieGroup(std::move(info), std::make_shared<NativeLaw<KGLaw, true>>(KGLaw(L)));
}

double KGFieldsReport::max() const { return std::max({b_phi, b_phidot, central, nested, stray}); }

KGFieldsReport kg_group_fields(const KGLattice& L) {
    const LieGroup G = kg_group(L);
    KGFieldsReport rep;
    rep.table = structure_constants(G);
    const auto& T = rep.table;
    const std::size_t N = L.N;
    const std::size_t b = 0, z = 2 * N + 1;
    const auto phi = [](std::size_t i) { return 1 + i; };
    const auto dot = [N](std::size_t i) { return 1 + N + i; };

    Eigen::MatrixXd K = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N)) * L.m * L.m;
    for (std::size_t i = 0; i < N; ++i) {
        const auto I = static_cast<Eigen::Index>(i);
        K(I, I) += 2.0 / (L.dx * L.dx);
        K(I, static_cast<Eigen::Index>((i + 1) % N)) -= 1.0 / (L.dx * L.dx);
        K(I, static_cast<Eigen::Index>((i + N - 1) % N)) -= 1.0 / (L.dx * L.dx);
    }

    // Expected coordinate constants; everything else must vanish.
    const std::size_t n = G.dim();
    std::vector<double> expect(n * n * n, 0.0);
    const auto E = [&](std::size_t c, std::size_t a, std::size_t bb) -> double& { return expect[(c * n + a) * n + bb]; };
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            E(dot(j), b, phi(i)) = -L.c * K(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
            E(phi(j), b, dot(i)) = i == j ? L.c : 0.0;
        }

    // Central orientation from the first diagonal pair.
    const double c00 = T(z, phi(0), dot(0)) / (L.dx * L.dx);
    rep.central_sign = c00 < 0.0 ? -1 : 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const double func = T(z, phi(i), dot(j)) / (L.dx * L.dx);
            const double want = i == j ? rep.central_sign / L.dx : 0.0;
            rep.central = std::max(rep.central, std::abs(func - want));
            E(z, phi(i), dot(j)) = T(z, phi(i), dot(j));  // already accounted for
        }

    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t bb = 0; bb < n; ++bb) {
                if (a == bb) continue;
                const double got = T(c, a, bb);
                const double want = a < bb ? E(c, a, bb) : -E(c, bb, a);
                const double d = std::abs(got - want);
                if (a == b && bb >= 1 && bb <= N && c >= 1 + N && c <= 2 * N) rep.b_phi = std::max(rep.b_phi, d);
                else if (a == b && bb > N && bb <= 2 * N && c >= 1 && c <= N) rep.b_phidot = std::max(rep.b_phidot, d);
                else rep.stray = std::max(rep.stray, d);
            }

    // Nested commutator from the table: [X_b, [X_b, X_phidot_i]] = sum_e C^e_{b,phidot_i} [X_b, X_e].
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t d = 0; d < n; ++d) {
            double s = 0.0;
            for (std::size_t e = 0; e < n; ++e) s += T(e, b, dot(i)) * T(d, b, e);
            const double want = (d >= 1 + N && d <= 2 * N)
                                    ? -L.c * L.c * K(static_cast<Eigen::Index>(d - 1 - N), static_cast<Eigen::Index>(i))
                                    : 0.0;
            rep.nested = std::max(rep.nested, std::abs(s - want));
        }
    return rep;
}

std::complex<double> kg_semi_invariance_at(double m, const std::array<double, 4>& k, const std::array<double, 4>& x,
                                           double phi, const std::array<double, 4>& dphi) {
    // Jet variables: x^0..x^3, phi, phi_0..phi_3 (lower indices).
    double pt[9];
    for (int i = 0; i < 4; ++i) pt[i] = x[i];
    pt[4] = phi;
    for (int i = 0; i < 4; ++i) pt[5 + i] = dphi[i];
    const auto v = jet_vars(std::span<const double>(pt, 9));
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};

    Jet2 lag = -0.5 * m * m * v[4] * v[4];
    for (int mu = 0; mu < 4; ++mu) lag += 0.5 * eta[mu] * v[5 + mu] * v[5 + mu];

    // kx = k_mu x^mu with k^mu given, so k_mu = eta k^mu.
    Jet2 kx(0.0);
    for (int mu = 0; mu < 4; ++mu) kx += (eta[mu] * k[mu]) * v[mu];
    const Jet2 ce = cos(kx), se = sin(kx);

    // X^phi = i e^{ikx}; X^{phi_nu} = d_nu (i e^{ikx}) = -k_nu e^{ikx}.
    std::complex<double> Xl = std::complex<double>(-se.value(), ce.value()) * lag.grad(4);
    for (int nu = 0; nu < 4; ++nu)
        Xl += -eta[nu] * k[nu] * std::complex<double>(ce.value(), se.value()) * lag.grad(static_cast<std::size_t>(5 + nu));

    // beta^mu = -k^mu e^{ikx} phi; total derivative d_mu = partial_mu + phi_mu partial_phi.
    const Jet2 br = -1.0 * ce * v[4], bi = -1.0 * se * v[4];
    std::complex<double> div{};
    for (int mu = 0; mu < 4; ++mu) {
        const std::size_t m_ = static_cast<std::size_t>(mu);
        const double dr = br.grad(m_) + dphi[mu] * br.grad(4);
        const double di = bi.grad(m_) + dphi[mu] * bi.grad(4);
        div += k[mu] * std::complex<double>(dr, di);
    }
    return Xl - div;
}

double kg_semi_invariance_residual(double m, int samples, std::uint64_t seed, double off_shell) {
    if (samples < 1) throw ArgumentError("samples must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::array<double, 4> k{}, x{}, dphi{};
        for (int i = 1; i < 4; ++i) k[i] = u(rng);
        k[0] = std::sqrt(m * m + k[1] * k[1] + k[2] * k[2] + k[3] * k[3]) + off_shell;
        for (double& xi : x) xi = u(rng);
        const double phi = u(rng);
        for (double& d : dphi) d = u(rng);
        worst = std::max(worst, std::abs(kg_semi_invariance_at(m, k, x, phi, dphi)));
    }
    return worst;
}

}  // namespace gaq
