#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaq/jet.hpp"
#include "gaq/poly.hpp"

namespace gaq {

using cplx = std::complex<double>;

// ---------------------------------------------------------------- Galilei grid

// Complex section phi(t, v) sampled on t_k = t0 + k dt, v_j = v0 + j dv; the
// U(1) factor zeta is kept analytic (X_phi acts as multiplication by i).
struct GridSection {
    std::size_t nt = 0, nv = 0;
    double t0 = 0.0, dt = 1.0, v0 = 0.0, dv = 1.0;
    std::vector<cplx> values;  // row-major in t

    cplx& at(std::size_t k, std::size_t j) { return values[k * nv + j]; }
    cplx at(std::size_t k, std::size_t j) const { return values[k * nv + j]; }
    double t(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double v(std::size_t j) const { return v0 + static_cast<double>(j) * dv; }

    static GridSection sample(std::size_t nt, std::size_t nv, double t0, double dt, double v0, double dv,
                              const std::function<cplx(double, double)>& f);
};

struct PolarizationResidual {
    double x_annihilation = 0.0;  // identically zero: sections carry no x dependence
    double schrodinger = 0.0;     // max interior |i d_t phi - (m v^2 / 2) phi|
};

// Fourth-order central differences in t; interior means two points from each edge.
PolarizationResidual galilei_polarization_residual(const GridSection& phi, double m);

struct OperatorResidual {
    double commutator = 0.0;  // max interior |[X_x, X_v] phi + i m phi|
    double energy = 0.0;      // max interior |i d_t phi - (p^2 / 2m) phi|, p = m v
};

// X_x phi = i m v phi, X_v phi = d_v phi (fourth order), X_t phi = -i p^2/(2m) phi.
OperatorResidual galilei_operator_suite(const GridSection& phi, double m);

// Gaussian e^{-v^2/2} e^{-i m v^2 t / 2} on t in [0, 0.02], v in [-3, 3].
GridSection galilei_reference_section(double m, bool with_phase = true);

// ---------------------------------------------------------------- SU(2) particle

using Vec3 = std::array<double, 3>;

struct PhasePoint {
    Vec3 eps{};
    Vec3 pi{};
};

Eigen::Matrix3d su2_metric(const Vec3& eps);
Eigen::Matrix3d su2_inverse_metric(const Vec3& eps);
double su2_hamiltonian(const Vec3& eps, const Vec3& pi);

// A phase-space function of the six jet variables (eps1..3, pi1..3).
using PhaseFunction = std::function<Jet2(std::span<const Jet2>)>;

// sum_i df/deps_i dg/dpi_i - df/dpi_i dg/deps_i.
double canonical_poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& p);

// Exact canonical bracket on polynomials in e1 e2 e3 p1 p2 p3.
Polynomial canonical_poisson_bracket(const Polynomial& f, const Polynomial& g);

Jet2 su2_hamiltonian_jet(std::span<const Jet2> z);

struct AdsGenerators {
    double E = 0.0;
    Vec3 p{}, k{}, J{};
};
AdsGenerators ads_generators(const PhasePoint& point);

// Generator functions by name: "E", "p1".."p3", "k1".."k3", "J1".."J3", "H",
// "eps1".."eps3", "pi1".."pi3".
PhaseFunction phase_function(const std::string& name);

struct BracketRelation {
    std::string name;  // e.g. "{k1,k2}"
    PhaseFunction f, g, rhs;
};

// The nine SO(3,2) families. kk_sign = -1 is the anti-de Sitter table;
// +1 flips {k,k} to the de Sitter sign.
std::vector<BracketRelation> so32_bracket_table(double kk_sign = -1.0);

struct BracketCheck {
    double max_residual = 0.0;
    std::string worst;
    int samples = 0;
};

// Samples |eps_i| < 0.6, |pi_i| < 1.5 and keeps points with H > 0.1.
std::vector<PhasePoint> sample_phase_points(int samples, std::uint64_t seed, double min_h = 0.1);
BracketCheck bracket_table_check(const std::vector<BracketRelation>& relations, int samples, std::uint64_t seed);

// ---------------------------------------------------------------- AdS

double hyp2f1_terminating(int n, double b, double c, double z);
Rational hyp2f1_terminating_exact(int n, const Rational& b, const Rational& c, const Rational& z);

struct AdsParams {
    double omega = 1.0, c = 1.0, m = 0.0, hbar = 1.0, xi = 0.0;
    int n = 0, l = 0, mz = 0;
};

// lambda = E / (hbar omega) from the energy formula.
double ads_lambda(const AdsParams& p);

enum class AdsPhase {
    printed,      // exp(-2 i c lambda asin(omega q a0 / sqrt(4c^2 + omega^2 q^2 r^2)))
    global_time,  // exp(-i lambda asin(sqrt(w) q a0 / sqrt(1 + w q^2 r^2))), w = omega^2/c^2
};

enum class AdsReading {
    literal,      // d_r coefficient -(1/r)[32 + w(40 + 7w(r^2 - a0^2))], as typeset
    dimensional,  // -(1/r)[32 + r^2 w(40 + 7w(r^2 - a0^2))]
};

cplx spherical_harmonic(int l, int m, double theta, double phi);

// Wavefunction at (a0, a).
cplx ads_wavefunction(const AdsParams& p, double a0, const Vec3& a, AdsPhase phase = AdsPhase::printed);

// The second-order operator applied to the wavefunction of p at (a0, a), with
// the unsigned mixed-derivative term weighted by cross_sign and L^2 replaced
// by l(l+1). Derivatives come from jets in (a0, r).
cplx ads_box_apply(const AdsParams& p, double a0, const Vec3& a, int cross_sign,
                   AdsPhase phase = AdsPhase::printed, AdsReading reading = AdsReading::literal);

struct AdsStateReport {
    int n = 0, l = 0, mz = 0;
    double lambda = 0.0;
    cplx mean{};
    double variance = 0.0;     // mean |box psi / psi - mean|^2
    double ratio = 0.0;        // variance / |mean|
};

struct AdsSignReport {
    int cross_sign = 0;
    std::vector<AdsStateReport> states;
    double worst_ratio() const;
};

struct AdsConsistencyReport {
    AdsPhase phase = AdsPhase::printed;
    AdsReading reading = AdsReading::literal;
    std::array<AdsSignReport, 2> signs;  // cross_sign +1, -1
    int passing_sign = 0;                // 0 when neither or both pass
    bool passed = false;                 // exactly one sign with every ratio < tol
};

// Interior points: |a0| < 0.5, 0.2 < r < 1 (scaled by c/omega), seeded.
AdsConsistencyReport ads_eigen_consistency(const AdsParams& base, const std::vector<std::array<int, 3>>& states,
                                           int samples, std::uint64_t seed, double tol = 1e-6,
                                           AdsPhase phase = AdsPhase::printed,
                                           AdsReading reading = AdsReading::literal);

std::vector<std::array<int, 3>> parse_state_list(const std::string& text);

}  // namespace gaq
