#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gaq/group.hpp"
#include "gaq/jet.hpp"
#include "gaq/lie.hpp"
#include "gaq/ode.hpp"
#include "gaq/poly.hpp"

namespace gaq {

using Vec3d = std::array<double, 3>;

// su(2) with T_a <-> e_a: [T_a, T_b] = eta_abc T_c is the cross product and
// <T_a, T_b> = delta_ab is the dot product.
struct SigmaLattice {
    std::size_t N = 8;
    double dx = 1.0;
    Vec3d lambda{0.0, 0.0, 1.0};
    void validate() const;
};

struct SigmaState {
    std::vector<Vec3d> S, L;
};

// Flattened coordinates: S_i^a at 3i + a, L_i^a at 3N + 3i + a.
State sigma_flatten(const SigmaState& s);
SigmaState sigma_unflatten(const State& y, std::size_t N);

using SigmaFunctional = std::function<Jet2(std::span<const Jet2>)>;

// {F, G} = sum_i (1/dx) [ -eta_abc L_c dF/dL_a dG/dL_b
//                         - eta_abc (S - lambda)_c (dF/dL_a dG/dS_b - dG/dL_a dF/dS_b) ].
double sigma_bracket(const SigmaFunctional& F, const SigmaFunctional& G, const SigmaState& s, const SigmaLattice& L);

// (dx/2) sum_i [ |L_i|^2 + |(S_{i+1} - S_i)/dx|^2 ], periodic.
double sigma_hamiltonian(const SigmaState& s, const SigmaLattice& L);
Jet2 sigma_hamiltonian_jet(std::span<const Jet2> z, const SigmaLattice& L);

// dL_i = (lap S)_i x (S_i - lambda), dS_i = (S_i - lambda) x L_i.
State sigma_rhs(const State& y, const SigmaLattice& L);

// max_k |rhs_k - {z_k, H}| / (1 + max |rhs|) with the bracket evaluated by jets.
double sigma_eom_crosscheck(const SigmaState& s, const SigmaLattice& L);

struct SigmaDrift {
    double hamiltonian = 0.0;
    Vec3d total_L{};                 // dx sum_i L_i, componentwise
    std::vector<double> casimir;     // |S_i - lambda|^2 per site
    double max() const;
};

struct SigmaRun {
    OdeTrajectory trajectory;
    SigmaDrift drift;
    double crosscheck = 0.0;
};

// RK4. Aborts with ValidationError when the start-of-run cross-check exceeds 1e-10.
SigmaRun sigma_evolve(const SigmaState& s0, const SigmaLattice& L, double t_final, double step);

// S_i = lambda + amplitude * u_i, L_i = amplitude * w_i with u, w uniform in [-1, 1]^3.
SigmaState sigma_random_state(const SigmaLattice& L, std::uint64_t seed, double amplitude);

Vec3d total_L(const SigmaState& s, const SigmaLattice& L);
std::vector<double> casimirs(const SigmaState& s, const SigmaLattice& L);

// ---------------------------------------------------------------- local Euclidean group

// Rotation of the chart point eps (quaternion (sqrt(1 - |eps|^2/4), eps/2)) applied to v.
template <class T>
std::array<T, 3> chart_rotate(std::span<const T> eps, std::span<const T> v);

// Per site (eps^1..3, theta^1..3), then the phase:
//   eps''   = sqrt(1 - |eps'|^2/4) eps + sqrt(1 - |eps|^2/4) eps' + (1/2) eps' x eps
//   theta'' = R(eps') theta + theta'
//   phase'' = phase' + phase - dx sum_i <lambda, R(eps'_i) theta_i - theta_i>
LieGroup sigma_group(const SigmaLattice& L);

struct SigmaFieldsReport {
    StructureTable table;
    double phi_phi = 0.0;     // [X_phi_a, X_phi_b] = -eta_abc X_phi_c delta/dx
    double phi_theta = 0.0;   // [X_phi_a, X_theta_b] = -eta_abc (X_theta_c - lambda_c Xi) delta/dx, non-central part
    double central = 0.0;     // the lambda_c Xi part
    double theta_theta = 0.0;
    double stray = 0.0;       // everything else, including cross-site terms
    double max() const;
};

// Functional normalization X_f = X / dx for field generators; the phase generator is global.
SigmaFieldsReport sigma_local_group_fields(const SigmaLattice& L);

struct SigmaNoether {
    Eigen::VectorXd theta;        // quantization form at the point
    Eigen::VectorXd F;            // contractions with the right fields
    std::vector<Vec3d> Lambda;    // R(eps_i) lambda
    std::vector<Vec3d> L_value;   // F_phi / dx
    std::vector<Vec3d> S_value;   // F_theta / dx
    double err_L = 0.0;           // |L_value - Lambda x theta|
    double err_S_printed = 0.0;   // |S_value - (Lambda - lambda)|
    double err_S_opposite = 0.0;  // |S_value - (lambda - Lambda)|
    double orbit_printed = 0.0;   // | |S_value + lambda| - |lambda| |
    double orbit_opposite = 0.0;  // | |S_value - lambda| - |lambda| |
};

SigmaNoether sigma_theta_noether(const SigmaLattice& L, const std::vector<double>& g);

enum class SigmaPhase {
    printed,    // exp(+i dx <lambda, R^T theta - theta>): the display read through <,> = -Tr
    invariant,  // exp(-i dx <lambda, R^T theta - theta>)
    dropped,    // no theta-dependent factor
};

struct PolarizationReport {
    double lambda_phi = 0.0;  // max |lambda^a X^L_phi_a Psi|
    double theta = 0.0;       // max |X^L_theta_a Psi|
    double u1 = 0.0;          // max |X^L_phase Psi - i Psi|
    double max() const { return std::max({lambda_phi, theta, u1}); }
};

// N = 1. Psi = exp(i phase) exp(i kappa dx <lambda, R^T theta - theta>) Phi(Lambda - lambda) with
// Phi(s) = 1 (test 0) or s.s (test 1); left fields by jets at seeded points.
PolarizationReport sigma_polarization_check(const SigmaLattice& L, SigmaPhase phase, int test_function, int samples,
                                            std::uint64_t seed);

struct OperatorSuiteReport {
    double s_coefficient = 0.0;  // alpha in [L_a, S_b] = alpha eta_abc S_c + beta eta_abc lambda_c
    double central = 0.0;        // beta
    double exact_residual = 0.0; // polynomial identity residual on the test functions (exactly 0 when it holds)
    double jet_residual = 0.0;   // same commutator by jets at random points
    double s_s = 0.0;            // [S_a, S_b]
    double l_invariant = 0.0;    // L_a (S.S)
    std::vector<std::pair<unsigned, unsigned>> h_degrees;  // (deg Phi, deg H Phi)
};

// N = 1. S_a Phi = (S_a - lambda_a) Phi, L_a Phi = (1/dx) eta_abc S_b dPhi/dS_c on polynomials in S1 S2 S3.
OperatorSuiteReport sigma_operator_suite(const SigmaLattice& L, std::uint64_t seed);

Polynomial sigma_op_S(std::size_t a, const Polynomial& f, const SigmaLattice& L);
Polynomial sigma_op_L(std::size_t a, const Polynomial& f, const SigmaLattice& L);
Polynomial sigma_op_H(const Polynomial& f, const SigmaLattice& L);

}  // namespace gaq
