#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaq/group.hpp"
#include "gaq/jet.hpp"
#include "gaq/lie.hpp"

namespace gaq {

// Periodic 1-D lattice x_i = i dx, i = 0..N-1.
struct KGLattice {
    std::size_t N = 8;
    double dx = 1.0;
    double m = 1.0;
    double c = 1.0;

    double k(std::size_t j) const;      // 2 pi j / (N dx)
    double omega(std::size_t j) const;  // sqrt(m^2 + (2 - 2 cos(2 pi j / N)) / dx^2)
    void validate() const;
};

template <class T>
struct KGFields {
    std::vector<T> phi, phidot;
};

using KGState = KGFields<double>;

// Mode-wise (phi, phidot) -> (cos(b c W) phi + sin(b c W)/W phidot, -W sin(b c W) phi + cos(b c W) phidot)
// through the direct real DFT.
template <class T>
KGFields<T> kg_time_translate(const KGLattice& L, const KGFields<T>& s, const T& b);

// The 2x2 map of mode j.
Eigen::Matrix2d kg_mode_map(const KGLattice& L, std::size_t j, double b);

// a_j = i dx sum_x e^{i k_j x} (phidot(x) - i W_j phi(x)).
std::complex<double> kg_noether_charge(const KGLattice& L, const KGState& s, std::size_t j);

// Group on (b, phi_0..phi_{N-1}, phidot_0..phidot_{N-1}, phase):
//   b'' = b' + b,  F'' = T_b F' + F,
//   phase'' = phase' + phase + (dx/2) sum [(T_b phi') phidot - (T_b phidot') phi].
LieGroup kg_group(const KGLattice& L);

struct KGFieldsReport {
    StructureTable table;
    double b_phi = 0.0;       // max |C - (-c K)| over [X_b, X_phi_i] against X_phidot_j
    double b_phidot = 0.0;    // max |C - c delta| over [X_b, X_phidot_i] against X_phi_j
    double central = 0.0;     // max |C_func - sign delta_ij / dx|, functional normalization
    int central_sign = 0;     // measured orientation of the central term (+1 or -1)
    double nested = 0.0;      // [X_b, [X_b, X_phidot_i]] = -c^2 K X_phidot from the table
    double stray = 0.0;       // largest constant outside the three families
    double max() const;
};

// Structure constants of kg_group by jets, compared with the three lattice
// commutator families. K = m^2 + Lap, Lap the positive lattice Laplacian.
KGFieldsReport kg_group_fields(const KGLattice& L);

// Continuum check of L_X L - d_mu beta^mu for X = i e^{ikx} d_phi - k_nu e^{ikx} d_{phi_nu},
// beta^mu = -k^mu e^{ikx} phi, L = (phi_mu phi^mu - m^2 phi^2)/2, metric (+,-,-,-).
// k0 = sqrt(m^2 + |k|^2) + off_shell.
double kg_semi_invariance_residual(double m, int samples, std::uint64_t seed, double off_shell = 0.0);

// Single point with an explicit wave vector (k0 taken as given).
std::complex<double> kg_semi_invariance_at(double m, const std::array<double, 4>& k, const std::array<double, 4>& x,
                                           double phi, const std::array<double, 4>& dphi);

}  // namespace gaq
