#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gaq/expr.hpp"
#include "gaq/group.hpp"
#include "gaq/ode.hpp"

namespace gaq {

enum class FieldKind4 { em, gravity };

// Four scalar potentials over (t, x, y, z): A0..A3 or h00, h1, h2, h3.
// Entries not given in the file are zero.
struct FieldConfig {
    FieldKind4 kind = FieldKind4::em;
    std::array<ExprPtr, 4> potential;

    static const std::array<std::string, 4>& names(FieldKind4 kind);
    static Scope scope();  // coordinates t x y z, no parameters
};

// Lines `NAME = EXPR`, '#' comments. All names must belong to one kind.
FieldConfig parse_field_config(const std::string& text);

// Potential values and first derivatives at (t, x, y, z): row k holds
// (value, d/dt, d/dx, d/dy, d/dz) of potential k.
std::array<std::array<double, 5>, 4> potential_jets(const FieldConfig& cfg, double t, const double* x);

// State (x1, x2, x3, v1, v2, v3); the ODE time is t.
// m dv/dt = q [v ^ curl A - grad A0 - dA/dt].
OdeField em_equations_of_motion(const FieldConfig& cfg, double q, double m);

// dv/dt = -[v ^ curl h - grad h00 - dh/dt] + (1/4) grad(h.h). The mass has
// already cancelled; it is only checked to be positive.
OdeField gravity_equations_of_motion(const FieldConfig& cfg, double m);

struct GemConvention {
    double q_sign = -1.0;   // q = q_sign * m
    double a0_sign = 1.0;   // A0 = h00 + a0_sign * h.h / 4
    double residual = 0.0;
    std::string label() const;
};

struct GemReport {
    std::array<GemConvention, 4> conventions;
    std::size_t chosen = 0;        // index of the smallest residual
    std::size_t printed = 0;       // q = -m, A0 = h00 - h.h / 4
    bool passed = false;           // chosen residual < 1e-9 and the only one below it
    const GemConvention& best() const { return conventions[chosen]; }
};

// Samples (t, x, v) uniformly in [-1, 1]^7 and compares the gravity field with
// the Lorentz field of each candidate potential. m = 1.
GemReport gem_equivalence_check(const FieldConfig& gravity, int samples, std::uint64_t seed);

// Integrates the kernel direction of dTheta restricted to ker Theta, scaled so
// the evolution coordinate advances at unit rate. The ODE time equals the
// elapsed evolution coordinate.
OdeTrajectory flow_characteristic(const LieGroup& G, const std::vector<double>& p0, double t_final,
                                  double step);

// Characteristic direction at p with unit evolution component.
std::vector<double> characteristic_direction(const LieGroup& G, const std::vector<double>& p);

struct ConservationReport {
    std::vector<std::string> labels;
    std::vector<double> drift;  // max |F_a(t) - F_a(0)|
    double step = 0.0;
    double t_final = 0.0;
    double max() const;
};

ConservationReport conservation_report(const LieGroup& G, const OdeTrajectory& traj);

}  // namespace gaq
