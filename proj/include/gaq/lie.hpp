#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaq/group.hpp"
#include "gaq/linalg.hpp"
#include "gaq/poly.hpp"

namespace gaq {

enum class FieldKind { left, right };

// All invariant fields of one kind at a point: column b of `X` is X_b(g), and
// dX[b](i, j) = d X_b(g)_i / d g_j.
struct FieldJet {
    Eigen::MatrixXd X;
    std::vector<Eigen::MatrixXd> dX;
};

// X^L_b(g)_i = d[g * h]_i/dh_b and X^R_b(g)_i = d[h * g]_i/dh_b at h = e, from one
// jet evaluation in 2n variables.
FieldJet invariant_fields(const LieGroup& G, FieldKind kind, std::span<const double> g);

struct VectorField {
    FieldKind kind = FieldKind::right;
    std::string label;
    std::function<Eigen::VectorXd(std::span<const double>)> value;
    // Value and Jacobian; empty for fields built by commutators.
    std::function<std::pair<Eigen::VectorXd, Eigen::MatrixXd>(std::span<const double>)> jet;
};

VectorField left_field(const LieGroup& G, std::size_t b);
VectorField right_field(const LieGroup& G, std::size_t b);
VectorField commutator_field(const VectorField& X, const VectorField& Y);

// [X, Y]_i = sum_j X_j d_j Y_i - Y_j d_j X_i.
Eigen::VectorXd bracket(const Eigen::VectorXd& X, const Eigen::MatrixXd& dX, const Eigen::VectorXd& Y,
                        const Eigen::MatrixXd& dY);

class StructureTable {
public:
    StructureTable() = default;
    explicit StructureTable(std::vector<std::string> labels);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;

    // C^c_{ab}; setting (a, b) also sets (b, a) to the negative.
    double operator()(std::size_t c, std::size_t a, std::size_t b) const { return C_[(c * dim() + a) * dim() + b]; }
    double at(const std::string& c, const std::string& a, const std::string& b) const;
    void set(std::size_t c, std::size_t a, std::size_t b, double v);

    double closure_residual = 0.0;     // [X^R_a, X^R_b] - C X^R at sampled points
    double left_right_residual = 0.0;  // right constants + left constants

private:
    std::vector<std::string> labels_;
    std::vector<double> C_;
};

// Structure constants from right fields at the identity, cross-checked against
// left fields and against closure at `closure_samples` seeded points. Throws
// ValidationError "not closed at identity" when closure fails at 1e-8.
StructureTable structure_constants(const LieGroup& G, int closure_samples = 4, std::uint64_t seed = 5,
                                   double closure_tol = 1e-8);

struct JacobiEntry {
    std::size_t a, b, c, d;
    double value;
};
struct JacobiReport {
    double max_residual = 0.0;
    std::vector<JacobiEntry> nonzero;  // entries above 1e-12, a < b < c
};
JacobiReport jacobi_residuals(const StructureTable& T);

class ParamStructureTable {
public:
    ParamStructureTable(std::vector<std::string> labels, std::vector<std::string> params);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& params() const { return params_; }
    std::size_t index_of(const std::string& label) const;

    const Polynomial& operator()(std::size_t c, std::size_t a, std::size_t b) const {
        return C_[(c * dim() + a) * dim() + b];
    }
    void set(std::size_t c, std::size_t a, std::size_t b, const Polynomial& v);

    ParamStructureTable substitute(const std::string& param, const Polynomial& value) const;
    StructureTable evaluate(const std::map<std::string, double>& values) const;

    std::string name;
    std::string central;  // may be empty

private:
    std::vector<std::string> labels_;
    std::vector<std::string> params_;
    std::vector<Polynomial> C_;
};

struct ParamJacobiEntry {
    std::size_t a, b, c, d;
    Polynomial value;
};
std::vector<ParamJacobiEntry> jacobi_residuals(const ParamStructureTable& T);

// Text format:
//   algebra NAME
//   params p q ...
//   basis a b c ...
//   central NAME        (optional)
//   C[a,b,c] = POLY     meaning [X_a, X_b] = ... + POLY X_c
ParamStructureTable parse_algebra_file(const std::string& text);

// Theta_j(g) = d phi''/d g_j at (g' = g^-1, g).
Eigen::VectorXd theta(const LieGroup& G, std::span<const double> g);

struct ThetaJet {
    Eigen::VectorXd theta;
    Eigen::MatrixXd dtheta_partial;  // (i, j) = d_i Theta_j
    Eigen::MatrixXd dtheta;          // d_i Theta_j - d_j Theta_i
};
ThetaJet theta_jet(const LieGroup& G, std::span<const double> g);
Eigen::MatrixXd dtheta(const LieGroup& G, std::span<const double> g);

// Kernel of the (n+1) x n matrix stacking dTheta over the row Theta.
NullspaceResult characteristic_kernel(const LieGroup& G, std::span<const double> g, double tol = 1e-8);

double noether_invariant(const LieGroup& G, std::size_t a, std::span<const double> g);
Eigen::VectorXd noether_invariants(const LieGroup& G, std::span<const double> g);

struct ClassificationReport {
    std::set<std::string> basic;
    std::set<std::string> non_basic;
    std::string central;
    std::vector<std::pair<std::string, std::string>> pairings;  // a < b by index
};
ClassificationReport classify_parameters(const StructureTable& T, const std::string& central);

struct InvarianceReport {
    double lie_derivative_theta = 0.0;  // max |L_{X^R_a} Theta|
    double volume_divergence = 0.0;     // max |div_rho X^R_a|
    double left_right_commutator = 0.0; // max |[X^L_a, X^R_b]|
    int samples = 0;
    int skipped = 0;                    // points where the inverse failed
    double max() const { return std::max({lie_derivative_theta, volume_divergence, left_right_commutator}); }
};
InvarianceReport invariance_suite(const LieGroup& G, int samples, std::uint64_t seed);

}  // namespace gaq
