#pragma once

#include <vector>

#include <Eigen/Dense>

namespace gaq {

struct NullspaceResult {
    std::vector<Eigen::VectorXd> basis;  // orthonormal
    int rank = 0;
    Eigen::VectorXd singular_values;     // descending, length min(m, n)
};

// Right-singular directions whose singular value is below tol times the largest.
NullspaceResult nullspace(const Eigen::MatrixXd& a, double tol = 1e-8);

}  // namespace gaq
