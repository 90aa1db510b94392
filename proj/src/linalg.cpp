#include "gaq/linalg.hpp"

#include "gaq/errors.hpp"

namespace gaq {

NullspaceResult nullspace(const Eigen::MatrixXd& a, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("nullspace: tol must be positive");
    NullspaceResult out;
    const Eigen::Index n = a.cols();
    if (n == 0) return out;
    if (a.rows() == 0) {
        for (Eigen::Index j = 0; j < n; ++j) out.basis.push_back(Eigen::VectorXd::Unit(n, j));
        return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    out.singular_values = svd.singularValues();
    const double smax = out.singular_values.size() ? out.singular_values[0] : 0.0;
    const double cut = tol * smax;
    int rank = 0;
    for (Eigen::Index k = 0; k < out.singular_values.size(); ++k)
        if (smax > 0.0 && out.singular_values[k] >= cut) ++rank;
    const Eigen::MatrixXd& v = svd.matrixV();
    for (Eigen::Index j = rank; j < n; ++j) out.basis.push_back(v.col(j));
    out.rank = rank;
    return out;
}

}  // namespace gaq
