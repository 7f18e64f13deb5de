#include "dipair/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "dipair/couplings.hpp"
#include "dipair/states.hpp"

namespace dipair {

NullSpaceResult dissipator_null_space(const Superoperator& d, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("null-space tolerance must be positive");
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(d, Eigen::ComputeThinV);
    NullSpaceResult result;
    result.singular_values = svd.singularValues();

    const auto n = result.singular_values.size();
    result.threshold = tol * result.singular_values(0);
    // Singular values come out in descending order; the kernel candidates
    // sit at the tail.
    int kept = 0;
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        if (result.singular_values(k) < result.threshold) {
            ++kept;
        } else {
            break;
        }
    }
    result.dimension = kept;
    if (kept > 0) {
        result.basis = svd.matrixV().rightCols(kept);
        result.largest_kept = result.singular_values(n - kept);
    }
    if (kept < n) {
        result.smallest_discarded = result.singular_values(n - kept - 1);
        result.tolerance_warning =
            result.smallest_discarded < 10.0 * result.threshold;
    }
    return result;
}

OperatorMatrix dfs_projector() {
    const Eigen::MatrixXcd basis = dfs_state_basis();
    return basis * basis.adjoint();
}

Eigen::MatrixXcd dfs_state_basis() {
    Eigen::MatrixXcd basis(dim, 4);
    basis.col(0) = ground_state();
    for (int i = 1; i <= 3; ++i) {
        basis.col(i) = antisymmetric_state(i);
    }
    return basis;
}

Eigen::MatrixXcd dfs_operator_basis() {
    const Eigen::MatrixXcd span = dfs_state_basis();
    Eigen::MatrixXcd basis(sdim, 16);
    int col = 0;
    for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) {
            basis.col(col++) = vectorize(span.col(u) * span.col(v).adjoint());
        }
    }
    return basis;
}

double invariance_defect(const OperatorMatrix& h, const Eigen::MatrixXcd& basis) {
    if (basis.rows() != dim) {
        throw std::invalid_argument("subspace basis must have 16-component columns");
    }
    const OperatorMatrix p = basis * basis.adjoint();
    const OperatorMatrix q = OperatorMatrix::Identity(dim, dim) - p;
    const OperatorMatrix coupling = q * h * p;
    return coupling.jacobiSvd().singularValues()(0);
}

double invariance_defect(const OperatorMatrix& h) {
    return invariance_defect(h, dfs_state_basis());
}

double largest_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.cols() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument("principal angles need equal-shaped subspace bases");
    }
    // Pair the cosine from the overlap with the sine from the projection
    // residual; acos of the cosine alone flattens to sqrt(eps) near zero,
    // while atan2 stays accurate at both ends of [0, pi/2].
    const Eigen::MatrixXcd overlap = a.adjoint() * b;
    const double cosine =
        std::clamp(overlap.jacobiSvd().singularValues().minCoeff(), 0.0, 1.0);
    const Eigen::MatrixXcd residual = a - b * overlap.adjoint();
    const double sine =
        std::clamp(residual.jacobiSvd().singularValues().maxCoeff(), 0.0, 1.0);
    return std::atan2(sine, cosine);
}

double projected_decay_rate(const Superoperator& dissipator, const StateVector& psi) {
    const OperatorMatrix rho = psi * psi.adjoint();
    const OperatorMatrix drho = unvectorize(dissipator * vectorize(rho));
    // d/dt <psi|rho|psi> = <psi| D[rho] |psi> = -2 Gamma at t = 0.
    const double rate = -0.5 * (psi.adjoint() * drho * psi).value().real();
    return rate;
}

std::array<double, 3> projected_decay_rates(const CouplingSet& cs, bool symmetric) {
    const Superoperator d = build_dissipator(cs);
    const Geometry& g = cs.geometry;
    std::array<double, 3> rates{};
    for (int i = 1; i <= 3; ++i) {
        const StateVector psi = symmetric ? psi_s(i, g.theta, g.phi)
                                          : psi_a(i, g.theta, g.phi);
        rates[static_cast<std::size_t>(i - 1)] = 2.0 * projected_decay_rate(d, psi);
    }
    return rates;
}

std::array<double, 3> dfs_leakage_rate(const CouplingSet& cs) {
    return projected_decay_rates(cs, false);
}

}  // namespace dipair
