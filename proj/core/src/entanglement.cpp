#include "dipair/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace dipair {

Eigen::Matrix4cd partial_trace(const OperatorMatrix& rho, int atom) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("partial trace expects a 16 x 16 pair state");
    }
    if (atom != 1 && atom != 2) {
        throw std::invalid_argument("atom index must be 1 or 2");
    }
    Eigen::Matrix4cd reduced = Eigen::Matrix4cd::Zero();
    for (int a = 1; a <= n_levels; ++a) {
        for (int b = 1; b <= n_levels; ++b) {
            std::complex<double> sum = 0.0;
            for (int k = 1; k <= n_levels; ++k) {
                sum += atom == 1 ? rho(product_index(a, k), product_index(b, k))
                                 : rho(product_index(k, a), product_index(k, b));
            }
            reduced(a - 1, b - 1) = sum;
        }
    }
    return reduced;
}

double concurrence(const StateVector& psi) {
    if (psi.size() != dim) {
        throw std::invalid_argument("concurrence expects a 16-component pure state");
    }
    const double norm2 = psi.squaredNorm();
    if (norm2 <= 0.0) {
        throw std::invalid_argument("concurrence of the zero vector is undefined");
    }
    const StateVector normalized = psi / std::sqrt(norm2);
    const Eigen::Matrix4cd rho1 =
        partial_trace(normalized * normalized.adjoint(), 1);
    const double purity = (rho1 * rho1).trace().real();
    const double arg = 2.0 * (1.0 - purity);
    return std::sqrt(std::max(arg, 0.0));
}

double concurrence_bound() {
    return std::sqrt(1.5);
}

}  // namespace dipair
