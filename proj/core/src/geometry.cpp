#include "dipair/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dipair {

Geometry Geometry::from_separation(double r_over_lambda0, double theta, double phi) {
    Geometry g{2.0 * pi * r_over_lambda0, theta, phi};
    g.validate();
    return g;
}

Eigen::Vector3d Geometry::unit_separation() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

void Geometry::validate() const {
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw std::invalid_argument("Geometry: eta must be positive and finite");
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("Geometry: angles must be finite");
}

std::array<Eigen::Vector3cd, 3> transition_dipoles() {
    using C = std::complex<double>;
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector3cd d1{C(s, 0.0), C(0.0, s), C(0.0, 0.0)};    // eps^(+)
    Eigen::Vector3cd d2{C(0.0, 0.0), C(0.0, 0.0), C(1.0, 0.0)};  // e_z
    Eigen::Vector3cd d3{C(-s, 0.0), C(0.0, s), C(0.0, 0.0)};   // -eps^(-)
    return {d1, d2, d3};
}

}  // namespace dipair
