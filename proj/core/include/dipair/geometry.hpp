#pragma once

#include <array>

#include <Eigen/Dense>

namespace dipair {

inline constexpr double pi = 3.14159265358979323846;

// Relative geometry of the two atoms.  The separation vector R = r1 - r2 is
// given in spherical coordinates with respect to the quantization (z) axis:
//
//   eta   = k0 * R = 2*pi * R / lambda0   (dimensionless separation)
//   theta = polar angle between R and the z axis
//   phi   = azimuth of R in the x-y plane
//
// All couplings depend on the geometry only through these three numbers.
struct Geometry {
    double eta = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    static Geometry from_separation(double r_over_lambda0, double theta = 0.0,
                                    double phi = 0.0);

    // Unit vector along the interatomic axis.
    Eigen::Vector3d unit_separation() const;

    // Throws std::invalid_argument for eta <= 0 or non-finite angles.
    void validate() const;
};

// Normalized transition dipole moments d_1, d_2, d_3 of the J=0 -> J=1
// Zeeman triplet: sigma^- , pi and sigma^+ transitions expressed in the
// spherical basis (d_1 = eps^+, d_2 = e_z, d_3 = -eps^-).
std::array<Eigen::Vector3cd, 3> transition_dipoles();

}  // namespace dipair
