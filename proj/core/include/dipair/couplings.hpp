#pragma once

#include <array>

#include <Eigen/Dense>

#include "dipair/geometry.hpp"

namespace dipair {

// All couplings and rates are expressed in units of the single-transition
// spontaneous rate gamma (populations decay as exp(-2*gamma*t) in these
// conventions), with hbar = 1.

// Dimensionless dipole-dipole interaction tensor, scaled such that the
// coherent and dissipative couplings between transitions i and j are
//   Omega_ij = 1.5 * d_i^T Re(chi) conj(d_j)
//   Gamma_ij = 1.5 * d_i^T Im(chi) conj(d_j)
// where Re/Im act elementwise on the tensor.
Eigen::Matrix3cd chi_tensor(const Geometry& g);

// Hermitian 3x3 coupling matrices between the Zeeman transitions of the two
// atoms, plus the two independent pair shifts they are built from.
struct CouplingSet {
    Geometry geometry;
    Eigen::Matrix3cd omega;        // coherent dipole-dipole shifts Omega_ij
    Eigen::Matrix3cd gamma_cross;  // cross-damping rates Gamma_ij
    double omega_f = 0.0;          // transverse pair shift Omega_F
    double omega_n = 0.0;          // longitudinal pair shift Omega_N
};

// Couplings via numerical contraction of the chi tensor with the dipoles.
CouplingSet couplings_from_tensor(const Geometry& g);

// Couplings via the explicit trigonometric expressions; mutually validates
// couplings_from_tensor.  Cross elements are evaluated in a form regular at
// theta = 0 and pi, and the damping brackets switch to series expansions at
// small eta where direct evaluation cancels catastrophically.
CouplingSet closed_form_couplings(const Geometry& g);

// Pair energy shifts of the antisymmetric states: transverse (sigma^-/+
// transitions) and longitudinal (pi transition) combinations.
double collective_shift_f(double eta);
double collective_shift_n(double eta);

// Decay rates Gamma_a^i / Gamma_s^i of the antisymmetric and symmetric
// single-excitation states; independent of theta and phi.
struct CollectiveRates {
    std::array<double, 3> antisymmetric;
    std::array<double, 3> symmetric;
};
CollectiveRates collective_decay_rates(double eta);

}  // namespace dipair
