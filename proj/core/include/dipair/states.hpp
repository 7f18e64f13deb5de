#pragma once

#include <string>

#include <Eigen/Dense>

#include "dipair/operators.hpp"

namespace dipair {

// Single-excitation collective states and the decoupled-basis eigenstates
// built from them.  Indices run over the transitions i = 1, 2, 3.

// (|i,4> -+ |4,i>)/sqrt(2)
StateVector antisymmetric_state(int i);
StateVector symmetric_state(int i);

// (e^{i phi} |x_1> +- e^{-i phi} |x_3>)/sqrt(2) over the (anti)symmetric states.
StateVector superposition_plus(double phi, bool symmetric);
StateVector superposition_minus(double phi, bool symmetric);

// Zero-field eigenstates psi_a^i / psi_s^i of the coupled pair for the
// geometry angles (theta, phi); eigenvalues (Omega_F, Omega_F, Omega_N) and
// their negatives.
StateVector psi_a(int i, double theta, double phi);
StateVector psi_s(int i, double theta, double phi);

// Finite-field eigenstates phi_a^i / phi_s^i for theta = pi/2: the magnetic
// splitting delta mixes the +/- superpositions pairwise.  i = 1 returns the
// unmixed state.
StateVector phi_a(int i, double eta, double delta, double phi);
StateVector phi_s(int i, double eta, double delta, double phi);

// Mixing half-angles of the field-dressed qubit pair at theta = pi/2
// (antisymmetric branch: phi_a^2 = sin(v_a) psi_a^+ + cos(v_a) psi_a^- for
// delta > 0; v_a -> pi/2 as delta -> 0).
double mixing_angle_a(double eta, double delta);
double mixing_angle_s(double eta, double delta);

// Fix the overall phase: largest-magnitude component made real positive.
StateVector canonical_phase(const StateVector& v);

// Ground state |4,4>.
StateVector ground_state();

// Fully entangled two-atom state saturating the concurrence bound.
StateVector max_concurrence_state();

// Named lookup used by the tools: "g", "a1".."a3", "s1".."s3",
// "psi_a1".."psi_a3", "psi_s1".."psi_s3", "product_ij".
StateVector named_state(const std::string& name, double theta, double phi);

}  // namespace dipair
