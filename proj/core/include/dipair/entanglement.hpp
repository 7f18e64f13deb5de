#pragma once

#include <Eigen/Dense>

#include "dipair/operators.hpp"

namespace dipair {

// Reduced density matrix of one atom (1 or 2) of a pair state.
Eigen::Matrix4cd partial_trace(const OperatorMatrix& rho, int atom);

// I-concurrence of a pure two-atom state: C = sqrt(2 (1 - Tr rho_1^2)).
// Zero for product states, 1 for the (anti)symmetric single-excitation
// states, bounded by sqrt(3/2) on this pair of four-level atoms.
double concurrence(const StateVector& psi);

// The bound sqrt(2 (d-1)/d) for single-atom dimension d = 4.
double concurrence_bound();

}  // namespace dipair
