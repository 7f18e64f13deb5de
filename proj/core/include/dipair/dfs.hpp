#pragma once

#include <array>

#include <Eigen/Dense>

#include "dipair/operators.hpp"

namespace dipair {

// Numerical null space of a superoperator from its SVD.  Right singular
// vectors with singular value below tol * (largest singular value) are kept
// as the (vectorized) operator basis of the decay-free subspace.
struct NullSpaceResult {
    int dimension = 0;
    Eigen::MatrixXcd basis;           // sdim x dimension, orthonormal columns
    Eigen::VectorXd singular_values;  // all sdim values, descending
    double threshold = 0.0;           // absolute cut applied
    double largest_kept = 0.0;        // largest singular value below the cut
    double smallest_discarded = 0.0;  // smallest singular value above the cut
    bool tolerance_warning = false;   // smallest discarded within 10x threshold
};

NullSpaceResult dissipator_null_space(const Superoperator& d, double tol = 1e-10);

// The decoherence-free subspace of the eta -> 0 limit: the ground state and
// the three antisymmetric single-excitation states.
OperatorMatrix dfs_projector();

// 16 x 4 matrix whose orthonormal columns span the decoherence-free
// subspace (ground state first).
Eigen::MatrixXcd dfs_state_basis();

// Vectorized orthonormal operator basis |u><v| over the four DFS states
// (sdim x 16 matrix).
Eigen::MatrixXcd dfs_operator_basis();

// Spectral norm of (1 - P) H P for the subspace spanned by the orthonormal
// columns of `basis`: how strongly a Hamiltonian couples the subspace to
// its complement.
double invariance_defect(const OperatorMatrix& h, const Eigen::MatrixXcd& basis);

// Same against the canonical decoherence-free subspace; exactly zero for
// the magnetic and dipole-dipole Hamiltonians.
double invariance_defect(const OperatorMatrix& h);

// Largest principal angle (radians) between the column spans of two
// matrices with orthonormal columns.
double largest_principal_angle(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Population decay rate Gamma of a pure state under the given dissipator,
// in the convention where the population decays as exp(-2 Gamma t).
double projected_decay_rate(const Superoperator& dissipator, const StateVector& psi);

// Population decay rates (2 Gamma, i.e. the exponential rates themselves)
// of the collective eigenstates psi_a^i (or psi_s^i) obtained by projecting
// the dissipator; 2 Gamma_a^i / 2 Gamma_s^i in closed form.
std::array<double, 3> projected_decay_rates(const CouplingSet& cs, bool symmetric);

// Leakage rates 2 Gamma_a^i out of the antisymmetric states at finite
// separation.
std::array<double, 3> dfs_leakage_rate(const CouplingSet& cs);

}  // namespace dipair
