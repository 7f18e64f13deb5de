#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "dipair/couplings.hpp"

namespace dipair {

// Hilbert space of the atom pair: each atom has excited Zeeman levels 1,2,3
// and ground level 4; the product space is 16-dimensional with
// |i,j> = |i>_1 (x) |j>_2 at index 4*(i-1) + (j-1).
inline constexpr int n_levels = 4;
inline constexpr int dim = 16;
inline constexpr int sdim = dim * dim;  // superoperator dimension

using OperatorMatrix = Eigen::MatrixXcd;  // dim x dim
using Superoperator = Eigen::MatrixXcd;   // sdim x sdim
using StateVector = Eigen::VectorXcd;     // dim

int product_index(int i, int j);
StateVector product_state(int i, int j);

// Lowering operator S_i^-(atom) = |4><i| acting on the given atom (1 or 2).
OperatorMatrix lowering_operator(int level, int atom);
OperatorMatrix raising_operator(int level, int atom);

// Magnetic (Zeeman) part of the atomic Hamiltonian with the common optical
// frequency removed: levels 1/2/3 sit at -delta / 0 / +delta per atom.
OperatorMatrix build_h_a(double delta);

// Coherent dipole-dipole exchange -sum_{mu != nu} Omega_ij S_i^+(mu) S_j^-(nu);
// acts only inside the single-excitation manifold.
OperatorMatrix build_h_omega(const CouplingSet& cs);

// Transverse laser drive in the frame rotating at the laser frequency.  The
// field couples the sigma transitions only; per-atom complex Rabi amplitudes
// allow arbitrary propagation phases.
struct DriveConfig {
    std::array<std::complex<double>, 2> omega_x{0.0, 0.0};
    std::array<std::complex<double>, 2> omega_y{0.0, 0.0};
    double delta2 = 0.0;  // laser detuning from the pi transition
    double zeeman = 0.0;  // magnetic splitting delta
};

// Detuning part plus drive coupling: H_A~ + H_L~.
OperatorMatrix build_h_laser(const DriveConfig& drive);

// Radio-frequency modulation of the magnetic splitting at time t:
// V_rf(t) = 2 delta0 cos(omega_rf t + phi_rf) * G.
OperatorMatrix build_h_rf(double delta0, double omega_rf, double phi_rf, double t);

// The static generator G = sum_mu (S_3^+ S_3^- - S_1^+ S_1^-)(mu) the rf
// field couples to.
OperatorMatrix rf_generator();

// Column-major vectorization and superoperator embeddings.
Eigen::VectorXcd vectorize(const OperatorMatrix& rho);
OperatorMatrix unvectorize(const Eigen::VectorXcd& v);

// -i [H, .] as a superoperator.
Superoperator commutator_superoperator(const OperatorMatrix& h);

// Collective damping in Lindblad form, sum over transitions and atoms of
//   c * (2 J rho K - K J rho - rho K J)
// with same-atom rate gamma = 1 and cross-atom rates Gamma_ij.
Superoperator build_dissipator(const CouplingSet& cs);

// Dissipator for the eta -> 0 limit rates Gamma_ij = gamma delta_ij.
Superoperator build_limit_dissipator();

// Full generator L = -i[H, .] + dissipator.
Superoperator build_liouvillian(const OperatorMatrix& h, const Superoperator& dissipator);

// 6x6 coefficient matrix over the (transition, atom) jump-operator index;
// positive semidefinite for physical couplings.
Eigen::MatrixXcd kossakowski_matrix(const CouplingSet& cs);

}  // namespace dipair
