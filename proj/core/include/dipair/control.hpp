#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dipair/dynamics.hpp"
#include "dipair/operators.hpp"

namespace dipair {

// Effective two-level descriptions of the qubit spanned by the weakly
// decaying pair (psi_a^2, psi_a^3) at separation perpendicular to the
// quantization axis.  Conventions: up = psi_a^2, down = psi_a^3,
// B = (2 Re rho_ud, -2 Im rho_ud, rho_uu - rho_dd), and a Hamiltonian
// H = (rate/2) axis.sigma precesses B as dB/dt = rate (axis x B).
struct QubitHamiltonian {
    Eigen::Matrix2cd h;
    Eigen::Vector3d axis;  // unit rotation axis
    double rate = 0.0;     // precession angular frequency
};

// Static magnetic splitting delta couples the qubit states:
// H = [[-W/2, -delta], [-delta, W/2]] with W = Omega_N - Omega_F, giving
// rate omega_b = sqrt(4 delta^2 + W^2) about axis -(2 delta, 0, W)/omega_b.
QubitHamiltonian static_qubit_hamiltonian(double eta, double delta);

// Radio-frequency splitting modulation 2 delta0 cos(omega_rf t + phi_rf)
// in the rotating-wave approximation, in the frame co-rotating at omega_rf
// (detuning_rf = omega_rf - W): rate Omega_rf = sqrt(detuning_rf^2 +
// 4 delta0^2) about (-2 delta0 cos phi_rf, 2 delta0 sin phi_rf,
// detuning_rf)/Omega_rf.  The axis signs are fixed by matching the full
// lab-frame master equation in the frame convention of
// simulate_rf_transfer.
QubitHamiltonian rf_qubit_hamiltonian(double delta0, double phi_rf,
                                      double detuning_rf);

// Static splitting that makes the precession cone from +z reach the Bloch
// target S (with S_y = 0): delta = (1 - S_z)/(2 |S_x|) |W| sign(S_x).
double delta_for_target(const Eigen::Vector3d& target, double eta);

// Bloch vector of rho in the (up, down) basis.
Eigen::Vector3d bloch_vector(const OperatorMatrix& rho, const StateVector& up,
                             const StateVector& down);

// Same in the default qubit basis psi_a^2 / psi_a^3 at theta = pi/2, phi = 0.
Eigen::Vector3d bloch_vector(const OperatorMatrix& rho);

// Rodrigues rotation of b0 about the unit axis by the given angle.
Eigen::Vector3d rotate_bloch(const Eigen::Vector3d& axis, double angle,
                             const Eigen::Vector3d& b0);

// Unitary-model Bloch trajectory from +z under a fixed effective
// Hamiltonian.
std::vector<Eigen::Vector3d> qubit_model_trajectory(const QubitHamiltonian& q,
                                                    const Eigen::VectorXd& times);

struct BlochTrajectory {
    Eigen::VectorXd times;
    std::vector<Eigen::Vector3d> bloch;  // lab frame, or co-rotating for rf runs
    Trajectory full;                     // underlying 16-level trajectory
};

// Full-master-equation precession of the qubit initialized in psi_a^2 under
// a static splitting delta.
BlochTrajectory simulate_static_precession(double eta, double delta,
                                           double t_end, double dt_out,
                                           const IntegratorOptions& options = {});

// One rf pulse at omega_rf = W + detuning_rf applied to the qubit
// initialized in psi_a^2, integrated in the lab frame with the
// counter-rotating terms kept; the reported Bloch vector is expressed in
// the frame rotating at omega_rf via
// (Bx + i By)_rot = e^{+i omega_rf t} (Bx + i By)_lab.
BlochTrajectory simulate_rf_transfer(double eta, double delta0, double phi_rf,
                                     double detuning_rf, double t_end,
                                     double dt_out,
                                     const IntegratorOptions& options = {});

// Piecewise-constant rf pulse program.  The lab-frame clock runs
// continuously across segments, so each pulse's phase is phi_rf at t = 0,
// not at the segment start.
struct RfPulse {
    double delta0 = 0.0;
    double omega_rf = 0.0;
    double phi_rf = 0.0;
    double duration = 0.0;
};

BlochTrajectory simulate_rf_sequence(double eta, const std::vector<RfPulse>& pulses,
                                     double dt_out,
                                     const IntegratorOptions& options = {});

}  // namespace dipair
