#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "dipair/integrator.hpp"
#include "dipair/operators.hpp"

namespace dipair {

struct Trajectory {
    Eigen::VectorXd times;
    std::vector<OperatorMatrix> states;  // density matrices at `times`
};

// Sanity measures of a density matrix.
struct StateHealth {
    double hermiticity_defect = 0.0;  // max |rho - rho^dag|
    double trace_defect = 0.0;        // |Tr rho - 1|
    double min_eigenvalue = 0.0;      // smallest eigenvalue of (rho+rho^dag)/2
};

StateHealth density_matrix_health(const OperatorMatrix& rho);

// Uniform output grid 0, dt_out, 2 dt_out, ..., t_end (t_end included;
// the last interval may be shorter).
Eigen::VectorXd output_grid(double t_end, double dt_out);

// Time evolution under a constant Liouvillian with the adaptive integrator.
Trajectory evolve(const Superoperator& liouvillian, const OperatorMatrix& rho0,
                  double t_end, double dt_out,
                  const IntegratorOptions& options = {});

// Same evolution by repeated matrix exponentials, for cross-validation.
Trajectory evolve_expm(const Superoperator& liouvillian,
                       const OperatorMatrix& rho0, double t_end, double dt_out);

// Evolution under L(t) = L0 + delta(t) Lg with the scalar radio-frequency
// modulation delta(t) = 2 delta0 cos(omega_rf t + phi_rf), starting the
// clock at t0 (phase stays continuous across concatenated segments).
Trajectory evolve_modulated(const Superoperator& l0, const Superoperator& lg,
                            double delta0, double omega_rf, double phi_rf,
                            const OperatorMatrix& rho0, double t0, double t_end,
                            double dt_out, const IntegratorOptions& options = {});

// Stationary state(s): the kernel of the Liouvillian, trace-normalized.
struct SteadyStateResult {
    OperatorMatrix rho;              // trace-one Hermitian representative
    int kernel_dimension = 0;
    Eigen::MatrixXcd kernel_basis;   // sdim x kernel_dimension
    bool unique = true;
};

SteadyStateResult steady_state(const Superoperator& liouvillian,
                               double tol = 1e-10);

// Drive the pair from the ground state with a resonant laser linearly
// polarized along x or y at Rabi frequency `rabi` (equal at both atoms),
// recording the populations of the three antisymmetric eigenstates.
// The polarization-selective results hold at theta = pi/2, phi = 0.
enum class Polarization { x, y };

struct DrivenPopulationResult {
    Trajectory trajectory;
    std::array<std::vector<double>, 3> populations;  // psi_a^1..3 over time
    int target = 0;                                  // index fed by this drive
    StateVector target_state;
};

DrivenPopulationResult drive_to_antisymmetric(Polarization polarization,
                                              double rabi, const Geometry& geom,
                                              double t_end, double dt_out,
                                              const IntegratorOptions& options = {});

// Feeding-model rise curve of a weakly decaying collective state:
// p(t) = c_inf / (2 gamma_a) * (1 - exp(-2 gamma_a t)), where c_inf is the
// late-time feeding rate measured from a converged run.
double approx_antisym_population(double t, double gamma_a, double c_inf);

}  // namespace dipair
