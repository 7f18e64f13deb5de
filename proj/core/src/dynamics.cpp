#include "dipair/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "dipair/states.hpp"

namespace dipair {

StateHealth density_matrix_health(const OperatorMatrix& rho) {
    StateHealth health;
    health.hermiticity_defect =
        (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    health.trace_defect = std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
    const OperatorMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(sym);
    health.min_eigenvalue = solver.eigenvalues().minCoeff();
    return health;
}

Eigen::VectorXd output_grid(double t_end, double dt_out) {
    if (!(t_end > 0.0) || !(dt_out > 0.0)) {
        throw std::invalid_argument("output grid needs positive t_end and dt_out");
    }
    const auto interior =
        static_cast<Eigen::Index>(std::ceil(t_end / dt_out - 1e-9));
    Eigen::VectorXd times(interior + 1);
    for (Eigen::Index k = 0; k < interior; ++k) {
        times(k) = static_cast<double>(k) * dt_out;
    }
    times(interior) = t_end;
    return times;
}

Trajectory evolve(const Superoperator& liouvillian, const OperatorMatrix& rho0,
                  double t_end, double dt_out, const IntegratorOptions& options) {
    const RhsFunction rhs = [&liouvillian](double, const Eigen::VectorXcd& v,
                                           Eigen::VectorXcd& dv) {
        dv.noalias() = liouvillian * v;
    };
    Trajectory trajectory;
    trajectory.times = output_grid(t_end, dt_out);
    trajectory.states.reserve(static_cast<std::size_t>(trajectory.times.size()));
    Eigen::VectorXcd v = vectorize(rho0);
    trajectory.states.push_back(rho0);
    for (Eigen::Index k = 1; k < trajectory.times.size(); ++k) {
        integrate_adaptive(rhs, v, trajectory.times(k - 1), trajectory.times(k),
                           options);
        trajectory.states.push_back(unvectorize(v));
    }
    return trajectory;
}

Trajectory evolve_expm(const Superoperator& liouvillian,
                       const OperatorMatrix& rho0, double t_end, double dt_out) {
    Trajectory trajectory;
    trajectory.times = output_grid(t_end, dt_out);
    trajectory.states.reserve(static_cast<std::size_t>(trajectory.times.size()));
    trajectory.states.push_back(rho0);

    const Superoperator step = (liouvillian * dt_out).exp();
    Eigen::VectorXcd v = vectorize(rho0);
    for (Eigen::Index k = 1; k < trajectory.times.size(); ++k) {
        const double dt = trajectory.times(k) - trajectory.times(k - 1);
        if (std::abs(dt - dt_out) < 1e-12 * dt_out) {
            v = step * v;
        } else {
            v = (liouvillian * dt).exp() * v;
        }
        trajectory.states.push_back(unvectorize(v));
    }
    return trajectory;
}

Trajectory evolve_modulated(const Superoperator& l0, const Superoperator& lg,
                            double delta0, double omega_rf, double phi_rf,
                            const OperatorMatrix& rho0, double t0, double t_end,
                            double dt_out, const IntegratorOptions& options) {
    if (!(t_end > t0)) {
        throw std::invalid_argument("modulated evolution needs t_end > t0");
    }
    const RhsFunction rhs = [&](double t, const Eigen::VectorXcd& v,
                                Eigen::VectorXcd& dv) {
        const double modulation =
            2.0 * delta0 * std::cos(omega_rf * t + phi_rf);
        dv.noalias() = l0 * v;
        dv.noalias() += modulation * (lg * v);
    };
    Trajectory trajectory;
    trajectory.times = output_grid(t_end - t0, dt_out);
    trajectory.times.array() += t0;
    trajectory.states.reserve(static_cast<std::size_t>(trajectory.times.size()));
    Eigen::VectorXcd v = vectorize(rho0);
    trajectory.states.push_back(rho0);
    for (Eigen::Index k = 1; k < trajectory.times.size(); ++k) {
        integrate_adaptive(rhs, v, trajectory.times(k - 1), trajectory.times(k),
                           options);
        trajectory.states.push_back(unvectorize(v));
    }
    return trajectory;
}

SteadyStateResult steady_state(const Superoperator& liouvillian, double tol) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(liouvillian, Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const auto n = sv.size();
    int kept = 0;
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        if (sv(k) < tol) {
            ++kept;
        } else {
            break;
        }
    }
    if (kept == 0) {
        throw std::runtime_error(
            "no stationary state below tolerance; generator is not trace-preserving?");
    }
    SteadyStateResult result;
    result.kernel_dimension = kept;
    result.kernel_basis = svd.matrixV().rightCols(kept);
    result.unique = (kept == 1);

    // Pick the kernel vector with the largest trace and normalize it into a
    // Hermitian, trace-one matrix.
    int best = 0;
    double best_trace = -1.0;
    for (int k = 0; k < kept; ++k) {
        const double tr = std::abs(unvectorize(result.kernel_basis.col(k)).trace());
        if (tr > best_trace) {
            best_trace = tr;
            best = k;
        }
    }
    if (best_trace < 1e-12) {
        throw std::runtime_error("stationary kernel contains no trace-class state");
    }
    OperatorMatrix rho = unvectorize(result.kernel_basis.col(best));
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();
    result.rho = rho;
    return result;
}

DrivenPopulationResult drive_to_antisymmetric(Polarization polarization,
                                              double rabi, const Geometry& geom,
                                              double t_end, double dt_out,
                                              const IntegratorOptions& options) {
    geom.validate();
    const CouplingSet cs = closed_form_couplings(geom);

    DriveConfig drive;
    if (polarization == Polarization::x) {
        drive.omega_x = {rabi, rabi};
    } else {
        drive.omega_y = {rabi, rabi};
    }
    const OperatorMatrix h = build_h_omega(cs) + build_h_laser(drive);
    const Superoperator liouvillian =
        build_liouvillian(h, build_dissipator(cs));

    const StateVector g16 = ground_state();
    DrivenPopulationResult result;
    // The y drive pumps psi_a^2 and the x drive psi_a^3.
    result.target = (polarization == Polarization::y) ? 2 : 3;
    result.target_state = psi_a(result.target, geom.theta, geom.phi);
    result.trajectory =
        evolve(liouvillian, g16 * g16.adjoint(), t_end, dt_out, options);

    for (int i = 1; i <= 3; ++i) {
        const StateVector psi = psi_a(i, geom.theta, geom.phi);
        auto& channel = result.populations[static_cast<std::size_t>(i - 1)];
        channel.reserve(result.trajectory.states.size());
        for (const OperatorMatrix& rho : result.trajectory.states) {
            channel.push_back((psi.adjoint() * rho * psi).value().real());
        }
    }
    return result;
}

double approx_antisym_population(double t, double gamma_a, double c_inf) {
    if (!(gamma_a > 0.0)) {
        throw std::invalid_argument("feeding model needs gamma_a > 0");
    }
    return c_inf / (2.0 * gamma_a) * (1.0 - std::exp(-2.0 * gamma_a * t));
}

}  // namespace dipair
