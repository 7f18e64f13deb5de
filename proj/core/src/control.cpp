#include "dipair/control.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dipair/couplings.hpp"
#include "dipair/states.hpp"

namespace dipair {

namespace {

using std::complex;

Eigen::Matrix2cd pauli_combination(const Eigen::Vector3d& n, double rate) {
    Eigen::Matrix2cd h;
    const complex<double> im(0.0, 1.0);
    h << n.z(), n.x() - im * n.y(), n.x() + im * n.y(), -n.z();
    return 0.5 * rate * h;
}

struct QubitBasis {
    StateVector up;
    StateVector down;
};

QubitBasis perpendicular_qubit_basis() {
    return {psi_a(2, 0.5 * pi, 0.0), psi_a(3, 0.5 * pi, 0.0)};
}

}  // namespace

QubitHamiltonian static_qubit_hamiltonian(double eta, double delta) {
    const double w = collective_shift_n(eta) - collective_shift_f(eta);
    const double rate = std::sqrt(4.0 * delta * delta + w * w);
    QubitHamiltonian q;
    q.rate = rate;
    q.axis = Eigen::Vector3d(-2.0 * delta, 0.0, -w) / rate;
    q.h = pauli_combination(q.axis, rate);
    return q;
}

QubitHamiltonian rf_qubit_hamiltonian(double delta0, double phi_rf,
                                      double detuning_rf) {
    const double rate =
        std::sqrt(detuning_rf * detuning_rf + 4.0 * delta0 * delta0);
    if (!(rate > 0.0)) {
        throw std::invalid_argument("rf generator needs delta0 or detuning nonzero");
    }
    QubitHamiltonian q;
    q.rate = rate;
    q.axis = Eigen::Vector3d(-2.0 * delta0 * std::cos(phi_rf),
                             2.0 * delta0 * std::sin(phi_rf), detuning_rf) /
             rate;
    q.h = pauli_combination(q.axis, rate);
    return q;
}

double delta_for_target(const Eigen::Vector3d& target, double eta) {
    if (std::abs(target.x()) < 1e-12) {
        throw std::invalid_argument(
            "target must have a nonzero x component to tilt the cone");
    }
    const double w = std::abs(collective_shift_f(eta) - collective_shift_n(eta));
    const double sign = target.x() > 0.0 ? 1.0 : -1.0;
    return (1.0 - target.z()) / (2.0 * std::abs(target.x())) * w * sign;
}

Eigen::Vector3d bloch_vector(const OperatorMatrix& rho, const StateVector& up,
                             const StateVector& down) {
    const complex<double> r_ud = (up.adjoint() * rho * down).value();
    const double pop_up = (up.adjoint() * rho * up).value().real();
    const double pop_down = (down.adjoint() * rho * down).value().real();
    return {2.0 * r_ud.real(), -2.0 * r_ud.imag(), pop_up - pop_down};
}

Eigen::Vector3d bloch_vector(const OperatorMatrix& rho) {
    const QubitBasis basis = perpendicular_qubit_basis();
    return bloch_vector(rho, basis.up, basis.down);
}

Eigen::Vector3d rotate_bloch(const Eigen::Vector3d& axis, double angle,
                             const Eigen::Vector3d& b0) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return b0 * c + axis.cross(b0) * s + axis * axis.dot(b0) * (1.0 - c);
}

std::vector<Eigen::Vector3d> qubit_model_trajectory(const QubitHamiltonian& q,
                                                    const Eigen::VectorXd& times) {
    std::vector<Eigen::Vector3d> bloch;
    bloch.reserve(static_cast<std::size_t>(times.size()));
    const Eigen::Vector3d b0(0.0, 0.0, 1.0);
    for (Eigen::Index k = 0; k < times.size(); ++k) {
        bloch.push_back(rotate_bloch(q.axis, q.rate * times(k), b0));
    }
    return bloch;
}

BlochTrajectory simulate_static_precession(double eta, double delta,
                                           double t_end, double dt_out,
                                           const IntegratorOptions& options) {
    const Geometry g{eta, 0.5 * pi, 0.0};
    const CouplingSet cs = closed_form_couplings(g);
    const OperatorMatrix h = build_h_a(delta) + build_h_omega(cs);
    const Superoperator liouvillian = build_liouvillian(h, build_dissipator(cs));

    const QubitBasis basis = perpendicular_qubit_basis();
    BlochTrajectory result;
    result.full = evolve(liouvillian, basis.up * basis.up.adjoint(), t_end,
                         dt_out, options);
    result.times = result.full.times;
    result.bloch.reserve(result.full.states.size());
    for (const OperatorMatrix& rho : result.full.states) {
        result.bloch.push_back(bloch_vector(rho, basis.up, basis.down));
    }
    return result;
}

namespace {

Eigen::Vector3d unwind_bloch(const Eigen::Vector3d& lab, double omega_rf,
                             double t) {
    const complex<double> transverse(lab.x(), lab.y());
    const complex<double> rotated =
        transverse * std::exp(complex<double>(0.0, omega_rf * t));
    return {rotated.real(), rotated.imag(), lab.z()};
}

}  // namespace

BlochTrajectory simulate_rf_transfer(double eta, double delta0, double phi_rf,
                                     double detuning_rf, double t_end,
                                     double dt_out,
                                     const IntegratorOptions& options) {
    const double w = collective_shift_n(eta) - collective_shift_f(eta);
    const std::vector<RfPulse> single = {{delta0, w + detuning_rf, phi_rf, t_end}};
    return simulate_rf_sequence(eta, single, dt_out, options);
}

BlochTrajectory simulate_rf_sequence(double eta, const std::vector<RfPulse>& pulses,
                                     double dt_out,
                                     const IntegratorOptions& options) {
    if (pulses.empty()) {
        throw std::invalid_argument("rf sequence needs at least one pulse");
    }
    const Geometry g{eta, 0.5 * pi, 0.0};
    const CouplingSet cs = closed_form_couplings(g);
    const Superoperator l0 =
        build_liouvillian(build_h_omega(cs), build_dissipator(cs));
    const Superoperator lg = commutator_superoperator(rf_generator());

    const QubitBasis basis = perpendicular_qubit_basis();
    OperatorMatrix rho = basis.up * basis.up.adjoint();

    BlochTrajectory result;
    std::vector<double> times;
    double t0 = 0.0;
    for (const RfPulse& pulse : pulses) {
        if (!(pulse.duration > 0.0)) {
            throw std::invalid_argument("rf pulse durations must be positive");
        }
        const Trajectory segment =
            evolve_modulated(l0, lg, pulse.delta0, pulse.omega_rf, pulse.phi_rf,
                             rho, t0, t0 + pulse.duration, dt_out, options);
        const std::size_t start = times.empty() ? 0 : 1;  // skip duplicated joint
        for (Eigen::Index k = static_cast<Eigen::Index>(start);
             k < segment.times.size(); ++k) {
            times.push_back(segment.times(k));
            const OperatorMatrix& state = segment.states[static_cast<std::size_t>(k)];
            result.full.states.push_back(state);
            result.bloch.push_back(
                unwind_bloch(bloch_vector(state, basis.up, basis.down),
                             pulse.omega_rf, segment.times(k)));
        }
        rho = segment.states.back();
        t0 += pulse.duration;
    }
    result.times = Eigen::Map<const Eigen::VectorXd>(
        times.data(), static_cast<Eigen::Index>(times.size()));
    result.full.times = result.times;
    return result;
}

}  // namespace dipair
