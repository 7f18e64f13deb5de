#include "dipair/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dipair/couplings.hpp"
#include "dipair/dfs.hpp"
#include "dipair/states.hpp"

namespace dipair {

namespace {

StateVector exchange_state(int i, bool symmetric) {
    return symmetric ? symmetric_state(i) : antisymmetric_state(i);
}

}  // namespace

Spectrum degenerate_eigensystem(const Geometry& g) {
    g.validate();
    const CouplingSet cs = closed_form_couplings(g);
    const CollectiveRates rates = collective_decay_rates(g.eta);
    const double omega_f = cs.omega_f;
    const double omega_n = cs.omega_n;

    Spectrum spectrum;
    const std::array<double, 3> shifts_a = {omega_f, omega_f, omega_n};
    for (int i = 1; i <= 3; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        spectrum.lines.push_back({"psi_a" + std::to_string(i),
                                  psi_a(i, g.theta, g.phi), shifts_a[k],
                                  rates.antisymmetric[k]});
    }
    for (int i = 1; i <= 3; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        spectrum.lines.push_back({"psi_s" + std::to_string(i),
                                  psi_s(i, g.theta, g.phi), -shifts_a[k],
                                  rates.symmetric[k]});
    }
    return spectrum;
}

Eigen::Matrix3cd single_excitation_block(const Geometry& g, double delta,
                                         bool symmetric) {
    const CouplingSet cs = closed_form_couplings(g);
    const OperatorMatrix h = build_h_a(delta) + build_h_omega(cs);
    Eigen::Matrix3cd block;
    for (int i = 1; i <= 3; ++i) {
        const StateVector xi = exchange_state(i, symmetric);
        for (int j = 1; j <= 3; ++j) {
            const StateVector xj = exchange_state(j, symmetric);
            block(i - 1, j - 1) = (xi.adjoint() * h * xj).value();
        }
    }
    return block;
}

Spectrum nondegenerate_eigensystem(const Geometry& g, double delta) {
    g.validate();
    const CouplingSet cs = closed_form_couplings(g);
    const Superoperator dissipator = build_dissipator(cs);

    Spectrum spectrum;
    for (const bool symmetric : {false, true}) {
        const Eigen::Matrix3cd block = single_excitation_block(g, delta, symmetric);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(block);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("single-excitation block diagonalization failed");
        }
        // Eigenvalues come back ascending; lines are labeled by that order
        // within each exchange class.
        for (int k = 0; k < 3; ++k) {
            StateVector state = StateVector::Zero(dim);
            for (int j = 1; j <= 3; ++j) {
                state += solver.eigenvectors()(j - 1, k) *
                         exchange_state(j, symmetric);
            }
            state = canonical_phase(state);
            const std::string label =
                (symmetric ? "s" : "a") + std::to_string(k + 1);
            spectrum.lines.push_back({label, state, solver.eigenvalues()(k),
                                      projected_decay_rate(dissipator, state)});
        }
    }
    return spectrum;
}

PerpendicularSpectrum perpendicular_spectrum(double eta, double delta) {
    const double omega_f = collective_shift_f(eta);
    const double omega_n = collective_shift_n(eta);
    const double mid = 0.5 * (omega_f + omega_n);
    const double omega_b = bohr_frequency(eta, delta);

    PerpendicularSpectrum result;
    result.omega_b = omega_b;
    result.mixing_angle = mixing_angle_a(eta, delta);
    result.lambda_a = {omega_f, mid - 0.5 * omega_b, mid + 0.5 * omega_b};
    for (std::size_t k = 0; k < 3; ++k) {
        result.lambda_s[k] = -result.lambda_a[k];
    }
    return result;
}

double bohr_frequency(double eta, double delta) {
    const double w = collective_shift_n(eta) - collective_shift_f(eta);
    return std::sqrt(4.0 * delta * delta + w * w);
}

std::vector<SurfacePoint> energy_surface(const std::vector<double>& l_values,
                                         const std::vector<double>& z_values,
                                         double delta) {
    std::vector<SurfacePoint> points;
    points.reserve(l_values.size() * z_values.size());
    for (const double z : z_values) {
        for (const double l : l_values) {
            const double r = std::hypot(l, z);
            if (r <= 0.0) {
                throw std::invalid_argument(
                    "energy surface grid contains a zero-separation point");
            }
            const Geometry g =
                Geometry::from_separation(r, std::acos(z / r), 0.0);
            const Eigen::Matrix3cd block =
                single_excitation_block(g, delta, false);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(block);
            SurfacePoint p;
            p.l = l;
            p.z = z;
            for (int k = 0; k < 3; ++k) {
                p.lambda_a[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
            }
            points.push_back(p);
        }
    }
    return points;
}

}  // namespace dipair
