#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dipair/operators.hpp"

namespace dipair {

// One line of the single-excitation spectrum: a collective eigenstate with
// its energy shift (units of gamma, relative to the bare transition) and
// the decay rate Gamma of its population (decays as exp(-2 Gamma t)).
struct SpectralLine {
    std::string label;
    StateVector state;
    double shift = 0.0;
    double decay_rate = 0.0;
};

struct Spectrum {
    std::vector<SpectralLine> lines;  // three antisymmetric, three symmetric
};

// Eigenstates and eigenvalues of the dipole-dipole Hamiltonian within the
// single-excitation manifold for degenerate upper levels (no magnetic
// field).  The antisymmetric triple holds (psi_a^1, psi_a^2, psi_a^3) with
// shifts (Omega_F, Omega_F, Omega_N); symmetric mirrors it.
Spectrum degenerate_eigensystem(const Geometry& g);

// Same with a magnetic level splitting delta (units of gamma) between
// adjacent upper levels.  The 3x3 antisymmetric and symmetric blocks are
// diagonalized numerically for any geometry.
Spectrum nondegenerate_eigensystem(const Geometry& g, double delta);

// 3x3 block of H_A + H_Omega on the antisymmetric (or, with
// symmetric = true, the symmetric) single-excitation triple, in the basis
// (x_1, x_2, x_3).
Eigen::Matrix3cd single_excitation_block(const Geometry& g, double delta, bool symmetric);

// Closed-form eigenvalues for separation perpendicular to the quantization
// axis (theta = pi/2), where transition 2 decouples from 1 and 3:
//   lambda^1 = Omega_F,   lambda^{2,3} = mid -/+ omega_b / 2
// with mid = (Omega_F + Omega_N) / 2 and omega_b the qubit level splitting.
struct PerpendicularSpectrum {
    std::array<double, 3> lambda_a;
    std::array<double, 3> lambda_s;
    double omega_b = 0.0;      // splitting between lambda^2 and lambda^3
    double mixing_angle = 0.0; // antisymmetric-block mixing angle
};

PerpendicularSpectrum perpendicular_spectrum(double eta, double delta);

// Qubit level splitting omega_b = sqrt(4 delta^2 + (Omega_N - Omega_F)^2)
// of the theta = pi/2 antisymmetric block.
double bohr_frequency(double eta, double delta);

// Antisymmetric-block energies on a grid of separations expressed in
// wavelengths: component l perpendicular to the quantization axis and
// component z along it, so r/lambda0 = sqrt(l^2 + z^2) and
// cos(theta) = z / (r/lambda0).  Energies are sorted ascending.
struct SurfacePoint {
    double l = 0.0;
    double z = 0.0;
    std::array<double, 3> lambda_a{};
};

std::vector<SurfacePoint> energy_surface(const std::vector<double>& l_values,
                                         const std::vector<double>& z_values,
                                         double delta);

}  // namespace dipair
