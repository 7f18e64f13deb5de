#include "dipair/states.hpp"

#include <cmath>
#include <stdexcept>

#include "dipair/couplings.hpp"

namespace dipair {

namespace {

using C = std::complex<double>;

void check_index(int i) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("collective state index must be 1, 2 or 3");
}

StateVector pair_state(int i, double sign) {
    check_index(i);
    return (product_state(i, 4) + sign * product_state(4, i)) / std::sqrt(2.0);
}

StateVector superposition(double phi, double sign, bool symmetric) {
    const C e = std::polar(1.0, phi);
    auto base = symmetric ? symmetric_state : antisymmetric_state;
    return (e * base(1) + sign * std::conj(e) * base(3)) / std::sqrt(2.0);
}

// Eigenvector components (on psi^+, psi^-) of the 2x2 field-dressed block;
// sign conventions chosen so the states connect continuously to psi^2, psi^3
// as delta -> 0.
struct QubitMix {
    double plus;
    double minus;
};

QubitMix mix_a2(double eta, double delta) {
    const double w = collective_shift_n(eta) - collective_shift_f(eta);
    const double wb = std::hypot(2.0 * delta, w);
    return {2.0 * delta, wb - w};
}

}  // namespace

StateVector antisymmetric_state(int i) { return pair_state(i, -1.0); }

StateVector symmetric_state(int i) { return pair_state(i, +1.0); }

StateVector superposition_plus(double phi, bool symmetric) {
    return superposition(phi, +1.0, symmetric);
}

StateVector superposition_minus(double phi, bool symmetric) {
    return superposition(phi, -1.0, symmetric);
}

StateVector psi_a(int i, double theta, double phi) {
    check_index(i);
    switch (i) {
        case 1:
            return std::sin(theta) * antisymmetric_state(2) -
                   std::cos(theta) * superposition_minus(phi, false);
        case 2:
            return superposition_plus(phi, false);
        default:
            return std::cos(theta) * antisymmetric_state(2) +
                   std::sin(theta) * superposition_minus(phi, false);
    }
}

StateVector psi_s(int i, double theta, double phi) {
    check_index(i);
    switch (i) {
        case 1:
            return std::sin(theta) * symmetric_state(2) -
                   std::cos(theta) * superposition_minus(phi, true);
        case 2:
            return superposition_plus(phi, true);
        default:
            return std::cos(theta) * symmetric_state(2) +
                   std::sin(theta) * superposition_minus(phi, true);
    }
}

StateVector phi_a(int i, double eta, double delta, double phi) {
    check_index(i);
    if (i == 1) return psi_a(1, pi / 2.0, phi);
    if (delta == 0.0) return psi_a(i, pi / 2.0, phi);
    const QubitMix m = mix_a2(eta, delta);
    const double n = std::hypot(m.plus, m.minus);
    StateVector v;
    if (i == 2)
        v = (m.plus * superposition_plus(phi, false) +
             m.minus * superposition_minus(phi, false)) / n;
    else
        v = (-m.minus * superposition_plus(phi, false) +
             m.plus * superposition_minus(phi, false)) / n;
    return canonical_phase(v);
}

StateVector phi_s(int i, double eta, double delta, double phi) {
    check_index(i);
    if (i == 1) return psi_s(1, pi / 2.0, phi);
    if (delta == 0.0) return psi_s(i, pi / 2.0, phi);
    // symmetric block is the negative of the antisymmetric one, so the roles
    // of the upper/lower eigenvalue branches swap
    const QubitMix m = mix_a2(eta, delta);
    const double n = std::hypot(m.plus, m.minus);
    StateVector v;
    if (i == 2)
        v = (-m.plus * superposition_plus(phi, true) +
             m.minus * superposition_minus(phi, true)) / n;
    else
        v = (m.minus * superposition_plus(phi, true) +
             m.plus * superposition_minus(phi, true)) / n;
    return canonical_phase(v);
}

double mixing_angle_a(double eta, double delta) {
    const QubitMix m = mix_a2(eta, std::abs(delta));
    return std::atan2(m.plus, m.minus);
}

double mixing_angle_s(double eta, double delta) {
    return pi / 2.0 - mixing_angle_a(eta, delta);
}

StateVector canonical_phase(const StateVector& v) {
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const C a = v(imax);
    if (std::abs(a) == 0.0) return v;
    return v * (std::abs(a) / a);
}

StateVector ground_state() { return product_state(4, 4); }

StateVector max_concurrence_state() {
    StateVector v = StateVector::Zero(dim);
    for (int i = 1; i <= 4; ++i) v(product_index(i, i)) = 0.5;
    return v;
}

StateVector named_state(const std::string& name, double theta, double phi) {
    if (name == "g" || name == "ground") return ground_state();
    if (name.rfind("product_", 0) == 0 && name.size() == 10) {
        const int i = name[8] - '0';
        const int j = name[9] - '0';
        return product_state(i, j);
    }
    auto index_of = [&](size_t pos) {
        if (pos >= name.size()) throw std::invalid_argument("bad state name: " + name);
        return name[pos] - '0';
    };
    if (name.rfind("psi_a", 0) == 0) return psi_a(index_of(5), theta, phi);
    if (name.rfind("psi_s", 0) == 0) return psi_s(index_of(5), theta, phi);
    if (name.rfind("a", 0) == 0 && name.size() == 2)
        return antisymmetric_state(index_of(1));
    if (name.rfind("s", 0) == 0 && name.size() == 2)
        return symmetric_state(index_of(1));
    throw std::invalid_argument("unknown state name: " + name);
}

}  // namespace dipair
