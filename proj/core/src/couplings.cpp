#include "dipair/couplings.hpp"

#include <cmath>
#include <complex>

namespace dipair {

namespace {

using std::cos;
using std::sin;
using C = std::complex<double>;

// The imaginary (damping) brackets below suffer catastrophic cancellation as
// eta -> 0: the trig terms cancel through several orders before the leading
// eta^3 or eta^5 behaviour survives.  Below this switch the series forms are
// exact to machine precision (truncation < 1e-13 relative at the boundary),
// while direct evaluation still carries ~1e-11 relative error there.
constexpr double series_switch_eta = 0.1;

// [(eta^2 - 1) sin + eta cos] / eta^3  ->  2/3
double im_bracket_a(double e) {
    const double e2 = e * e;
    if (e < series_switch_eta)
        return 2.0 / 3.0 +
               e2 * (-2.0 / 15.0 +
                     e2 * (1.0 / 140.0 + e2 * (-1.0 / 5670.0 + e2 / 399168.0)));
    return ((e2 - 1.0) * sin(e) + e * cos(e)) / (e2 * e);
}

// [(eta^2 - 3) sin + 3 eta cos] / eta^3  ->  -eta^2/15
double im_bracket_b(double e) {
    const double e2 = e * e;
    if (e < series_switch_eta)
        return e2 * (-1.0 / 15.0 +
                     e2 * (1.0 / 210.0 + e2 * (-1.0 / 7560.0 + e2 / 498960.0)));
    return ((e2 - 3.0) * sin(e) + 3.0 * e * cos(e)) / (e2 * e);
}

// [sin - eta cos] / eta^3  ->  1/3
double im_bracket_n(double e) {
    const double e2 = e * e;
    if (e < series_switch_eta)
        return 1.0 / 3.0 +
               e2 * (-1.0 / 30.0 +
                     e2 * (1.0 / 840.0 + e2 * (-1.0 / 45360.0 + e2 / 3991680.0)));
    return (sin(e) - e * cos(e)) / (e2 * e);
}

// [(3 eta^2 - 1) sin + eta cos] / eta^3  ->  8/3
double im_bracket_diag(double e) {
    const double e2 = e * e;
    if (e < series_switch_eta)
        return 8.0 / 3.0 +
               e2 * (-7.0 / 15.0 +
                     e2 * (1.0 / 42.0 + e2 * (-13.0 / 22680.0 + e2 / 124740.0)));
    return ((3.0 * e2 - 1.0) * sin(e) + e * cos(e)) / (e2 * e);
}

// Real (coherent) brackets; these stay cancellation-free for eta -> 0.
double re_bracket_a(double e) {
    const double e2 = e * e;
    return ((e2 - 1.0) * cos(e) - e * sin(e)) / (e2 * e);
}

double re_bracket_b(double e) {
    const double e2 = e * e;
    return ((e2 - 3.0) * cos(e) - 3.0 * e * sin(e)) / (e2 * e);
}

double re_bracket_diag(double e) {
    const double e2 = e * e;
    return ((3.0 * e2 - 1.0) * cos(e) - e * sin(e)) / (e2 * e);
}

Eigen::Matrix3cd hermitize(const Eigen::Matrix3cd& m) {
    return 0.5 * (m + m.adjoint());
}

}  // namespace

Eigen::Matrix3cd chi_tensor(const Geometry& g) {
    g.validate();
    const double e = g.eta;
    // Re/Im parts of A*exp(i eta) and B*exp(i eta) from the stable brackets;
    // equal to the naive complex products away from small eta.
    const C a(re_bracket_a(e), im_bracket_a(e));
    const C b(re_bracket_b(e), im_bracket_b(e));
    const Eigen::Vector3d r = g.unit_separation();
    Eigen::Matrix3cd chi = a * Eigen::Matrix3cd::Identity();
    chi -= b * (r * r.transpose()).cast<C>();
    return chi;
}

CouplingSet couplings_from_tensor(const Geometry& g) {
    const Eigen::Matrix3cd chi = chi_tensor(g);
    const Eigen::Matrix3cd re = chi.real().cast<C>();
    const Eigen::Matrix3cd im = chi.imag().cast<C>();
    const auto d = transition_dipoles();
    CouplingSet cs;
    cs.geometry = g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            cs.omega(i, j) = 1.5 * (d[i].transpose() * re * d[j].conjugate()).value();
            cs.gamma_cross(i, j) =
                1.5 * (d[i].transpose() * im * d[j].conjugate()).value();
        }
    }
    cs.omega = hermitize(cs.omega);
    cs.gamma_cross = hermitize(cs.gamma_cross);
    cs.omega_f = collective_shift_f(g.eta);
    cs.omega_n = collective_shift_n(g.eta);
    return cs;
}

CouplingSet closed_form_couplings(const Geometry& g) {
    g.validate();
    const double e = g.eta;
    const double st = sin(g.theta);
    const double ct = cos(g.theta);
    const double cos2t = 1.0 - 2.0 * st * st;
    const C ephi = std::polar(1.0, -g.phi);

    // Off-diagonal generators g_Om, g_Ga such that
    //   X_31 = g * sin^2(theta) * e^{-2 i phi}
    //   X_21 = -sqrt(2) * g * sin(theta) cos(theta) * e^{-i phi}
    //   X_22 = X_11 - g * (2 cos^2(theta) - sin^2(theta))
    const double g_om = 0.75 * re_bracket_b(e);
    const double g_ga = 0.75 * im_bracket_b(e);

    const double om11 =
        0.375 * (re_bracket_diag(e) + cos2t * re_bracket_b(e));
    const double ga11 =
        0.375 * (im_bracket_diag(e) + cos2t * im_bracket_b(e));

    const double angular_cross = -std::sqrt(2.0) * st * ct;
    const double angular_diag = 2.0 * ct * ct - st * st;
    const C e2phi = ephi * ephi;

    CouplingSet cs;
    cs.geometry = g;

    auto fill = [&](Eigen::Matrix3cd& m, double diag, double gen) {
        const C x31 = gen * st * st * e2phi;
        const C x21 = gen * angular_cross * ephi;
        m.setZero();
        m(0, 0) = diag;
        m(1, 1) = diag - gen * angular_diag;
        m(2, 2) = diag;
        m(1, 0) = x21;
        m(2, 0) = x31;
        m(2, 1) = -x21;
        m(0, 1) = std::conj(x21);
        m(0, 2) = std::conj(x31);
        m(1, 2) = std::conj(-x21);
    };
    fill(cs.omega, om11, g_om);
    fill(cs.gamma_cross, ga11, g_ga);
    cs.omega_f = collective_shift_f(e);
    cs.omega_n = collective_shift_n(e);
    return cs;
}

double collective_shift_f(double eta) {
    const double e2 = eta * eta;
    return -1.5 * ((1.0 - e2) * cos(eta) + eta * sin(eta)) / (e2 * eta);
}

double collective_shift_n(double eta) {
    const double e2 = eta * eta;
    return 3.0 * (cos(eta) + eta * sin(eta)) / (e2 * eta);
}

CollectiveRates collective_decay_rates(double eta) {
    if (!(eta > 0.0))
        throw std::invalid_argument("collective_decay_rates: eta must be positive");
    // Gamma_a = gamma - Gamma_pair, Gamma_s = gamma + Gamma_pair, with the
    // transverse / longitudinal pair damping rates expressed through the
    // stable brackets so that Gamma_a^i + Gamma_s^i == 2 exactly.
    const double pair_f = 1.5 * im_bracket_a(eta);
    const double pair_n = 3.0 * im_bracket_n(eta);
    CollectiveRates r;
    r.antisymmetric = {1.0 - pair_f, 1.0 - pair_f, 1.0 - pair_n};
    r.symmetric = {1.0 + pair_f, 1.0 + pair_f, 1.0 + pair_n};
    return r;
}

}  // namespace dipair
