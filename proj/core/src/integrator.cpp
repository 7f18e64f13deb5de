#include "dipair/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace dipair {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                 c5 = 8.0 / 9.0;

constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;

// Fifth-order solution weights (also the last stage row).
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;

// Error weights: difference between the fifth- and fourth-order solutions.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

double error_norm(const Eigen::VectorXcd& err, const Eigen::VectorXcd& y0,
                  const Eigen::VectorXcd& y1, double rtol, double atol) {
    const auto n = err.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double scale =
            atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double ratio = std::abs(err(i)) / scale;
        sum += ratio * ratio;
    }
    return std::sqrt(sum / static_cast<double>(n));
}

}  // namespace

long integrate_adaptive(const RhsFunction& f, Eigen::VectorXcd& y, double t0,
                        double t1, const IntegratorOptions& options) {
    if (!(options.rtol > 0.0) || !(options.atol > 0.0)) {
        throw IntegrationError("tolerances must be positive");
    }
    const double span = t1 - t0;
    if (span == 0.0) {
        return 0;
    }
    const double direction = span > 0.0 ? 1.0 : -1.0;

    const auto n = y.size();
    Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    Eigen::VectorXcd stage(n), candidate(n), err(n);

    double t = t0;
    f(t, y, k1);

    double h = options.initial_step;
    if (h <= 0.0) {
        // Conservative automatic start; the controller grows it quickly.
        h = std::abs(span) / 100.0;
        const double k1_norm = k1.norm();
        if (k1_norm > 0.0) {
            h = std::min(h, 0.01 * std::max(y.norm(), 1.0) / k1_norm);
        }
        h = std::max(h, 1e-10 * std::abs(span));
    }
    if (options.max_step > 0.0) {
        h = std::min(h, options.max_step);
    }
    h *= direction;

    long accepted = 0;
    long attempts = 0;
    bool first_same_as_last_valid = false;

    while (direction * (t1 - t) > 0.0) {
        if (++attempts > options.max_steps) {
            throw IntegrationError("step limit exceeded before reaching t1");
        }
        bool final_step = false;
        if (direction * (t + h - t1) >= 0.0) {
            h = t1 - t;
            final_step = true;
        }
        if (std::abs(h) <= std::abs(t) * 1e-16) {
            throw IntegrationError("step size underflow");
        }
        if (first_same_as_last_valid) {
            k1 = k7;
        }

        stage = y + h * (a21 * k1);
        f(t + c2 * h, stage, k2);
        stage = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, stage, k3);
        stage = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, stage, k4);
        stage = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, stage, k5);
        stage = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, stage, k6);
        candidate = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + h, candidate, k7);

        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double norm =
            error_norm(err, y, candidate, options.rtol, options.atol);

        if (norm <= 1.0) {
            t = final_step ? t1 : t + h;
            y.swap(candidate);
            first_same_as_last_valid = true;
            ++accepted;
        } else {
            first_same_as_last_valid = false;
        }

        // Standard fifth-order step controller with safety factor.
        double factor;
        if (norm == 0.0) {
            factor = 10.0;
        } else {
            factor = 0.9 * std::pow(norm, -0.2);
            factor = std::clamp(factor, 0.2, 10.0);
        }
        h *= factor;
        if (options.max_step > 0.0 && std::abs(h) > options.max_step) {
            h = direction * options.max_step;
        }
    }
    return accepted;
}

}  // namespace dipair
