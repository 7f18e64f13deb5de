#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dipair {

// Right-hand side dy/dt = f(t, y) writing into the preallocated third
// argument.
using RhsFunction =
    std::function<void(double, const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

struct IntegratorOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    double initial_step = 0.0;  // 0: choose automatically
    double max_step = 0.0;      // 0: unlimited
    long max_steps = 2000000;
};

struct IntegrationError : std::runtime_error {
    explicit IntegrationError(const std::string& what)
        : std::runtime_error(what) {}
};

// Adaptive Dormand-Prince 5(4) integration of y from t0 to t1 (in place).
// The final step lands exactly on t1.  Returns the number of accepted steps.
long integrate_adaptive(const RhsFunction& f, Eigen::VectorXcd& y, double t0,
                        double t1, const IntegratorOptions& options = {});

}  // namespace dipair
