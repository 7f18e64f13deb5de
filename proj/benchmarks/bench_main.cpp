// Microbenchmarks for the hot construction and linear-algebra paths: the
// operator builders run once per parameter point in sweeps, while the
// right-hand-side matvec dominates time stepping and the SVD/kernel pair
// dominates stationary-state queries.

#include <benchmark/benchmark.h>

#include "dipair/couplings.hpp"
#include "dipair/dfs.hpp"
#include "dipair/dynamics.hpp"
#include "dipair/operators.hpp"
#include "dipair/states.hpp"

namespace {

using namespace dipair;

const Geometry kGeometry{2.0 * pi * 0.1, 0.5 * pi, 0.0};

void BM_ClosedFormCouplings(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_couplings(kGeometry));
    }
}
BENCHMARK(BM_ClosedFormCouplings);

void BM_BuildDissipator(benchmark::State& state) {
    const CouplingSet cs = closed_form_couplings(kGeometry);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dissipator(cs));
    }
}
BENCHMARK(BM_BuildDissipator);

void BM_BuildLiouvillian(benchmark::State& state) {
    const CouplingSet cs = closed_form_couplings(kGeometry);
    const OperatorMatrix h = build_h_a(1.0) + build_h_omega(cs);
    const Superoperator d = build_dissipator(cs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_liouvillian(h, d));
    }
}
BENCHMARK(BM_BuildLiouvillian);

void BM_RhsMatvec(benchmark::State& state) {
    const CouplingSet cs = closed_form_couplings(kGeometry);
    const Superoperator l =
        build_liouvillian(build_h_a(1.0) + build_h_omega(cs),
                          build_dissipator(cs));
    const StateVector psi = psi_a(2, kGeometry.theta, kGeometry.phi);
    const Eigen::VectorXcd v = vectorize(psi * psi.adjoint());
    Eigen::VectorXcd out(sdim);
    for (auto _ : state) {
        out.noalias() = l * v;
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_RhsMatvec);

void BM_DissipatorNullSpace(benchmark::State& state) {
    const Superoperator d =
        build_dissipator(closed_form_couplings(kGeometry));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dissipator_null_space(d));
    }
}
BENCHMARK(BM_DissipatorNullSpace);

void BM_SteadyState(benchmark::State& state) {
    const CouplingSet cs = closed_form_couplings(kGeometry);
    const Superoperator l =
        build_liouvillian(build_h_a(1.0) + build_h_omega(cs),
                          build_dissipator(cs));
    for (auto _ : state) {
        benchmark::DoNotOptimize(steady_state(l));
    }
}
BENCHMARK(BM_SteadyState);

}  // namespace

BENCHMARK_MAIN();
