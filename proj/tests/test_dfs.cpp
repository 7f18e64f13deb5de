#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "dipair/couplings.hpp"
#include "dipair/dfs.hpp"
#include "dipair/operators.hpp"
#include "dipair/states.hpp"
#include "test_util.hpp"

using namespace dipair;
using C = std::complex<double>;

namespace {

// Orthonormal basis of the exchange-odd sector: the three antisymmetric
// single-excitation states plus the three antisymmetric doubly-excited
// combinations.
Eigen::MatrixXcd exchange_odd_basis() {
    Eigen::MatrixXcd basis(dim, 6);
    for (int i = 1; i <= 3; ++i) basis.col(i - 1) = antisymmetric_state(i);
    int col = 3;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            basis.col(col++) =
                (product_state(i, j) - product_state(j, i)) / std::sqrt(2.0);
    return basis;
}

}  // namespace

TEST_CASE("null-space extraction thresholds relative to the top singular value") {
    // Small diagonal matrix with a clear kernel and one marginal value.
    Superoperator d = Superoperator::Zero(8, 8);
    d.diagonal() << 2.0, 1.0, 0.5, 0.1, 1e-3, 5e-10, 1e-12, 0.0;

    SUBCASE("marginal value just above the cut trips the warning") {
        const NullSpaceResult r = dissipator_null_space(d, 1e-10);
        CHECK(r.dimension == 2);
        CHECK(r.threshold == doctest::Approx(2e-10).epsilon(1e-12));
        CHECK(r.largest_kept == doctest::Approx(1e-12).epsilon(1e-6));
        CHECK(r.smallest_discarded == doctest::Approx(5e-10).epsilon(1e-6));
        CHECK(r.tolerance_warning);
        CHECK(r.basis.cols() == 2);
        CHECK(r.basis.rows() == 8);
        // Descending singular values.
        for (int k = 1; k < 8; ++k)
            CHECK(r.singular_values(k) <= r.singular_values(k - 1));
    }

    SUBCASE("looser tolerance absorbs the marginal value cleanly") {
        const NullSpaceResult r = dissipator_null_space(d, 1e-8);
        CHECK(r.dimension == 3);
        CHECK(r.smallest_discarded == doctest::Approx(1e-3).epsilon(1e-6));
        CHECK(!r.tolerance_warning);
    }

    SUBCASE("empty kernel is reported as dimension zero") {
        const NullSpaceResult r =
            dissipator_null_space(Superoperator::Identity(8, 8), 1e-10);
        CHECK(r.dimension == 0);
        CHECK(!r.tolerance_warning);
    }

    CHECK_THROWS_AS((void)dissipator_null_space(d, 0.0), std::invalid_argument);
}

TEST_CASE("dissipator kernel is one-dimensional at finite separation") {
    for (const double r : {0.05, 0.1, 0.3, 0.7}) {
        const Geometry g{2.0 * pi * r, 1.0, 0.5};
        const NullSpaceResult ns =
            dissipator_null_space(build_dissipator(closed_form_couplings(g)));
        CHECK(ns.dimension == 1);
        CHECK(!ns.tolerance_warning);
        const Eigen::MatrixXcd ground_span =
            vectorize(ground_state() * ground_state().adjoint());
        CHECK(largest_principal_angle(ns.basis, ground_span) < 1e-7);
    }
}

TEST_CASE("limit dissipator has the sixteen-dimensional decay-free algebra") {
    const NullSpaceResult ns = dissipator_null_space(build_limit_dissipator());
    CHECK(ns.dimension == 16);
    CHECK(largest_principal_angle(ns.basis, dfs_operator_basis()) < 1e-8);
    // Clear spectral gap between the kernel and the decaying modes.
    const auto n = ns.singular_values.size();
    CHECK(ns.singular_values(n - 17) / ns.singular_values(0) > 1e-3);
}

TEST_CASE("decay-free subspace bases are orthonormal and consistent") {
    const Eigen::MatrixXcd basis = dfs_state_basis();
    CHECK((basis.adjoint() * basis - Eigen::MatrixXcd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    const OperatorMatrix p = dfs_projector();
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(p.trace().real() - 4.0) < 1e-13);
    CHECK((p * ground_state() - ground_state()).norm() < 1e-15);
    CHECK((p * antisymmetric_state(2) - antisymmetric_state(2)).norm() < 1e-15);
    CHECK((p * symmetric_state(2)).norm() < 1e-15);

    const Eigen::MatrixXcd op_basis = dfs_operator_basis();
    CHECK((op_basis.adjoint() * op_basis - Eigen::MatrixXcd::Identity(16, 16))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("magnetic and exchange Hamiltonians never couple out of the subspace") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int k = 0; k < 100; ++k) {
        const Geometry g = testutil::random_geometry(rng);
        const CouplingSet cs = closed_form_couplings(g);
        const double delta = d(rng);
        CHECK(invariance_defect(build_h_omega(cs)) < 1e-12);
        CHECK(invariance_defect(build_h_a(delta)) < 1e-12);
        CHECK(invariance_defect(build_h_a(delta) + build_h_omega(cs)) < 1e-12);
    }
    CHECK_THROWS_AS(
        (void)invariance_defect(OperatorMatrix::Identity(dim, dim),
                                Eigen::MatrixXcd::Identity(4, 4)),
        std::invalid_argument);
}

TEST_CASE("equal-amplitude laser drive preserves the exchange-odd sector") {
    DriveConfig drive;
    drive.omega_y = {C(2.5, 0.0), C(2.5, 0.0)};
    drive.delta2 = 0.3;
    drive.zeeman = 0.8;
    const OperatorMatrix h = build_h_laser(drive);

    CHECK(invariance_defect(h, exchange_odd_basis()) < 1e-12);
    // ... while the decay-free subspace itself is driven out of (that is the
    // point of the laser).
    CHECK(invariance_defect(h) > 0.1);

    SUBCASE("unequal amplitudes break the exchange symmetry") {
        drive.omega_y = {C(2.5, 0.0), C(1.5, 0.0)};
        CHECK(invariance_defect(build_h_laser(drive), exchange_odd_basis()) > 0.1);
    }
}

TEST_CASE("projected decay rates reproduce the closed-form collective rates") {
    std::mt19937 rng(59);
    for (int k = 0; k < 8; ++k) {
        const Geometry g = testutil::random_geometry(rng);
        const CouplingSet cs = closed_form_couplings(g);
        const CollectiveRates rates = collective_decay_rates(g.eta);
        const auto leak_a = projected_decay_rates(cs, false);
        const auto leak_s = projected_decay_rates(cs, true);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(leak_a[i] - 2.0 * rates.antisymmetric[i]) < 1e-10);
            CHECK(std::abs(leak_s[i] - 2.0 * rates.symmetric[i]) < 1e-10);
        }
        const auto leak = dfs_leakage_rate(cs);
        for (int i = 0; i < 3; ++i) CHECK(leak[i] == leak_a[i]);
    }
}

TEST_CASE("projected decay rate of simple states") {
    const Geometry g{2.0 * pi * 0.2, 0.7, 0.1};
    const Superoperator d = build_dissipator(closed_form_couplings(g));
    CHECK(std::abs(projected_decay_rate(d, ground_state())) < 1e-13);
    // A single excited atom decays at the bare rate regardless of coupling.
    CHECK(projected_decay_rate(d, product_state(2, 4)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(projected_decay_rate(d, product_state(4, 1)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Both atoms excited: rates add.
    CHECK(projected_decay_rate(d, product_state(1, 3)) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("slow subspace of a tight pair approaches the decay-free algebra") {
    const Geometry g{2.0 * pi * 0.01, 1.2, 0.4};
    const Superoperator d = build_dissipator(closed_form_couplings(g));
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(d, Eigen::ComputeThinV);
    const Eigen::MatrixXcd slow = svd.matrixV().rightCols(16);
    CHECK(largest_principal_angle(slow, dfs_operator_basis()) < 0.05);
}

TEST_CASE("principal angle distinguishes aligned and orthogonal spans") {
    const Eigen::MatrixXcd basis = dfs_state_basis();
    CHECK(largest_principal_angle(basis, basis) < 1e-7);
    Eigen::MatrixXcd other(dim, 4);
    other.col(0) = symmetric_state(1);
    other.col(1) = symmetric_state(2);
    other.col(2) = symmetric_state(3);
    other.col(3) = product_state(1, 1);
    CHECK(largest_principal_angle(basis, other) ==
          doctest::Approx(pi / 2.0).epsilon(1e-10));
    CHECK_THROWS_AS(
        (void)largest_principal_angle(basis, Eigen::MatrixXcd::Identity(4, 4)),
        std::invalid_argument);
}
