#include "dipair/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace dipair {

namespace {

using C = std::complex<double>;
constexpr C I{0.0, 1.0};

void check_level(int level) {
    if (level < 1 || level > 3)
        throw std::invalid_argument("transition level must be 1, 2 or 3");
}

void check_atom(int atom) {
    if (atom != 1 && atom != 2)
        throw std::invalid_argument("atom index must be 1 or 2");
}

// kron(A, B) for dim x dim factors of a 4x4 pair.
OperatorMatrix kron4(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
    OperatorMatrix m(dim, dim);
    for (int i = 0; i < n_levels; ++i)
        for (int j = 0; j < n_levels; ++j)
            m.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return m;
}

Superoperator kron16(const OperatorMatrix& a, const OperatorMatrix& b) {
    Superoperator m(sdim, sdim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m.block(dim * i, dim * j, dim, dim) = a(i, j) * b;
    return m;
}

// c * (2 J rho K - K J rho - rho K J), vectorized column-major.
void add_sandwich(Superoperator& l, const C& c, const OperatorMatrix& j,
                  const OperatorMatrix& k) {
    const OperatorMatrix kj = k * j;
    const OperatorMatrix id = OperatorMatrix::Identity(dim, dim);
    l += c * (2.0 * kron16(k.transpose(), j) - kron16(id, kj) -
              kron16(kj.transpose(), id));
}

Superoperator dissipator_from_rates(const Eigen::Matrix3cd& rates) {
    Superoperator l = Superoperator::Zero(sdim, sdim);
    for (int i = 1; i <= 3; ++i)
        for (int mu = 1; mu <= 2; ++mu)
            add_sandwich(l, 1.0, lowering_operator(i, mu), raising_operator(i, mu));
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const C c = rates(i - 1, j - 1);
            if (c == 0.0) continue;
            // coefficient Gamma_ij pairs transition i with the raising
            // operator and j with the lowering one, for both atom orderings
            add_sandwich(l, c, lowering_operator(j, 2), raising_operator(i, 1));
            add_sandwich(l, c, lowering_operator(j, 1), raising_operator(i, 2));
        }
    }
    return l;
}

}  // namespace

int product_index(int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4)
        throw std::invalid_argument("product_index: levels must be in 1..4");
    return n_levels * (i - 1) + (j - 1);
}

StateVector product_state(int i, int j) {
    StateVector v = StateVector::Zero(dim);
    v(product_index(i, j)) = 1.0;
    return v;
}

OperatorMatrix lowering_operator(int level, int atom) {
    check_level(level);
    check_atom(atom);
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    s(3, level - 1) = 1.0;  // |4><level|
    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
    return atom == 1 ? kron4(s, id) : kron4(id, s);
}

OperatorMatrix raising_operator(int level, int atom) {
    return lowering_operator(level, atom).adjoint();
}

OperatorMatrix build_h_a(double delta) {
    const double w[3] = {-delta, 0.0, delta};
    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
    for (int i = 1; i <= 3; ++i)
        for (int mu = 1; mu <= 2; ++mu)
            h += w[i - 1] * raising_operator(i, mu) * lowering_operator(i, mu);
    return h;
}

OperatorMatrix build_h_omega(const CouplingSet& cs) {
    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            h -= cs.omega(i - 1, j - 1) *
                 (raising_operator(i, 1) * lowering_operator(j, 2) +
                  raising_operator(i, 2) * lowering_operator(j, 1));
    return h;
}

OperatorMatrix build_h_laser(const DriveConfig& drive) {
    const double det[3] = {drive.delta2 + drive.zeeman, drive.delta2,
                           drive.delta2 - drive.zeeman};
    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
    for (int i = 1; i <= 3; ++i)
        for (int mu = 1; mu <= 2; ++mu)
            h -= det[i - 1] * raising_operator(i, mu) * lowering_operator(i, mu);
    for (int mu = 1; mu <= 2; ++mu) {
        const C c1 = drive.omega_x[mu - 1] + I * drive.omega_y[mu - 1];
        const C c3 = -drive.omega_x[mu - 1] + I * drive.omega_y[mu - 1];
        h -= c1 * raising_operator(1, mu) + std::conj(c1) * lowering_operator(1, mu);
        h -= c3 * raising_operator(3, mu) + std::conj(c3) * lowering_operator(3, mu);
    }
    return h;
}

OperatorMatrix rf_generator() {
    OperatorMatrix g = OperatorMatrix::Zero(dim, dim);
    for (int mu = 1; mu <= 2; ++mu)
        g += raising_operator(3, mu) * lowering_operator(3, mu) -
             raising_operator(1, mu) * lowering_operator(1, mu);
    return g;
}

OperatorMatrix build_h_rf(double delta0, double omega_rf, double phi_rf, double t) {
    return (2.0 * delta0 * std::cos(omega_rf * t + phi_rf)) * rf_generator();
}

Eigen::VectorXcd vectorize(const OperatorMatrix& rho) {
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("vectorize: operator must be 16x16");
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), sdim);
}

OperatorMatrix unvectorize(const Eigen::VectorXcd& v) {
    if (v.size() != sdim)
        throw std::invalid_argument("unvectorize: vector must have 256 entries");
    return Eigen::Map<const OperatorMatrix>(v.data(), dim, dim);
}

Superoperator commutator_superoperator(const OperatorMatrix& h) {
    const OperatorMatrix id = OperatorMatrix::Identity(dim, dim);
    return -I * (kron16(id, h) - kron16(h.transpose(), id));
}

Superoperator build_dissipator(const CouplingSet& cs) {
    return dissipator_from_rates(cs.gamma_cross);
}

Superoperator build_limit_dissipator() {
    return dissipator_from_rates(Eigen::Matrix3cd::Identity());
}

Superoperator build_liouvillian(const OperatorMatrix& h, const Superoperator& dissipator) {
    return commutator_superoperator(h) + dissipator;
}

Eigen::MatrixXcd kossakowski_matrix(const CouplingSet& cs) {
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(6, 6);
    k.block<3, 3>(0, 0) = Eigen::Matrix3cd::Identity();
    k.block<3, 3>(3, 3) = Eigen::Matrix3cd::Identity();
    k.block<3, 3>(0, 3) = cs.gamma_cross;
    k.block<3, 3>(3, 0) = cs.gamma_cross;
    return k;
}

}  // namespace dipair
