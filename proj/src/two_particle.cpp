#include "hopflab/two_particle.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "hopflab/errors.hpp"

namespace hopflab {

Eigen::MatrixXd flip(int n) {
    if (n < 1) throw UsageError("flip needs a positive dimension");
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(j * n + i, i * n + j) = 1;
    return k;
}

TwoParticleSystem compose_hamiltonian(const Eigen::MatrixXcd& H, double tol) {
    if (H.rows() != H.cols() || H.rows() == 0) throw UsageError("Hamiltonian must be a nonempty square matrix");
    if ((H - H.adjoint()).norm() > tol * std::max(1.0, H.norm())) throw DomainError("Hamiltonian is not Hermitian");
    const int n = static_cast<int>(H.rows());
    TwoParticleSystem sys;
    sys.H = H;
    sys.K = flip(n);
    const Eigen::MatrixXcd H1 = Eigen::kroneckerProduct(H, Eigen::MatrixXcd::Identity(n, n));
    const Eigen::MatrixXcd Kc = sys.K.cast<std::complex<double>>();
    sys.H2 = H1 + Kc * H1 * Kc.transpose();  // K^-1 = K^T for a permutation
    return sys;
}

Eigen::VectorXcd singlet() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(1 * 2 + 0) = 1;   // e_{+1/2} (x) e_{-1/2}
    v(0 * 2 + 1) = -1;  // e_{-1/2} (x) e_{+1/2}
    return v;
}

Eigen::VectorXcd product_state(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) {
    Eigen::VectorXcd out = Eigen::kroneckerProduct(v, w);
    return out;
}

namespace {

Eigen::MatrixXcd coefficient_matrix(const Eigen::VectorXcd& state, int n, int m) {
    if (n < 1 || m < 1 || state.size() != static_cast<Eigen::Index>(n) * m)
        throw UsageError("state size does not match the factor dimensions");
    const double nrm = state.norm();
    if (nrm == 0) throw DomainError("the zero vector is not a state");
    Eigen::MatrixXcd psi(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) psi(i, j) = state(i * m + j) / nrm;
    return psi;
}

int square_side(const Eigen::VectorXcd& state) {
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(state.size()))));
    if (static_cast<Eigen::Index>(n) * n != state.size()) throw UsageError("state size is not a square");
    return n;
}

}  // namespace

Eigen::VectorXd schmidt_coefficients(const Eigen::VectorXcd& state, int n, int m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficient_matrix(state, n, m));
    return svd.singularValues();
}

double entanglement_entropy(const Eigen::VectorXcd& state, int n, int m) {
    const Eigen::VectorXd s = schmidt_coefficients(state, n, m);
    double h = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        const double p = s(k) * s(k);
        if (p > 0) h -= p * std::log(p);
    }
    return std::max(h, 0.0);
}

double entanglement_entropy(const Eigen::VectorXcd& state) {
    const int n = square_side(state);
    return entanglement_entropy(state, n, n);
}

Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& state, int n, int m) {
    const Eigen::MatrixXcd psi = coefficient_matrix(state, n, m);
    return psi * psi.adjoint();
}

}  // namespace hopflab
