#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "hopflab/errors.hpp"
#include "hopflab/two_particle.hpp"

using namespace hopflab;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

MatrixXcd random_unitary(int n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    return Eigen::HouseholderQR<MatrixXcd>(m).householderQ();
}

}  // namespace

TEST_CASE("flip permutes tensor factors") {
    const Eigen::MatrixXd K = flip(3);
    CHECK((K * K - Eigen::MatrixXd::Identity(9, 9)).norm() == 0);
    VectorXcd v = VectorXcd::Zero(3), w = VectorXcd::Zero(3);
    v(0) = 1;
    w(2) = 1;
    CHECK((K.cast<std::complex<double>>() * product_state(v, w) - product_state(w, v)).norm() == 0);
}

TEST_CASE("two-particle Hamiltonian of a diagonal spin system") {
    MatrixXcd H = MatrixXcd::Zero(2, 2);
    H(0, 0) = 1;
    H(1, 1) = 3;
    const TwoParticleSystem s = compose_hamiltonian(H);
    // H (x) 1 + 1 (x) H
    const MatrixXcd expect =
        Eigen::kroneckerProduct(H, MatrixXcd::Identity(2, 2)).eval() +
        Eigen::kroneckerProduct(MatrixXcd::Identity(2, 2), H).eval();
    CHECK((s.H2 - expect).norm() < 1e-15);
    const VectorXcd psi = singlet();
    CHECK((s.H2 * psi - 4.0 * psi).norm() < 1e-14);
    CHECK((s.K.cast<std::complex<double>>() * psi + psi).norm() == 0);
}

TEST_CASE("singlet is maximally entangled") {
    const VectorXcd psi = singlet();
    CHECK(std::abs(entanglement_entropy(psi) - std::log(2.0)) < 1e-12);
    const Eigen::VectorXd sc = schmidt_coefficients(psi, 2, 2);
    CHECK(std::abs(sc(0) - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(sc(1) - std::sqrt(0.5)) < 1e-12);
    CHECK((reduced_density(psi, 2, 2) - 0.5 * MatrixXcd::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("entropy is invariant under local unitaries") {
    std::mt19937 rng(3);
    const VectorXcd psi = singlet();
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixXcd U = random_unitary(2, rng), V = random_unitary(2, rng);
        const VectorXcd phi = Eigen::kroneckerProduct(U, V).eval() * psi;
        CHECK(std::abs(entanglement_entropy(phi) - std::log(2.0)) < 1e-12);
    }
    // product states carry none, in unequal dimensions as well
    std::normal_distribution<double> g;
    VectorXcd a(2), b(3);
    for (auto& x : a) x = {g(rng), g(rng)};
    for (auto& x : b) x = {g(rng), g(rng)};
    CHECK(entanglement_entropy(product_state(a, b), 2, 3) < 1e-12);
}

TEST_CASE("two-particle errors") {
    MatrixXcd H = MatrixXcd::Zero(2, 2);
    H(0, 1) = 1;
    CHECK_THROWS_AS(compose_hamiltonian(H), DomainError);
    CHECK_THROWS_AS(entanglement_entropy(VectorXcd::Zero(4)), DomainError);
}
