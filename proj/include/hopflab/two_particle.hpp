#pragma once

// Two identical particles on C^N (x) C^N. Basis index of e_i (x) e_j is i*M + j
// for factor dimensions N, M. In the spin-1/2 space index 0 is e_{-1/2} and
// index 1 is e_{+1/2}.

#include <Eigen/Dense>

namespace hopflab {

/// K (e_i (x) e_j) = e_j (x) e_i on C^N (x) C^N.
Eigen::MatrixXd flip(int n);

struct TwoParticleSystem {
    Eigen::MatrixXcd H;   // one particle
    Eigen::MatrixXd K;    // flip
    Eigen::MatrixXcd H2;  // H (x) id + K (H (x) id) K^-1
};

/// Throws DomainError when H is not Hermitian (relative tolerance `tol`).
TwoParticleSystem compose_hamiltonian(const Eigen::MatrixXcd& H, double tol = 1e-12);

/// e_{+1/2} (x) e_{-1/2} - e_{-1/2} (x) e_{+1/2}, not normalized.
Eigen::VectorXcd singlet();

Eigen::VectorXcd product_state(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w);

/// Schmidt coefficients of the normalized state, descending; their squares sum to 1.
Eigen::VectorXd schmidt_coefficients(const Eigen::VectorXcd& state, int n, int m);

/// Von Neumann entropy (natural log) of the reduced density matrix of the
/// normalized state. Throws DomainError for the zero vector.
double entanglement_entropy(const Eigen::VectorXcd& state, int n, int m);
double entanglement_entropy(const Eigen::VectorXcd& state);  // square factors

/// Reduced density matrix of the first factor, tr_2 |psi><psi| / <psi|psi>.
Eigen::MatrixXcd reduced_density(const Eigen::VectorXcd& state, int n, int m);

}  // namespace hopflab
