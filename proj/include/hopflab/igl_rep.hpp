#pragma once

// IGL(1,R) = {(b, a) : a > 0} with (b1, a1)(b2, a2) = (b1 + a1 b2, a1 a2), its
// irreducible action on functions of the half-line,
//   (R_lambda(b, a) phi)(xi) = exp(i lambda b xi) phi(a xi),
// and the coordinate operators x0 = i kappa xi d/dxi, x1 = -kappa lambda xi
// discretized on a logarithmic grid.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <functional>
#include <vector>

#include "hopflab/errors.hpp"

namespace hopflab {

template <typename T>
struct GroupElt2 {
    T b;
    T a;
};

template <typename T>
GroupElt2<T> make_group_elt(const T& b, const T& a) {
    if (!(a > 0)) throw DomainError("dilatation parameter must be positive");
    return {b, a};
}

template <typename T>
GroupElt2<T> group_identity() {
    return {T(0), T(1)};
}

template <typename T>
GroupElt2<T> group_mul(const GroupElt2<T>& g1, const GroupElt2<T>& g2) {
    return {T(g1.b + g1.a * g2.b), T(g1.a * g2.a)};
}

template <typename T>
GroupElt2<T> group_inv(const GroupElt2<T>& g) {
    return {T(-g.b / g.a), T(T(1) / g.a)};
}

template <typename T>
bool operator==(const GroupElt2<T>& x, const GroupElt2<T>& y) {
    return x.b == y.b && x.a == y.a;
}

/// Nodes xi_j = xi_min r^j, j = 0 .. size-1.
struct LogGrid {
    double xi_min = 0.0625;
    double ratio = 0;
    int size = 0;

    LogGrid() = default;
    LogGrid(double xi_min, double ratio, int size);

    double node(int j) const;
    double log_step() const;
    Eigen::VectorXd nodes() const;
    /// Same interval with the log step halved: r -> r^{1/2}, M -> 2M - 1.
    LogGrid refined() const;
};

/// xi_min = 2^-4, r = 2^{1/32}, M = 256.
LogGrid default_grid();

struct GridFunction {
    LogGrid grid;
    Eigen::VectorXcd values;
    bool interpolated = false;  // set when a dilation missed the lattice
};

GridFunction sample(const LogGrid& grid, const std::function<std::complex<double>(double)>& f);

/// <f, g> = h sum conj(f_j) g_j, the discretization of the d xi / xi measure.
std::complex<double> inner(const GridFunction& f, const GridFunction& g);
double norm(const GridFunction& f);

/// Lattice dilations a = r^m shift indices (zero outside the grid); other a
/// interpolate linearly in log xi and flag the result.
GridFunction act(double lambda, const GroupElt2<double>& g, const GridFunction& phi);

/// Tolerance below which log(a)/log(r) counts as an integer.
inline constexpr double kLatticeTolerance = 1e-9;

/// samples(n, q) = f(b_n, a_q) on the periodic grid b_n = n L / Nb. Returns
/// f_lambda(b_n, a_q) = sum_m (L / Nb) exp(-i lambda b_m) f(b_n + b_m, a_q).
/// Throws UsageError unless lambda L / (2 pi) is an integer.
Eigen::MatrixXcd sector_project(const Eigen::MatrixXcd& samples, double period, double lambda);

/// max |f_lambda(b + b0, .) - exp(i lambda b0) f_lambda(b, .)| for b0 = shift * L / Nb.
double sector_covariance_residual(const Eigen::MatrixXcd& projected, double period, double lambda, int shift);

struct OperatorPair {
    LogGrid grid;
    double lambda = 0;
    double kappa = 0;
    Eigen::SparseMatrix<std::complex<double>> X0;  // i kappa D, D central difference in log xi
    Eigen::VectorXd x1;                            // diagonal of X1, -kappa lambda xi_j

    Eigen::MatrixXcd dense_x0() const;
    Eigen::MatrixXcd dense_x1() const;
};

/// Dirichlet truncation at both ends; requires M >= 3.
OperatorPair position_operators(double lambda, double kappa, const LogGrid& grid);

/// Eigenvalues of X1, ascending.
Eigen::VectorXd x1_spectrum(const OperatorPair& ops);

/// Gaussian in log xi centred on the grid interval, width one twelfth of it.
GridFunction commutator_probe(const LogGrid& grid);

/// || ([X0, X1] - i kappa X1) phi || / || phi || over interior nodes 1 .. M-2
/// for the probe phi, so every row uses its full stencil.
double commutator_residual(const OperatorPair& ops);

struct ConvergenceStudy {
    std::vector<double> h;
    std::vector<double> residual;
    std::vector<double> order;  // per refinement step, log(r_k / r_{k+1}) / log(h_k / h_{k+1})
    double fitted_order = 0;    // least-squares slope of log residual against log h
};

/// Throws UsageError for fewer than two operator pairs.
ConvergenceStudy convergence_order(const std::vector<OperatorPair>& pairs);

/// `refinements` successive refinements of `grid`, operators on each.
std::vector<OperatorPair> refinement_sequence(double lambda, double kappa, const LogGrid& grid, int refinements);

}  // namespace hopflab
