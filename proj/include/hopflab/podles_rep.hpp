#pragma once

// Truncated irreducible representations of the Podleś sphere on f_0 .. f_{N-1}:
//   A f_k = lambda mu^{2k} f_k,   B f_k = c(k)^{1/2} f_{k-1},
//   c(k) = lambda mu^{2k} - (lambda mu^{2k})^2 + c,
// with lambda = 1/2 +- (c + 1/4)^{1/2} the roots of lambda - lambda^2 + c = 0,
// so that B f_0 = 0.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hopflab/quadratic_surd.hpp"

namespace hopflab {

enum class Branch { plus, minus };

Branch parse_branch(const std::string& s);
std::string branch_name(Branch b);

QuadraticSurd podles_lambda(Branch sign, const mpq_class& c);
/// c(k) in exact arithmetic; c(0) = 0 for either branch.
QuadraticSurd podles_ck(Branch sign, const mpq_class& mu, const mpq_class& c, long k);

using ExactMatrix = Eigen::SparseMatrix<QuadraticSurd>;

struct MatrixRep {
    Branch sign = Branch::plus;
    mpq_class mu;
    mpq_class c;
    int dim = 0;
    std::vector<std::string> basis;  // "f0" .. "f{N-1}"

    // exact data: diagonal of A and squared entries of B
    QuadraticSurd lambda;
    std::vector<QuadraticSurd> a;   // a[k] = lambda mu^{2k}
    std::vector<QuadraticSurd> ck;  // ck[k] = c(k), k = 0 .. N

    // floating matrices
    Eigen::MatrixXcd A, B, Bs;
    Eigen::MatrixXcd e_minus, e0, e_plus;  // -i B*, 2A - 1, i B
};

/// Requires 0 < mu < 1, c >= 0, N >= 2, and c > 0 on the minus branch.
MatrixRep build_rep(Branch sign, const mpq_class& mu, const mpq_class& c, int dim);

/// Exact sparse A and the lowering shift S (S f_k = f_{k-1}); B = S diag(c(k)^{1/2}).
ExactMatrix exact_a(const MatrixRep& rep);
ExactMatrix exact_shift(int dim);

struct RelationResidual {
    std::string relation;
    double interior = 0;          // operator norm on span{f_0 .. f_{N-2}}
    double edge = 0;              // norm of the image of f_{N-1}
    bool interior_exact_zero = false;
    bool edge_exact_zero = false;
};

struct ResidualReport {
    std::vector<RelationResidual> relations;  // BA, B*B, BB*, A - A*
    bool interior_zero() const;
    const RelationResidual& at(const std::string& relation) const;
};

ResidualReport relation_residuals(const MatrixRep& rep);

/// Eigenvalues of A from a general Hermitian solver, descending.
std::vector<double> spectrum(const MatrixRep& rep);
/// Exact eigenvalues lambda mu^{2k}, descending on the plus branch.
std::vector<QuadraticSurd> spectrum_exact(const MatrixRep& rep);

/// Point on the classical sphere from the e-coordinates
/// e0 = 2 s cos(theta), e+- = +-i s sin(theta) e^{+-i psi}, s = (c + 1/4)^{1/2},
/// with e+- = +-i (x1 +- i x2), e0 = 2 x3.
std::array<double, 3> classical_point(const mpq_class& c, double theta, double psi);

/// max |x1^2 + x2^2 + x3^2 - R^2| over uniformly drawn (theta, psi).
double classical_embedding_check(const mpq_class& c, int samples, std::uint64_t seed = 20240611);

/// R = (4c + 1)^{1/2} / 2, exact when 4c + 1 is a rational square.
QuadraticSurd radius(const mpq_class& c);

}  // namespace hopflab
