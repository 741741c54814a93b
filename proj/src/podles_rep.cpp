#include "hopflab/podles_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hopflab/errors.hpp"

namespace hopflab {

Branch parse_branch(const std::string& s) {
    if (s == "plus" || s == "+") return Branch::plus;
    if (s == "minus" || s == "-") return Branch::minus;
    throw UsageError("branch must be 'plus' or 'minus', got '" + s + "'");
}

std::string branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

QuadraticSurd podles_lambda(Branch sign, const mpq_class& c) {
    const mpq_class d = c + mpq_class(1, 4);
    return QuadraticSurd(mpq_class(1, 2), sign == Branch::plus ? 1 : -1, d);
}

namespace {

mpq_class pow_q(const mpq_class& x, long n) {
    mpq_class r = 1;
    for (long k = 0; k < n; ++k) r *= x;
    return r;
}

QuadraticSurd ck_from(const QuadraticSurd& lambda, const mpq_class& mu2k, const mpq_class& c) {
    const QuadraticSurd ak = lambda * QuadraticSurd(mu2k);
    return ak - ak * ak + QuadraticSurd(c);
}

using Triplet = Eigen::Triplet<QuadraticSurd>;

ExactMatrix diagonal(const std::vector<QuadraticSurd>& d, int n) {
    ExactMatrix m(n, n);
    std::vector<Triplet> t;
    for (int k = 0; k < n; ++k)
        if (!d[k].is_zero()) t.emplace_back(k, k, d[k]);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

// Columns of m holding a nonzero entry.
std::vector<bool> nonzero_columns(const ExactMatrix& m) {
    std::vector<bool> out(m.cols(), false);
    for (int j = 0; j < m.outerSize(); ++j)
        for (ExactMatrix::InnerIterator it(m, j); it; ++it)
            if (!it.value().is_zero()) out[it.col()] = true;
    return out;
}

double opnorm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

RelationResidual residual_entry(const std::string& name, const Eigen::MatrixXcd& r, std::vector<bool> exact_nz) {
    const int n = static_cast<int>(r.cols());
    RelationResidual out;
    out.relation = name;
    out.interior = opnorm(r.leftCols(n - 1));
    out.edge = r.col(n - 1).norm();
    out.interior_exact_zero = std::none_of(exact_nz.begin(), exact_nz.end() - 1, [](bool b) { return b; });
    out.edge_exact_zero = !exact_nz.back();
    return out;
}

}  // namespace

QuadraticSurd podles_ck(Branch sign, const mpq_class& mu, const mpq_class& c, long k) {
    return ck_from(podles_lambda(sign, c), pow_q(mu * mu, k), c);
}

MatrixRep build_rep(Branch sign, const mpq_class& mu, const mpq_class& c, int dim) {
    if (!(mu > 0 && mu < 1)) throw DomainError("mu must lie in (0, 1), got " + mu.get_str());
    if (c < 0) throw DomainError("c must be >= 0, got " + c.get_str());
    if (sign == Branch::minus && c == 0) throw DomainError("the minus branch requires c > 0");
    if (dim < 2) throw DomainError("dimension must be at least 2");

    MatrixRep rep;
    rep.sign = sign;
    rep.mu = mu;
    rep.c = c;
    rep.dim = dim;
    rep.lambda = podles_lambda(sign, c);
    const mpq_class mu2 = mu * mu;
    mpq_class mu2k = 1;
    for (int k = 0; k <= dim; ++k) {
        if (k < dim) rep.a.push_back(rep.lambda * QuadraticSurd(mu2k));
        rep.ck.push_back(ck_from(rep.lambda, mu2k, c));
        if (rep.ck.back().sign() < 0)
            throw DomainError("c(" + std::to_string(k) + ") is negative on the " + branch_name(sign) + " branch");
        mu2k *= mu2;
    }
    for (int k = 0; k < dim; ++k) rep.basis.push_back("f" + std::to_string(k));

    rep.A = Eigen::MatrixXcd::Zero(dim, dim);
    rep.B = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) rep.A(k, k) = rep.a[k].to_double();
    for (int k = 1; k < dim; ++k) rep.B(k - 1, k) = std::sqrt(rep.ck[k].to_double());
    rep.Bs = rep.B.adjoint();
    const std::complex<double> i(0, 1);
    rep.e0 = 2.0 * rep.A - Eigen::MatrixXcd::Identity(dim, dim);
    rep.e_plus = i * rep.B;
    rep.e_minus = -i * rep.Bs;
    return rep;
}

ExactMatrix exact_a(const MatrixRep& rep) { return diagonal(rep.a, rep.dim); }

ExactMatrix exact_shift(int dim) {
    ExactMatrix s(dim, dim);
    std::vector<Triplet> t;
    for (int k = 1; k < dim; ++k) t.emplace_back(k - 1, k, QuadraticSurd(1));
    s.setFromTriplets(t.begin(), t.end());
    return s;
}

bool ResidualReport::interior_zero() const {
    return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.interior_exact_zero; });
}

const RelationResidual& ResidualReport::at(const std::string& relation) const {
    for (const auto& r : relations)
        if (r.relation == relation) return r;
    throw UsageError("no residual for relation '" + relation + "'");
}

ResidualReport relation_residuals(const MatrixRep& rep) {
    const int n = rep.dim;
    const QuadraticSurd mu2(rep.mu * rep.mu), cq(rep.c);
    const ExactMatrix A = exact_a(rep);
    const ExactMatrix S = exact_shift(n);
    const ExactMatrix St = S.transpose();
    const ExactMatrix I = diagonal(std::vector<QuadraticSurd>(n, QuadraticSurd(1)), n);
    const ExactMatrix C = diagonal(std::vector<QuadraticSurd>(rep.ck.begin(), rep.ck.begin() + n), n);
    const ExactMatrix A2 = A * A;

    ResidualReport report;
    const Eigen::MatrixXcd& fA = rep.A;
    const Eigen::MatrixXcd& fB = rep.B;
    const Eigen::MatrixXcd& fBs = rep.Bs;
    const Eigen::MatrixXcd fI = Eigen::MatrixXcd::Identity(n, n);
    const double m2 = mu2.to_double(), c = rep.c.get_d();

    {
        // BA - mu^2 AB = (SA - mu^2 AS) D with D = diag(c(k)^{1/2})
        const ExactMatrix R = ExactMatrix(S * A) - ExactMatrix(A * S) * mu2;
        std::vector<bool> nz = nonzero_columns(R);
        for (int j = 0; j < n; ++j) nz[j] = nz[j] && !rep.ck[j].is_zero();
        report.relations.push_back(residual_entry("B*A - mu^2*A*B", fB * fA - m2 * fA * fB, nz));
    }
    {
        // B*B = D S^T S D; S^T S is diagonal so this is diag(c(k)) S^T S
        const ExactMatrix StS = St * S;
        std::vector<bool> offdiag(n, false);
        for (int j = 0; j < StS.outerSize(); ++j)
            for (ExactMatrix::InnerIterator it(StS, j); it; ++it)
                if (it.row() != it.col() && !it.value().is_zero()) offdiag[it.col()] = true;
        const ExactMatrix R = ExactMatrix(C * StS) - (A - A2 + I * cq);
        std::vector<bool> nz = nonzero_columns(R);
        for (int j = 0; j < n; ++j) nz[j] = nz[j] || offdiag[j];
        report.relations.push_back(residual_entry("Bs*B - (A - A^2 + c)", fBs * fB - (fA - fA * fA + c * fI), nz));
    }
    {
        const ExactMatrix R = ExactMatrix(ExactMatrix(S * C) * St) - (A * mu2 - A2 * (mu2 * mu2) + I * cq);
        report.relations.push_back(residual_entry("B*Bs - (mu^2*A - mu^4*A^2 + c)",
                                                  fB * fBs - (m2 * fA - m2 * m2 * fA * fA + c * fI),
                                                  nonzero_columns(R)));
    }
    {
        const ExactMatrix R = A - ExactMatrix(A.transpose());
        report.relations.push_back(residual_entry("A - A*", fA - fA.adjoint(), nonzero_columns(R)));
    }
    return report;
}

std::vector<double> spectrum(const MatrixRep& rep) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.A, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

std::vector<QuadraticSurd> spectrum_exact(const MatrixRep& rep) {
    std::vector<QuadraticSurd> ev = rep.a;
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

std::array<double, 3> classical_point(const mpq_class& c, double theta, double psi) {
    if (c <= mpq_class(-1, 4)) throw DomainError("c must exceed -1/4");
    const double s = std::sqrt(mpq_class(c + mpq_class(1, 4)).get_d());
    const std::complex<double> i(0, 1);
    const std::complex<double> e0 = 2.0 * s * std::cos(theta);
    const std::complex<double> ep = i * s * std::sin(theta) * std::exp(i * psi);
    const std::complex<double> em = -i * s * std::sin(theta) * std::exp(-i * psi);
    // x1 + i x2 = -i e+, x1 - i x2 = i e-
    const std::complex<double> zp = -i * ep, zm = i * em;
    return {((zp + zm) / 2.0).real(), ((zp - zm) / (2.0 * i)).real(), (e0 / 2.0).real()};
}

double classical_embedding_check(const mpq_class& c, int samples, std::uint64_t seed) {
    if (c <= mpq_class(-1, 4)) throw DomainError("c must exceed -1/4");
    if (samples < 1) throw UsageError("at least one sample is required");
    const double r2 = mpq_class(c + mpq_class(1, 4)).get_d();
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> th(0, std::numbers::pi), ph(0, 2 * std::numbers::pi);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        const double theta = th(gen), psi = ph(gen);
        const auto x = classical_point(c, theta, psi);
        worst = std::max(worst, std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - r2));
    }
    return worst;
}

QuadraticSurd radius(const mpq_class& c) {
    if (c <= mpq_class(-1, 4)) throw DomainError("c must exceed -1/4");
    return QuadraticSurd(0, mpq_class(1, 2), 4 * c + 1);
}

}  // namespace hopflab
