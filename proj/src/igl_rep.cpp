#include "hopflab/igl_rep.hpp"

#include <cmath>
#include <numbers>

namespace hopflab {

using cd = std::complex<double>;

LogGrid::LogGrid(double xi_min_, double ratio_, int size_) : xi_min(xi_min_), ratio(ratio_), size(size_) {
    if (!(xi_min > 0)) throw DomainError("grid origin must be positive");
    if (!(ratio > 1)) throw DomainError("grid ratio must exceed 1");
    if (size < 1) throw DomainError("grid needs at least one node");
}

double LogGrid::node(int j) const { return xi_min * std::pow(ratio, j); }

double LogGrid::log_step() const { return std::log(ratio); }

Eigen::VectorXd LogGrid::nodes() const {
    Eigen::VectorXd x(size);
    for (int j = 0; j < size; ++j) x(j) = node(j);
    return x;
}

LogGrid LogGrid::refined() const { return LogGrid(xi_min, std::sqrt(ratio), 2 * size - 1); }

LogGrid default_grid() { return LogGrid(0.0625, std::exp2(1.0 / 32), 256); }

GridFunction sample(const LogGrid& grid, const std::function<cd(double)>& f) {
    GridFunction g{grid, Eigen::VectorXcd(grid.size), false};
    for (int j = 0; j < grid.size; ++j) g.values(j) = f(grid.node(j));
    return g;
}

std::complex<double> inner(const GridFunction& f, const GridFunction& g) {
    if (f.values.size() != g.values.size()) throw UsageError("grid functions live on different grids");
    return f.grid.log_step() * f.values.dot(g.values);
}

double norm(const GridFunction& f) { return std::sqrt(f.grid.log_step()) * f.values.norm(); }

GridFunction act(double lambda, const GroupElt2<double>& g, const GridFunction& phi) {
    if (!(g.a > 0)) throw DomainError("dilatation parameter must be positive");
    const LogGrid& grid = phi.grid;
    const int n = grid.size;
    const double m = std::log(g.a) / grid.log_step();
    const double mr = std::round(m);
    const bool lattice = std::abs(m - mr) < kLatticeTolerance;
    GridFunction out{grid, Eigen::VectorXcd::Zero(n), phi.interpolated || !lattice};
    auto at = [&](long k) { return k >= 0 && k < n ? phi.values(k) : cd(0); };
    for (int j = 0; j < n; ++j) {
        cd v;
        if (lattice) {
            v = at(j + static_cast<long>(mr));
        } else {
            const double p = j + m;
            const double f = std::floor(p);
            const double w = p - f;
            v = (1 - w) * at(static_cast<long>(f)) + w * at(static_cast<long>(f) + 1);
        }
        if (v != cd(0)) out.values(j) = std::polar(1.0, lambda * g.b * grid.node(j)) * v;
    }
    return out;
}

namespace {

long commensurate_index(double period, double lambda) {
    if (!(period > 0)) throw UsageError("period must be positive");
    const double k = lambda * period / (2 * std::numbers::pi);
    const double kr = std::round(k);
    if (std::abs(k - kr) > 1e-9 * std::max(1.0, std::abs(k)))
        throw UsageError("lambda is not commensurate with the period");
    return static_cast<long>(kr);
}

// exp(2 pi i k m / nb) with the exponent reduced exactly modulo nb.
cd root_of_unity(long k, long m, long nb) {
    long e = (k % nb) * (m % nb) % nb;
    if (e < 0) e += nb;
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(nb));
}

}  // namespace

Eigen::MatrixXcd sector_project(const Eigen::MatrixXcd& samples, double period, double lambda) {
    const long nb = samples.rows();
    if (nb < 1) throw UsageError("no b samples");
    const long k = commensurate_index(period, lambda);
    const double w = period / static_cast<double>(nb);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nb, samples.cols());
    for (long n = 0; n < nb; ++n)
        for (long m = 0; m < nb; ++m) out.row(n) += (w * root_of_unity(-k, m, nb)) * samples.row((n + m) % nb);
    return out;
}

double sector_covariance_residual(const Eigen::MatrixXcd& projected, double period, double lambda, int shift) {
    const long nb = projected.rows();
    const long k = commensurate_index(period, lambda);
    const cd phase = root_of_unity(k, shift, nb);
    double worst = 0;
    for (long n = 0; n < nb; ++n) {
        const long moved = ((n + shift) % nb + nb) % nb;
        worst = std::max(worst, (projected.row(moved) - phase * projected.row(n)).cwiseAbs().maxCoeff());
    }
    return worst;
}

Eigen::MatrixXcd OperatorPair::dense_x0() const { return Eigen::MatrixXcd(X0); }

Eigen::MatrixXcd OperatorPair::dense_x1() const { return x1.cast<cd>().asDiagonal(); }

OperatorPair position_operators(double lambda, double kappa, const LogGrid& grid) {
    if (grid.size < 3) throw UsageError("position operators need at least three nodes");
    OperatorPair ops;
    ops.grid = grid;
    ops.lambda = lambda;
    ops.kappa = kappa;
    const int n = grid.size;
    const cd c = cd(0, kappa) / (2 * grid.log_step());
    std::vector<Eigen::Triplet<cd>> t;
    for (int j = 0; j < n; ++j) {
        if (j + 1 < n) t.emplace_back(j, j + 1, c);
        if (j > 0) t.emplace_back(j, j - 1, -c);
    }
    ops.X0.resize(n, n);
    ops.X0.setFromTriplets(t.begin(), t.end());
    ops.x1 = -kappa * lambda * grid.nodes();
    return ops;
}

Eigen::VectorXd x1_spectrum(const OperatorPair& ops) {
    Eigen::VectorXd ev = ops.x1;
    std::sort(ev.data(), ev.data() + ev.size());
    return ev;
}

GridFunction commutator_probe(const LogGrid& grid) {
    const double t0 = std::log(grid.xi_min);
    const double span = (grid.size - 1) * grid.log_step();
    const double centre = t0 + span / 2, width = span / 12;
    return sample(grid, [&](double xi) {
        const double u = (std::log(xi) - centre) / width;
        return cd(std::exp(-0.5 * u * u), 0);
    });
}

double commutator_residual(const OperatorPair& ops) {
    const GridFunction probe = commutator_probe(ops.grid);
    const Eigen::VectorXcd& phi = probe.values;
    const Eigen::VectorXcd x1 = ops.x1.cast<cd>();
    const Eigen::VectorXcd x1phi = x1.cwiseProduct(phi);
    const Eigen::VectorXcd r =
        ops.X0 * x1phi - x1.cwiseProduct(ops.X0 * phi) - cd(0, ops.kappa) * x1phi;
    const int n = ops.grid.size;
    const double num = r.segment(1, n - 2).norm(), den = phi.segment(1, n - 2).norm();
    return num / den;
}

ConvergenceStudy convergence_order(const std::vector<OperatorPair>& pairs) {
    if (pairs.size() < 2) throw UsageError("convergence order needs at least two grids");
    ConvergenceStudy s;
    for (const auto& p : pairs) {
        s.h.push_back(p.grid.log_step());
        s.residual.push_back(commutator_residual(p));
    }
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k)
        s.order.push_back(std::log(s.residual[k] / s.residual[k + 1]) / std::log(s.h[k] / s.h[k + 1]));
    // slope of log residual against log h
    double mx = 0, my = 0;
    const double n = static_cast<double>(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        mx += std::log(s.h[k]) / n;
        my += std::log(s.residual[k]) / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const double dx = std::log(s.h[k]) - mx;
        sxy += dx * (std::log(s.residual[k]) - my);
        sxx += dx * dx;
    }
    s.fitted_order = sxy / sxx;
    return s;
}

std::vector<OperatorPair> refinement_sequence(double lambda, double kappa, const LogGrid& grid, int refinements) {
    if (refinements < 0) throw UsageError("refinement count must be nonnegative");
    std::vector<OperatorPair> out;
    LogGrid g = grid;
    for (int k = 0; k <= refinements; ++k) {
        out.push_back(position_operators(lambda, kappa, g));
        g = g.refined();
    }
    return out;
}

}  // namespace hopflab
