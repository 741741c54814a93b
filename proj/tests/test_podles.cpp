#include <doctest.h>

#include <cmath>

#include "hopflab/errors.hpp"
#include "hopflab/podles_rep.hpp"

using namespace hopflab;

namespace {

// Plain double construction of the truncated representation, used as an oracle.
struct Oracle {
    Eigen::MatrixXd A, B;
};

Oracle oracle(double sign, double mu, double c, int n) {
    const double lambda = 0.5 + sign * std::sqrt(c + 0.25);
    Oracle o{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    for (int k = 0; k < n; ++k) {
        const double a = lambda * std::pow(mu, 2 * k);
        o.A(k, k) = a;
        if (k > 0) o.B(k - 1, k) = std::sqrt(a - a * a + c);
    }
    return o;
}

}  // namespace

TEST_CASE("lambda solves lambda - lambda^2 + c = 0") {
    for (const mpq_class c : {mpq_class(0), mpq_class(2), mpq_class(3, 4), mpq_class(1, 7)})
        for (Branch b : {Branch::plus, Branch::minus}) {
            const QuadraticSurd l = podles_lambda(b, c);
            CHECK((l - l * l + QuadraticSurd(c)).is_zero());
            CHECK(podles_ck(b, mpq_class(1, 2), c, 0).is_zero());
        }
    CHECK(podles_lambda(Branch::plus, 2) == QuadraticSurd(mpq_class(2)));
    CHECK(podles_lambda(Branch::minus, 2) == QuadraticSurd(mpq_class(-1)));
    CHECK(podles_lambda(Branch::plus, 0) == QuadraticSurd(mpq_class(1)));
    CHECK(parse_branch("+") == Branch::plus);
    CHECK(parse_branch("minus") == Branch::minus);
    CHECK_THROWS_AS(parse_branch("x"), UsageError);
}

TEST_CASE("matrices agree with a direct construction") {
    const MatrixRep r = build_rep(Branch::plus, mpq_class(3, 5), mpq_class(1, 3), 12);
    const Oracle o = oracle(1, 0.6, 1.0 / 3, 12);
    CHECK((r.A.real() - o.A).norm() < 1e-13);
    CHECK((r.B.real() - o.B).norm() < 1e-13);
    CHECK(r.A.imag().norm() == 0);
    CHECK((r.Bs - r.B.adjoint()).norm() == 0);
    CHECK((r.e0 - (2.0 * r.A - Eigen::MatrixXcd::Identity(12, 12))).norm() < 1e-14);
    CHECK(r.basis.front() == "f0");
    CHECK(r.basis.back() == "f11");
}

TEST_CASE("relations hold exactly on the interior") {
    for (const mpq_class mu : {mpq_class(1, 2), mpq_class(9, 10)})
        for (const mpq_class c : {mpq_class(0), mpq_class(1, 5), mpq_class(2)})
            for (Branch b : {Branch::plus, Branch::minus}) {
                if (b == Branch::minus && c == 0) continue;
                INFO(mu.get_str() << " " << c.get_str() << " " << branch_name(b));
                const MatrixRep r = build_rep(b, mu, c, 16);
                const ResidualReport rep = relation_residuals(r);
                CHECK(rep.interior_zero());
                for (const auto& x : rep.relations) CHECK(x.interior < 1e-12);
                // only B B* sees the truncation, through the missing c(N)
                CHECK(rep.at("B*A - mu^2*A*B").edge_exact_zero);
                CHECK(rep.at("A - A*").edge_exact_zero);
                CHECK(rep.at("Bs*B - (A - A^2 + c)").edge_exact_zero);
                CHECK_FALSE(rep.at("B*Bs - (mu^2*A - mu^4*A^2 + c)").edge_exact_zero);
                CHECK(std::abs(rep.at("B*Bs - (mu^2*A - mu^4*A^2 + c)").edge - r.ck[16].to_double()) < 1e-12);
            }
}

TEST_CASE("independent residual of B*B against the oracle") {
    const Oracle o = oracle(-1, 0.5, 0.75, 10);
    const double c = 0.75, mu2 = 0.25;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(10, 10);
    const Eigen::MatrixXd r1 = o.B.transpose() * o.B - (o.A - o.A * o.A + c * I);
    const Eigen::MatrixXd r2 = o.B * o.A - mu2 * o.A * o.B;
    CHECK(r1.norm() < 1e-13);
    CHECK(r2.norm() < 1e-13);
}

TEST_CASE("spectrum") {
    const MatrixRep r = build_rep(Branch::plus, mpq_class(1, 2), mpq_class(3, 4), 20);
    const auto s = spectrum(r);
    const auto e = spectrum_exact(r);
    REQUIRE(s.size() == 20);
    for (int k = 0; k < 20; ++k) {
        CHECK(std::abs(s[k] - 1.5 * std::pow(0.25, k)) < 1e-12);
        CHECK(e[k].is_rational());
    }
    CHECK(e[0] == QuadraticSurd(mpq_class(3, 2)));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(build_rep(Branch::plus, 1, 0, 4), DomainError);
    CHECK_THROWS_AS(build_rep(Branch::plus, 0, 0, 4), DomainError);
    CHECK_THROWS_AS(build_rep(Branch::plus, mpq_class(1, 2), -1, 4), DomainError);
    CHECK_THROWS_AS(build_rep(Branch::plus, mpq_class(1, 2), 0, 1), DomainError);
    CHECK_THROWS_AS(build_rep(Branch::minus, mpq_class(1, 2), 0, 4), DomainError);
}

TEST_CASE("classical embedding") {
    CHECK(classical_embedding_check(mpq_class(2), 500) < 1e-12);
    CHECK(classical_embedding_check(mpq_class(1, 3), 500) < 1e-12);
    CHECK(radius(2) == QuadraticSurd(mpq_class(3, 2)));
    CHECK_FALSE(radius(1).is_rational());
    const auto p = classical_point(mpq_class(2), 0, 0);
    CHECK(std::abs(p[2] - 1.5) < 1e-15);
}
