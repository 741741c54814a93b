#include <doctest.h>

#include <cmath>

#include "hopflab/errors.hpp"
#include "hopflab/quadratic_surd.hpp"
#include "hopflab/scalar.hpp"

using namespace hopflab;

TEST_CASE("gaussian rationals") {
    const GaussRat i = GaussRat::imaginary_unit();
    CHECK(i * i == GaussRat(-1));
    CHECK(GaussRat(mpq_class(1, 2), 1).conj() == GaussRat(mpq_class(1, 2), -1));
    CHECK((GaussRat(1, 1) / GaussRat(1, 1)).is_one());
    CHECK_THROWS_AS(GaussRat(0).inverse(), DomainError);
    CHECK(i.str() == "i");
}

TEST_CASE("polynomial gcd") {
    const MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    const MPoly one(GaussRat(1));
    const MPoly a = (x + one) * (x - y), b = (x + one) * (y + one);
    CHECK(gcd(a, b) == x + one);
    CHECK(gcd(x * y, x * x) == x);
    CHECK(gcd(a, MPoly(GaussRat(3))) == one);
}

TEST_CASE("scalars are canonical") {
    const Scalar k = Scalar::param("kappa"), m = Scalar::param("mu");
    const Scalar i = Scalar::imaginary_unit();
    CHECK((k * k - Scalar(1)) / (k - Scalar(1)) == k + Scalar(1));
    CHECK(Scalar(2) / (Scalar(2) * k) == Scalar(1) / k);
    CHECK((i / k) * k == i);
    CHECK((m / k).inverse() == k / m);
    CHECK((i * k).conj() == -(i * k));
    CHECK((k / (k - Scalar(1))).substitute("kappa", GaussRat(2)) == Scalar(2));
    CHECK_THROWS_AS((Scalar(1) / k).substitute("kappa", GaussRat(0)), DomainError);
    CHECK_THROWS_AS(Scalar(0).inverse(), DomainError);
    CHECK((Scalar(1) / k - Scalar(1) / k).is_zero());
}

TEST_CASE("scalar field laws on samples") {
    const Scalar k = Scalar::param("kappa"), c = Scalar::param("c");
    const Scalar i = Scalar::imaginary_unit();
    const std::vector<Scalar> xs{k, c + Scalar(1), i * k / (c - k), Scalar::rational(mpq_class(3, 7)) * c * c,
                                 (k + i) / (k * k + Scalar(1))};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - b) + b == a);
            CHECK((a * b) / b == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            for (const auto& d : xs) CHECK(a * (b + d) == a * b + a * d);
        }
}

TEST_CASE("quadratic surds") {
    const QuadraticSurd r5 = QuadraticSurd::sqrt(5);
    CHECK(r5 * r5 == QuadraticSurd(5));
    CHECK(QuadraticSurd::sqrt(mpq_class(9, 4)).is_rational());
    CHECK(QuadraticSurd::sqrt(mpq_class(9, 4)) == QuadraticSurd(mpq_class(3, 2)));
    const QuadraticSurd x(mpq_class(1, 2), 1, mpq_class(5, 4));
    CHECK((x / x) == QuadraticSurd(1));
    CHECK(x - x * x + QuadraticSurd(1) == QuadraticSurd(0));  // root of l - l^2 + 1
    CHECK(QuadraticSurd(mpq_class(1, 2), -1, 5).sign() < 0);
    CHECK(QuadraticSurd(3, -1, 5).sign() > 0);
    CHECK(std::abs(x.to_double() - (0.5 + std::sqrt(1.25))) < 1e-15);
    CHECK_THROWS_AS(r5 + QuadraticSurd::sqrt(3), UsageError);
    CHECK((r5 * QuadraticSurd(0)).is_zero());
}
