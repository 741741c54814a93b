#pragma once

// Exact numbers a + b*sqrt(d) with rational a, b, d. Values with different
// radicands only mix when one of them is rational.

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>

namespace hopflab {

class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(int v) : a_(v) {}
    QuadraticSurd(const mpq_class& v) : a_(v) {}
    /// a + b*sqrt(d), d >= 0; folded to a rational when d is a rational square.
    QuadraticSurd(const mpq_class& a, const mpq_class& b, const mpq_class& d);

    static QuadraticSurd sqrt(const mpq_class& d) { return QuadraticSurd(0, 1, d); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    const mpq_class& radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /// -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;
    std::string str() const;

    QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_, Raw{}); }
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o);
    friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
    friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
    friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
    friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x == y); }
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(y < x); }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x < y); }

private:
    struct Raw {};
    QuadraticSurd(mpq_class a, mpq_class b, mpq_class d, Raw) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
    const mpq_class& common_radicand(const QuadraticSurd& o) const;

    mpq_class a_;
    mpq_class b_;
    mpq_class d_;  // meaningful only when b_ != 0
};

/// Square root of x when it is a rational square.
std::optional<mpq_class> rational_sqrt(const mpq_class& x);
std::optional<QuadraticSurd> exact_sqrt(const QuadraticSurd& x);

}  // namespace hopflab

namespace Eigen {

template <>
struct NumTraits<hopflab::QuadraticSurd> : GenericNumTraits<hopflab::QuadraticSurd> {
    typedef hopflab::QuadraticSurd Real;
    typedef hopflab::QuadraticSurd NonInteger;
    typedef hopflab::QuadraticSurd Literal;
    typedef hopflab::QuadraticSurd Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
