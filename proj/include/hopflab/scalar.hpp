#pragma once

// Exact coefficients: Gaussian rationals, multivariate polynomials over them,
// and reduced rational functions in named real parameters (kappa, mu, c, ...).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hopflab {

/// p + q*i with p, q rational.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(int v) : re_(v) {}
    GaussRat(long v) : re_(v) {}
    GaussRat(mpq_class re, mpq_class im = 0);

    static GaussRat imaginary_unit() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat inverse() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

/// Sparse monomial: (variable name, exponent > 0), sorted by name.
using Monomial = std::vector<std::pair<std::string, int>>;

/// Lexicographic order with variables ranked by name (earlier name = larger variable).
int lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

class MPoly {
public:
    using Terms = std::map<Monomial, GaussRat, LexGreater>;

    MPoly() = default;
    MPoly(const GaussRat& c);
    MPoly(int c) : MPoly(GaussRat(c)) {}

    static MPoly variable(const std::string& name, int power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat constant_value() const;
    std::size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const GaussRat& leading_coefficient() const { return terms_.begin()->second; }

    std::set<std::string> variables() const;
    int degree_in(const std::string& var) const;
    /// Coefficients as a polynomial in `var`: degree -> coefficient free of `var`.
    std::map<int, MPoly> coefficients_in(const std::string& var) const;

    /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
    std::optional<MPoly> divide_exact(const MPoly& divisor) const;
    MPoly monic() const;
    MPoly conj() const;
    MPoly substitute(const std::string& var, const GaussRat& value) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    void add_term(const Monomial& m, const GaussRat& c);

    std::string str() const;

private:
    Terms terms_;
};

/// Monic greatest common divisor over Q(i)[vars]; gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Reduced ratio num/den of polynomials. Canonical: gcd(num, den) = 1 and the
/// lex-leading coefficient of den is 1, so equality is syntactic.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(int v) : num_(GaussRat(v)), den_(1) {}
    Scalar(const GaussRat& v) : num_(v), den_(1) {}
    Scalar(const MPoly& p) : num_(p), den_(1) {}

    static Scalar fraction(const MPoly& num, const MPoly& den);
    static Scalar param(const std::string& name) { return Scalar(MPoly::variable(name)); }
    static Scalar imaginary_unit() { return Scalar(GaussRat::imaginary_unit()); }
    static Scalar rational(const mpq_class& q) { return Scalar(GaussRat(q)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const;
    std::set<std::string> variables() const;

    Scalar conj() const;
    Scalar inverse() const;
    /// Bind `var` to `value`; throws DomainError when the denominator vanishes.
    Scalar substitute(const std::string& var, const GaussRat& value) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// True when the printed form starts with a minus sign that can be factored out.
    bool negative_leading() const;
    std::string str() const;
    /// Printed form safe to use as the left factor of a product.
    std::string factor_str() const;

private:
    void canonicalize();

    MPoly num_;
    MPoly den_;
};

}  // namespace hopflab
