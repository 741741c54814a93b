#include "hopflab/quadratic_surd.hpp"

#include <cmath>

#include "hopflab/errors.hpp"

namespace hopflab {

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (x < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

QuadraticSurd::QuadraticSurd(const mpq_class& a, const mpq_class& b, const mpq_class& d) : a_(a), b_(b), d_(d) {
    if (d_ < 0) throw DomainError("negative radicand");
    if (b_ == 0) {
        d_ = 0;
    } else if (auto r = rational_sqrt(d_)) {
        a_ += b_ * *r;
        b_ = 0;
        d_ = 0;
    }
}

const mpq_class& QuadraticSurd::common_radicand(const QuadraticSurd& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_) throw UsageError("mixing square roots of different radicands");
    return b_ != 0 ? d_ : o.d_;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    d_ = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
    d_ = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    if (is_zero() || o.is_zero()) return *this = QuadraticSurd();
    if (o.b_ == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
        return *this;
    }
    if (b_ == 0) {
        const mpq_class a = a_;
        a_ = a * o.a_;
        b_ = a * o.b_;
        d_ = o.d_;
        return *this;
    }
    d_ = common_radicand(o);
    const mpq_class a = a_ * o.a_ + b_ * o.b_ * d_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.b_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    // (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); nonzero because d is not a square.
    const mpq_class norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    *this *= QuadraticSurd(o.a_ / norm, -o.b_ / norm, o.d_, Raw{});
    return *this;
}

int QuadraticSurd::sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    const int c = cmp(a_ * a_, b_ * b_ * d_);
    return c > 0 ? sa : c < 0 ? sb : 0;
}

double QuadraticSurd::to_double() const {
    if (b_ == 0) return a_.get_d();
    const double s = std::sqrt(d_.get_d());
    const double r = a_.get_d() + b_.get_d() * s;
    // Cancellation guard: use (a^2 - b^2 d) / (a - b sqrt d) when the terms nearly cancel.
    if (sgn(a_) * sgn(b_) < 0) {
        const double alt = mpq_class(a_ * a_ - b_ * b_ * d_).get_d() / (a_.get_d() - b_.get_d() * s);
        return alt;
    }
    return r;
}

std::string QuadraticSurd::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? "" : a_.get_str() + (b_ > 0 ? " + " : " - ");
    const mpq_class mag = a_ == 0 ? b_ : abs(b_);
    if (mag == -1) s += "-";
    else if (mag != 1) s += mag.get_str() + "*";
    return s + "sqrt(" + d_.get_str() + ")";
}

std::optional<QuadraticSurd> exact_sqrt(const QuadraticSurd& x) {
    if (!x.is_rational()) return std::nullopt;
    auto r = rational_sqrt(x.rational_part());
    if (!r) return std::nullopt;
    return QuadraticSurd(*r);
}

}  // namespace hopflab
