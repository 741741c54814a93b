#include "hopflab/scalar.hpp"

#include <algorithm>

#include "hopflab/errors.hpp"

namespace hopflab {

// ---------------------------------------------------------------- GaussRat

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussRat::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    mpq_class a = abs(im_);
    imag = (a == 1) ? "i" : a.get_str() + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return "(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag + ")";
}

// ---------------------------------------------------------------- monomials

int lex_compare(const Monomial& a, const Monomial& b) {
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first ? 1 : -1;
        if (a[i].second != b[i].second) return a[i].second > b[i].second ? 1 : -1;
    }
    if (i < a.size()) return 1;
    if (i < b.size()) return -1;
    return 0;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// a / b if b divides a.
std::optional<Monomial> monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [var, e] : b) {
        while (i < a.size() && a[i].first < var) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != var || a[i].second < e) return std::nullopt;
        if (a[i].second > e) out.emplace_back(var, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

}  // namespace

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (const auto& [var, e] : m) {
        if (!out.empty()) out += "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const GaussRat& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(const std::string& name, int power) {
    MPoly p;
    if (power == 0) return MPoly(1);
    p.terms_.emplace(Monomial{{name, power}}, GaussRat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussRat MPoly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    if (!is_constant()) throw UsageError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::set<std::string> MPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m) out.insert(var);
    return out;
}

int MPoly::degree_in(const std::string& var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) d = std::max(d, e);
    return d;
}

std::map<int, MPoly> MPoly::coefficients_in(const std::string& var) const {
    std::map<int, MPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        int e = 0;
        for (const auto& entry : m) {
            if (entry.first == var)
                e = entry.second;
            else
                rest.push_back(entry);
        }
        out[e].add_term(rest, c);
    }
    return out;
}

void MPoly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    MPoly quotient;
    MPoly rest = *this;
    const Monomial& lm = divisor.leading_monomial();
    const GaussRat lc_inv = divisor.leading_coefficient().inverse();
    while (!rest.is_zero()) {
        auto q = monomial_quotient(rest.leading_monomial(), lm);
        if (!q) return std::nullopt;
        MPoly step;
        step.add_term(*q, rest.leading_coefficient() * lc_inv);
        quotient += step;
        rest -= step * divisor;
    }
    return quotient;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    const GaussRat inv = leading_coefficient().inverse();
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c *= inv;
    return out;
}

MPoly MPoly::conj() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = c.conj();
    return out;
}

MPoly MPoly::substitute(const std::string& var, const GaussRat& value) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        GaussRat factor = c;
        for (const auto& [v, e] : m) {
            if (v == var) {
                for (int k = 0; k < e; ++k) factor *= value;
            } else {
                rest.emplace_back(v, e);
            }
        }
        out.add_term(rest, factor);
    }
    return out;
}

namespace {

bool coefficient_negative(const GaussRat& c) {
    return (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

// Term magnitude for printing; the caller handles the sign.
std::string term_str(const GaussRat& c, const Monomial& m) {
    std::string coeff;
    if (c.is_real()) {
        mpq_class a = abs(c.re());
        if (!(a == 1) || m.empty()) coeff = a.get_str();
    } else if (sgn(c.re()) == 0) {
        mpq_class a = abs(c.im());
        coeff = (a == 1) ? "i" : a.get_str() + "*i";
    } else {
        coeff = c.str();
    }
    if (m.empty()) return coeff;
    return coeff.empty() ? monomial_str(m) : coeff + "*" + monomial_str(m);
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = coefficient_negative(c);
        const std::string body = term_str(neg ? -c : c, m);
        if (first)
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- gcd

namespace {

MPoly primitive_part(const MPoly& p, const std::string& var);

MPoly content(const MPoly& p, const std::string& var) {
    MPoly g;
    for (const auto& [deg, coeff] : p.coefficients_in(var)) {
        g = gcd(g, coeff);
        if (g.is_constant() && !g.is_zero()) return MPoly(1);
    }
    return g;
}

MPoly primitive_part(const MPoly& p, const std::string& var) {
    if (p.is_zero()) return p;
    MPoly c = content(p, var);
    return p.divide_exact(c).value().monic();
}

MPoly pseudo_remainder(MPoly a, const MPoly& b, const std::string& var) {
    const int db = b.degree_in(var);
    const MPoly lcb = b.coefficients_in(var).rbegin()->second;
    while (!a.is_zero()) {
        const int da = a.degree_in(var);
        if (da < db) break;
        MPoly lca = a.coefficients_in(var).rbegin()->second;
        a = lcb * a - lca * MPoly::variable(var, da - db) * b;
    }
    return a;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a.size() == 1 && b.size() == 1) {
        // monomial gcd: minimum exponents
        Monomial m;
        const Monomial& ma = a.leading_monomial();
        const Monomial& mb = b.leading_monomial();
        std::size_t j = 0;
        for (const auto& [var, e] : ma) {
            while (j < mb.size() && mb[j].first < var) ++j;
            if (j < mb.size() && mb[j].first == var) m.emplace_back(var, std::min(e, mb[j].second));
        }
        MPoly out;
        out.add_term(m, GaussRat(1));
        return out;
    }
    auto va = a.variables();
    auto vb = b.variables();
    std::set<std::string> all = va;
    all.insert(vb.begin(), vb.end());
    const std::string var = *all.begin();
    if (!va.count(var)) return gcd(a, content(b, var));
    if (!vb.count(var)) return gcd(content(a, var), b);

    const MPoly ca = content(a, var);
    const MPoly cb = content(b, var);
    const MPoly g = gcd(ca, cb);
    MPoly pa = a.divide_exact(ca).value();
    MPoly pb = b.divide_exact(cb).value();
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = pseudo_remainder(pa, pb, var);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_part(r, var);
    }
    if (pa.degree_in(var) == 0) return g.monic();
    return (g * primitive_part(pa, var)).monic();
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::fraction(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DomainError("zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divide_exact(g).value();
            den_ = den_.divide_exact(g).value();
        }
    }
    const GaussRat lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const GaussRat inv = lc.inverse();
        num_ = num_ * MPoly(inv);
        den_ = den_ * MPoly(inv);
    }
}

GaussRat Scalar::constant_value() const {
    if (!is_constant()) throw UsageError("scalar is not constant: " + str());
    return num_.constant_value() / den_.constant_value();
}

std::set<std::string> Scalar::variables() const {
    auto out = num_.variables();
    auto d = den_.variables();
    out.insert(d.begin(), d.end());
    return out;
}

Scalar Scalar::conj() const { return fraction(num_.conj(), den_.conj()); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero scalar");
    return fraction(den_, num_);
}

Scalar Scalar::substitute(const std::string& var, const GaussRat& value) const {
    MPoly d = den_.substitute(var, value);
    if (d.is_zero())
        throw DomainError("binding " + var + " = " + value.str() + " makes a denominator vanish: " + den_.str());
    return fraction(num_.substitute(var, value), d);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) canonicalize();
        else if (num_.is_zero()) den_ = MPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!den_.is_constant() || num_.is_zero()) canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::negative_leading() const {
    if (num_.is_zero()) return false;
    return coefficient_negative(num_.leading_coefficient());
}

std::string Scalar::str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
    const bool simple_den = den_.size() == 1 && den_.leading_coefficient().is_one() &&
                            den_.leading_monomial().size() == 1;
    std::string d = simple_den ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

std::string Scalar::factor_str() const {
    if (den_.is_constant() && num_.size() > 1) return "(" + num_.str() + ")";
    return str();
}

}  // namespace hopflab
