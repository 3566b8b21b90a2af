#include "qwalk/polynomial.hpp"

#include "qwalk/errors.hpp"

#include <algorithm>

namespace qwalk {

char var_name(Var v) { return v == Var::z ? 'z' : 't'; }

Polynomial::Polynomial(std::vector<Rational> coeffs, Var v) : coeffs_(std::move(coeffs)), var_(v) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs, Var v) : var_(v) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(Rational c, Var v) { return Polynomial(std::vector<Rational>{std::move(c)}, v); }

Polynomial Polynomial::monomial(Rational c, unsigned degree, Var v) {
    std::vector<Rational> cs(degree + 1);
    cs[degree] = std::move(c);
    return Polynomial(std::move(cs), v);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_var(const Polynomial& o) const {
    // A zero or constant polynomial is variable-agnostic.
    if (var_ != o.var_ && !o.is_constant() && !is_constant())
        throw DomainError(std::string("polynomial variable mismatch: ") + var_name(var_) + " vs " +
                          var_name(o.var_));
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_var(o);
    if (is_constant() && !o.is_constant()) var_ = o.var_;
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    check_var(o);
    if (is_constant() && !o.is_constant()) var_ = o.var_;
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[i + k] += coeffs_[i] * o.coeffs_[k];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * Rational(static_cast<std::int64_t>(i)));
    return Polynomial(std::move(out), var_);
}

Polynomial Polynomial::shifted(unsigned k) const {
    if (is_zero()) return *this;
    std::vector<Rational> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out), var_);
}

Polynomial Polynomial::substitute_square(Var to) const {
    if (is_zero()) return Polynomial(to);
    std::vector<Rational> out(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return Polynomial(std::move(out), to);
}

Polynomial Polynomial::with_var(Var v) const {
    Polynomial r = *this;
    r.var_ = v;
    return r;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::pair<Rational, Polynomial> Polynomial::primitive_part() const {
    if (is_zero()) return {Rational(0), *this};
    BigInt den = 1;
    for (const auto& c : coeffs_) den = lcm(den, c.denominator());
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.numerator() * (den / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(g, den);
    if (lc().sign() < 0) scale = -scale;
    Polynomial prim = *this;
    prim *= scale.inverse();
    return {scale, prim};
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    const char x = var_name(var_);
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (i == 0 || !unit) out += mag.str();
        if (i >= 1) out += x;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Var v = a.is_constant() ? b.var() : a.var();
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    const int db = b.degree();
    const Rational lead_inv = b.lc().inverse();
    std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    for (int i = a.degree(); i >= db; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Rational f = top * lead_inv;
        for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(i - db + k)] -= f * b.coeff(k);
        quot[static_cast<std::size_t>(i - db)] = std::move(f);
    }
    return {Polynomial(std::move(quot), v), Polynomial(std::move(rem), v)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.lc().inverse();
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) return Rational(0);

    const unsigned m = static_cast<unsigned>(p.degree());
    const unsigned n = static_cast<unsigned>(q.degree());
    if (n == 0) return q.lc().pow(m);
    if (m == 0) return p.lc().pow(n);

    const Rational sign = ((m * n) % 2 == 0) ? Rational(1) : Rational(-1);
    if (m < n) return sign * resultant(q, p);

    Polynomial r = divmod(p, q).second;
    if (r.is_zero()) return Rational(0);
    return sign * q.lc().pow(m - static_cast<unsigned>(r.degree())) * resultant(q, r);
}

Rational discriminant(const Polynomial& p) {
    if (p.degree() < 1) throw DomainError("discriminant needs degree >= 1");
    const unsigned n = static_cast<unsigned>(p.degree());
    Rational r = resultant(p, p.derivative()) / p.lc();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

}  // namespace qwalk
