#pragma once

/*
 * Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficient i multiplies x^i. The zero polynomial is the empty sequence,
 * and a nonzero polynomial never carries a zero leading coefficient. Each
 * polynomial carries a variable tag; mixing tags in one operation is an
 * error, which catches z/t substitution slips early.
 *
 * Resultant convention: Res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a).
 * Discriminant convention: disc(p) = (-1)^(n(n-1)/2) / lc(p) * Res(p, p').
 */

#include "qwalk/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

enum class Var { z, t };

char var_name(Var v);

class Polynomial {
public:
    explicit Polynomial(Var v = Var::t) : var_(v) {}
    Polynomial(std::vector<Rational> coeffs, Var v);
    Polynomial(std::initializer_list<std::int64_t> coeffs, Var v);

    static Polynomial constant(Rational c, Var v);
    static Polynomial monomial(Rational c, unsigned degree, Var v);

    Var var() const { return var_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational lc() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative() const;
    /// p(x) * x^k.
    Polynomial shifted(unsigned k) const;
    /// p(t) -> p(z^2), retagged with `to`.
    Polynomial substitute_square(Var to) const;
    Polynomial with_var(Var v) const;

    bool has_integer_coefficients() const;

    /// Writes p = scale * prim, where prim has coprime integer coefficients
    /// and a positive leading coefficient. Zero maps to (0, zero).
    std::pair<Rational, Polynomial> primitive_part() const;

    /// Horner evaluation in any ring that accepts Rational coefficients.
    template <typename T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += T(*it);
        }
        return acc;
    }

    /// Descending-order text such as "4t^2 - 3t + 1".
    std::string str() const;

private:
    void trim();
    void check_var(const Polynomial& o) const;

    std::vector<Rational> coeffs_;
    Var var_;
};

/// Euclidean division: a = b*q + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(Polynomial a, Polynomial b);

Rational resultant(const Polynomial& p, const Polynomial& q);
Rational discriminant(const Polynomial& p);

}  // namespace qwalk
