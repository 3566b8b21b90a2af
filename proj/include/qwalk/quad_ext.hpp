#pragma once

#include "qwalk/rational.hpp"

#include <string>

namespace qwalk {

/// An element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational_part, Rational radical_part = Rational(0))  // NOLINT
        : a_(std::move(rational_part)), b_(std::move(radical_part)) {}
    QuadExt(std::int64_t n) : a_(n) {}  // NOLINT

    static QuadExt sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - 2 b^2, i.e. x * conj(x).
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
    QuadExt conj() const { return {a_, -b_}; }
    QuadExt inverse() const;
    QuadExt pow(unsigned e) const;

    QuadExt operator-() const { return {-a_, -b_}; }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    /// Sign of the real number a + b*sqrt(2), decided exactly.
    int sign() const;

    std::string str() const;

private:
    Rational a_;
    Rational b_;
};

}  // namespace qwalk
