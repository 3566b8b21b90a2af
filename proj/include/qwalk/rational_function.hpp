#pragma once

#include "qwalk/polynomial.hpp"

#include <string>

namespace qwalk {

/// Quotient of two polynomials in canonical form: numerator and
/// denominator are coprime, and the denominator is a primitive integer
/// polynomial with positive leading coefficient. Canonical form makes
/// equality structural. Zero is 0/1.
class RationalFunction {
public:
    explicit RationalFunction(Var v = Var::z);
    RationalFunction(const Polynomial& num, const Polynomial& den);
    explicit RationalFunction(const Polynomial& p);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    Var var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
    Var var_;
};

}  // namespace qwalk
