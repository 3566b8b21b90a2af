#include "qwalk/rational_function.hpp"

#include "qwalk/errors.hpp"

namespace qwalk {

RationalFunction::RationalFunction(Var v)
    : num_(v), den_(Polynomial::constant(Rational(1), v)), var_(v) {}

RationalFunction::RationalFunction(const Polynomial& p)
    : RationalFunction(p, Polynomial::constant(Rational(1), p.var())) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den), var_(num.is_constant() ? den.var() : num.var()) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (!num.is_constant() && !den.is_constant() && num.var() != den.var())
        throw DomainError("rational function variable mismatch");

    if (num_.is_zero()) {
        num_ = Polynomial(var_);
        den_ = Polynomial::constant(Rational(1), var_);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    auto [scale, prim] = den_.primitive_part();
    den_ = prim.with_var(var_);
    num_ = (num_ * scale.inverse()).with_var(var_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qwalk
