#include "qwalk/quad_ext.hpp"

#include "qwalk/errors.hpp"

namespace qwalk {

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt QuadExt::inverse() const {
    // sqrt 2 is irrational, so the norm vanishes only at zero.
    if (is_zero()) throw DomainError("QuadExt division by zero");
    Rational n = norm();
    return {a_ / n, -b_ / n};
}

QuadExt QuadExt::pow(unsigned e) const {
    QuadExt result(1);
    QuadExt base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

int QuadExt::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    auto c = a_ * a_ <=> Rational(2) * b_ * b_;
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string rad = b_.abs() == Rational(1) ? "" : b_.abs().str() + "*";
    rad += "sqrt2";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + rad;
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + rad;
}

}  // namespace qwalk
