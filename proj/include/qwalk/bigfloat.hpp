#pragma once

// RAII handles over MPFR with an explicit precision per value. Results of
// binary operations carry the larger operand precision; rounding is to
// nearest throughout.

#include "qwalk/rational.hpp"

#include <mpfr.h>

#include <string>

namespace qwalk {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(double v, mpfr_prec_t bits);
    BigFloat(const Rational& q, mpfr_prec_t bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent() const;
    /// Nearest integer.
    BigInt round() const;
    std::string str(int digits = 20) const;

    BigFloat abs() const;
    BigFloat sqrt() const;
    /// x * 2^e, exact.
    BigFloat ldexp(long e) const;

    static BigFloat pi(mpfr_prec_t bits);
    static BigFloat cos(const BigFloat& x);
    static BigFloat sin(const BigFloat& x);
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);
    static BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

private:
    mpfr_t v_;
};

/// Complex numbers over BigFloat; only what the residue engine needs.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const Rational& q, mpfr_prec_t bits) : re(q, bits), im(bits) {}

    mpfr_prec_t precision() const { return re.precision(); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

    BigFloat abs() const { return BigFloat::hypot(re, im); }
    std::string str(int digits = 20) const;
};

}  // namespace qwalk
