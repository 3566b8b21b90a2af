#include "qwalk/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace qwalk {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, kRnd);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.raw().get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, kRnd);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

#define QWALK_BIGFLOAT_BINOP(op, fn)                       \
    BigFloat& BigFloat::operator op(const BigFloat& o) {   \
        if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), kRnd); \
        fn(v_, v_, o.v_, kRnd);                            \
        return *this;                                      \
    }

QWALK_BIGFLOAT_BINOP(+=, mpfr_add)
QWALK_BIGFLOAT_BINOP(-=, mpfr_sub)
QWALK_BIGFLOAT_BINOP(*=, mpfr_mul)
QWALK_BIGFLOAT_BINOP(/=, mpfr_div)

#undef QWALK_BIGFLOAT_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, kRnd);
    return r;
}

long BigFloat::exponent() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(v_));
}

BigInt BigFloat::round() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) return "?";
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, kRnd);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, kRnd);
    return r;
}

BigFloat BigFloat::ldexp(long e) const {
    BigFloat r(precision());
    mpfr_mul_2si(r.v_, v_, e, kRnd);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, kRnd);
    return r;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.v_, x.v_, kRnd);
    return r;
}

BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.v_, x.v_, kRnd);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(wider(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, kRnd);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat den = o.re * o.re + o.im * o.im;
    BigFloat r = (re * o.re + im * o.im) / den;
    BigFloat i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    if (im.is_zero()) return s;
    BigFloat mag = im.abs();
    return s + (im < BigFloat(mag.precision()) ? " - " : " + ") + mag.str(digits) + "i";
}

}  // namespace qwalk
