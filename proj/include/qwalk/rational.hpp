#pragma once

/*
 * Exact rational numbers on top of GMP.
 *
 * Values are always stored in lowest terms with a positive denominator,
 * and zero is represented uniquely as 0/1. All operations are exact.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qwalk {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt n);
    Rational(BigInt num, BigInt den);
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "a", "a/b", "-a/b", decimals "0.125" and scientific "1e-10".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return BigInt(value_.get_num()); }
    BigInt denominator() const { return BigInt(value_.get_den()); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const;
    Rational inverse() const;
    Rational pow(unsigned e) const;

    /// "num/den", or "num" when the denominator is 1.
    std::string str() const;

    /// Correctly rounded (half away from zero) expansion with `digits`
    /// fractional digits. `exact` reports whether no rounding happened.
    std::string decimal(unsigned digits, bool* exact = nullptr) const;

    double to_double() const { return value_.get_d(); }
    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace qwalk
