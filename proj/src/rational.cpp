#include "qwalk/rational.hpp"

#include "qwalk/errors.hpp"

#include <cctype>
#include <ostream>

namespace qwalk {

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
    if (s.empty()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

BigInt pow10(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(BigInt n) : value_(n) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));

    std::string_view mant = text;
    long exp10 = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
        exp10 = parse_int(text.substr(e + 1), text).get_si();
        mant = text.substr(0, e);
    }
    auto dot = mant.find('.');
    BigInt m;
    if (dot == std::string_view::npos) {
        m = parse_int(mant, text);
    } else {
        std::string digits(mant.substr(0, dot));
        std::string frac(mant.substr(dot + 1));
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        m = parse_int(digits + frac, text);
        exp10 -= static_cast<long>(frac.size());
    }
    if (exp10 >= 0) return Rational(BigInt(m * pow10(static_cast<unsigned>(exp10))));
    return Rational(m, pow10(static_cast<unsigned>(-exp10)));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(unsigned e) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::decimal(unsigned digits, bool* exact) const {
    BigInt scale = pow10(digits);
    BigInt num = ::abs(value_.get_num()) * scale;
    BigInt den = value_.get_den();
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (exact) *exact = (r == 0);
    if (2 * r >= den) q += 1;

    std::string s = q.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    if (sign() < 0) out.insert(0, "-");
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace qwalk
