#include "doctest.h"

#include "qwalk/errors.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/quad_ext.hpp"
#include "qwalk/rational.hpp"
#include "qwalk/rational_function.hpp"

#include <random>

using namespace qwalk;

namespace {

Polynomial T(std::initializer_list<std::int64_t> c) { return Polynomial(c, Var::t); }
Polynomial Z(std::initializer_list<std::int64_t> c) { return Polynomial(c, Var::z); }

// Unreduced fraction arithmetic on plain big integers.
struct Frac {
    BigInt num, den;
};
bool same_value(const Frac& f, const Rational& r) { return f.num * r.denominator() == r.numerator() * f.den; }

Polynomial random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg), coef(-3, 3);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(coef(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    return Polynomial(c, Var::t);
}

Rational sylvester_resultant(const Polynomial& p, const Polynomial& q) {
    const int m = p.degree(), n = q.degree(), N = m + n;
    std::vector<std::vector<Rational>> a(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = p.coeff(static_cast<std::size_t>(m - k));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = q.coeff(static_cast<std::size_t>(n - k));
    Rational det(1);
    for (int col = 0; col < N; ++col) {
        int piv = col;
        while (piv < N && a[piv][col].is_zero()) ++piv;
        if (piv == N) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < N; ++r) {
            Rational f = a[r][col] / a[col][col];
            for (int k = col; k < N; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("1e-10") == Rational(BigInt(1), BigInt("10000000000")));
    CHECK(Rational(4, 10).str() == "2/5");
    CHECK(Rational(-7).str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    bool exact = true;
    CHECK(Rational(2, 3).decimal(5, &exact) == "0.66667");
    CHECK_FALSE(exact);
    CHECK(Rational(1, 4).decimal(3, &exact) == "0.250");
    CHECK(exact);
}

TEST_CASE("rational arithmetic matches cross-multiplication on random pairs") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 1000; ++i) {
        Frac x{BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng)))};
        Frac y{BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng)))};
        Rational a(x.num, x.den), b(y.num, y.den);
        CHECK(same_value({x.num * y.den + y.num * x.den, x.den * y.den}, a + b));
        CHECK(same_value({x.num * y.den - y.num * x.den, x.den * y.den}, a - b));
        CHECK(same_value({x.num * y.num, x.den * y.den}, a * b));
        if (y.num != 0) CHECK(same_value({x.num * y.den, x.den * y.num}, a / b));
        CHECK((a + -a).is_zero());
        CHECK(Rational(a.numerator(), a.denominator()) == a);
        bool less = x.num * y.den < y.num * x.den;
        CHECK((a < b) == less);
    }
}

TEST_CASE("poly_eval") {
    CHECK(Polynomial(Var::t).eval(Rational(5)) == Rational(0));
    CHECK(T({1, -3, 4}).eval(Rational(-1, 2)) == Rational(7, 2));
    CHECK(T({1, -2}).eval(QuadExt(Rational(-1, 2))) == QuadExt(2));
}

TEST_CASE("quad_arith") {
    const QuadExt A(2, 1), B(2, -1);
    CHECK(A * B == QuadExt(2));
    CHECK(A.conj() == B);
    CHECK(A * A == QuadExt(6, 4));
    CHECK(A / B == QuadExt(3, 2));
    CHECK(A - A == QuadExt(0));
    CHECK_THROWS_AS(A / QuadExt(0), DomainError);
    CHECK(QuadExt::sqrt2().pow(4) == QuadExt(4));
    CHECK(QuadExt(1, -1).sign() < 0);
    CHECK(QuadExt(-1, 1).sign() > 0);
}

TEST_CASE("quad_ext properties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20), q(1, 9);
    auto rnd = [&] { return QuadExt(Rational(d(rng), q(rng)), Rational(d(rng), q(rng))); };
    for (int i = 0; i < 200; ++i) {
        QuadExt x = rnd(), y = rnd(), z = rnd();
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * x.conj()).is_rational());
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
    }
}

TEST_CASE("poly_divmod") {
    auto [q1, r1] = divmod(T({0, -1, 4}), T({0, -1, 4}));
    CHECK(q1 == T({1}));
    CHECK(r1.is_zero());
    auto [q2, r2] = divmod(T({0, -1, 4}), T({0, -2}));
    CHECK(q2 == Polynomial({Rational(1, 2), Rational(-2)}, Var::t));
    CHECK(r2.is_zero());
    auto [q3, r3] = divmod(T({1, 1}), T({0, 1}));
    CHECK(q3 == T({1}));
    CHECK(r3 == T({1}));
    CHECK_THROWS_AS(divmod(T({1}), Polynomial(Var::t)), DomainError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Polynomial a = random_poly(rng, 7), b = random_poly(rng, 4);
        auto [q, r] = divmod(a, b);
        CHECK(b * q + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly_resultant") {
    CHECK(resultant(T({0, 1}), T({0, 1})) == Rational(0));
    CHECK(resultant(T({1, -1}), T({0, -1, 4})) == Rational(3));
    CHECK(resultant(T({-1, 1}), T({1, 1})) == Rational(2));
    CHECK_THROWS_AS(resultant(Polynomial(Var::t), Polynomial(Var::t)), DomainError);
}

TEST_CASE("resultant agrees with the Sylvester determinant and vanishes iff gcd is non-constant") {
    std::mt19937_64 rng(3);
    int shared = 0;
    for (int i = 0; i < 300; ++i) {
        Polynomial p = random_poly(rng, 4), q = random_poly(rng, 4);
        if (i % 3 == 0) {
            Polynomial f = random_poly(rng, 1);
            p *= f;
            q *= f;
        }
        Rational res = resultant(p, q);
        CHECK(res == sylvester_resultant(p, q));
        bool common = gcd(p, q).degree() > 0;
        shared += common;
        CHECK(res.is_zero() == common);
    }
    CHECK(shared >= 100);
}

TEST_CASE("poly_discriminant") {
    CHECK(discriminant(T({-1, 0, 1})) == Rational(4));
    CHECK(discriminant(T({0, -1, 4})) == Rational(1));
    CHECK(discriminant(T({1, -2, 1})) == Rational(0));
    CHECK(discriminant(T({3, 2, 5})) == Rational(2 * 2 - 4 * 5 * 3));
    CHECK_THROWS_AS(discriminant(T({5})), DomainError);
}

TEST_CASE("ratfunc_normalize") {
    CHECK(RationalFunction(Z({0, 0, 1}), Z({0, 1})) == RationalFunction(Z({0, 1})));
    RationalFunction f(Z({0, 1, 0, -2}), Z({1, 0, -1}));
    CHECK(f.numerator() == Z({0, -1, 0, 2}));
    CHECK(f.denominator() == Z({-1, 0, 1}));
    CHECK(RationalFunction(Z({-1, 0, 1}), Z({-1, 1})) == RationalFunction(Z({1, 1})));
    CHECK(RationalFunction(Z({2}), Z({0, -4})).denominator().lc() > Rational(0));
    CHECK_THROWS_AS(RationalFunction(Z({1}), Polynomial(Var::z)), DomainError);
    CHECK_THROWS_AS(T({1, 1}) + Z({0, 1}), DomainError);
    RationalFunction a(Z({1}), Z({1, -1})), b(Z({0, 1}), Z({1, 1}));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
}
