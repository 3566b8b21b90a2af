#include "doctest.h"

#include "qwalk/errors.hpp"
#include "qwalk/residue.hpp"
#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>

using namespace qwalk;

namespace {

Polynomial T(std::initializer_list<std::int64_t> c) { return Polynomial(c, Var::t); }

std::vector<double> real_parts(const RootSet& rs) {
    std::vector<double> out;
    for (const auto& z : rs.approximations) out.push_back(z.re.to_double());
    std::sort(out.begin(), out.end());
    return out;
}

double value_of(const ResidueValue& v) { return v.value.re.to_double(); }

bool within_error(const ResidueValue& v, const BigFloat& target) {
    BigFloat gap = (v.value.re - target).abs();
    return gap <= v.error && v.value.im.abs() <= v.error;
}

}  // namespace

TEST_CASE("build_integrand") {
    auto a = build_integrand(1, 2);
    CHECK(a.b == T({1}));
    CHECK(a.c == T({1}));
    CHECK(a.d == T({0, -2}));
    CHECK(a.scale == Rational(-1));
    CHECK(a.radius == Rational(1, 2));
    CHECK(integrate_exact(a) == Rational(1, 2));

    auto b = build_integrand(1, 3);
    CHECK(b.c == T({1, -1}));
    CHECK(b.d == T({0, -1, 4}));
    CHECK(b.c.degree() < 2);

    auto c = build_integrand(4, 9);
    CHECK(c.b == T({0, 0, 0, 1}) * r_poly(5) * r_poly(5));
    CHECK(c.scale == Rational(1));

    for (int n = 2; n <= 20; ++n) {
        auto ig = build_integrand(1, n);
        CHECK_FALSE(resultant(ig.c, ig.d).is_zero());
    }
    CHECK_THROWS_AS(build_integrand(3, 3), DomainError);
}

TEST_CASE("find_roots") {
    auto a = find_roots(T({0, -2}), 128);
    REQUIRE(a.size() == 1);
    CHECK(a.approximations[0].abs().is_zero());

    auto b = find_roots(T({0, -1, 4}), 128);
    REQUIRE(b.size() == 2);
    auto re = real_parts(b);
    CHECK(re[0] == doctest::Approx(0.0));
    CHECK(re[1] == doctest::Approx(0.25));
    CHECK(b.error_radius < BigFloat(1e-30, 128));

    auto c = find_roots(T({1, -1}), 128);
    REQUIRE(c.size() == 1);
    CHECK(c.approximations[0].re.to_double() == doctest::Approx(1.0));

    auto d = find_roots(T({1, 0, 1}), 128);
    REQUIRE(d.size() == 2);
    for (const auto& z : d.approximations) CHECK(std::abs(z.im.to_double()) == doctest::Approx(1.0));

    CHECK_THROWS_AS(find_roots(T({3}), 128), DomainError);
}

TEST_CASE("root disks are disjoint and contain the roots") {
    for (int n = 2; n <= 20; ++n) {
        Polynomial d = r_poly(n) - r_poly(n - 1);
        auto rs = find_roots(d, 256);
        REQUIRE(rs.size() == static_cast<std::size_t>(d.degree()));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t k = i + 1; k < rs.size(); ++k)
                CHECK((rs.approximations[i] - rs.approximations[k]).abs() > rs.radii[i] + rs.radii[k]);
    }
}

TEST_CASE("classify_roots") {
    auto b = find_roots(T({0, -1, 4}), 128);
    auto [in_b, out_b] = classify_roots(b, Rational(1, 2));
    CHECK(in_b.size() == 2);
    CHECK(out_b.size() == 0);

    auto c = find_roots(T({1, -1}), 128);
    auto [in_c, out_c] = classify_roots(c, Rational(1, 2));
    CHECK(in_c.size() == 0);
    CHECK(out_c.size() == 1);

    auto z = find_roots(T({0, 5}), 128);
    CHECK(classify_roots(z, Rational(1, 2)).first.size() == 1);

    auto on = find_roots(T({-1, 2}), 128);
    CHECK_THROWS_AS(classify_roots(on, Rational(1, 2)), PrecisionEscalation);
}

TEST_CASE("roots of r_n - r_{n-1} lie inside |t| = 1/2, roots of r_n + 2t r_{n-1} outside") {
    for (int n = 2; n <= 20; ++n) {
        auto ig = build_integrand(1, n);
        auto [din, dout] = classify_roots(find_roots(ig.d, 256), Rational(1, 2));
        CHECK(din.size() == static_cast<std::size_t>(ig.d.degree()));
        CHECK(dout.size() == 0);
        if (ig.c.degree() >= 1) {
            auto [cin, cout] = classify_roots(find_roots(ig.c, 256), Rational(1, 2));
            CHECK(cin.size() == 0);
            CHECK(cout.size() == static_cast<std::size_t>(ig.c.degree()));
        }
    }
}

TEST_CASE("residue_sum") {
    auto r1 = residue_sum(T({-1}), T({1}), T({0, -2}), find_roots(T({0, -2}), 128));
    CHECK(value_of(r1) == doctest::Approx(0.5));
    CHECK(within_error(r1, BigFloat(Rational(1, 2), 128)));

    auto r0 = residue_sum(Polynomial(Var::t), T({1}), T({0, -2}), find_roots(T({0, -2}), 128));
    CHECK(r0.value.re.is_zero());

    auto ig = build_integrand(1, 3);
    auto r3 = residue_sum(ig.b, ig.c, ig.d, find_roots(ig.d, 128));
    CHECK(within_error(r3, BigFloat(Rational(-2, 3), 128)));
    CHECK(r3.error < BigFloat(1e-30, 128));
}

TEST_CASE("residues over all poles sum to zero") {
    const Polynomial one_plus_2t = T({1, 2});
    for (int n = 2; n <= 12; ++n)
        for (int j = 1; j < n; ++j) {
            Polynomial num = r_poly(n - j) * (r_poly(j) - r_poly(j - 1));
            Polynomial den = one_plus_2t * (r_poly(n) - r_poly(n - 1));
            auto rs = find_roots(den, 256);
            auto total = residue_sum(num, T({1}), den, rs);
            CHECK(within_error(total, BigFloat(256)));
            CHECK(total.error < BigFloat(1e-50, 256));
        }
}

TEST_CASE("denominator_bound") {
    auto db = denominator_bound(build_integrand(1, 3));
    CHECK(db.R == 3);
    CHECK(db.D == 1);
    CHECK(db.delta >= 1);
    Integrand bad = make_integrand(T({1}), T({0, 1}), T({0, 1, 1}), Rational(1), Rational(1, 2));
    CHECK_THROWS_AS(denominator_bound(bad), DomainError);
    Integrand rep = make_integrand(T({1}), T({3, 1}), T({0, 0, 1}), Rational(1), Rational(1, 2));
    CHECK_THROWS_AS(denominator_bound(rep), DomainError);
    CHECK_THROWS_AS(integrate_exact(bad), DomainError);
}

TEST_CASE("make_integrand moves content into the scale") {
    Integrand ig = make_integrand(Polynomial({Rational(1, 2), Rational(3, 2)}, Var::t), T({4, -2}), T({0, 6}),
                                  Rational(1), Rational(1, 2));
    CHECK(ig.b.has_integer_coefficients());
    CHECK(ig.c == T({-2, 1}));
    CHECK(ig.d == T({0, 1}));
    // residue at 0 of (1 + 3t)/2 / ((4 - 2t) * 6t)
    CHECK(integrate_exact(ig) == Rational(1, 48));
}

TEST_CASE("integrate_exact") {
    CHECK(integrate_exact(build_integrand(1, 3)) == Rational(2, 3));
    CHECK(integrate_exact(build_integrand(5, 8)) == Rational(119, 338));
    for (int j = 1; j < 20; ++j) CHECK(integrate_exact(build_integrand(j, 20)) == p_exact(j, 20));
}

TEST_CASE("delta times p is an integer and precision doubling is stable") {
    for (int n = 2; n <= 12; ++n)
        for (int j = 1; j < n; ++j) {
            auto ig = build_integrand(j, n);
            auto res = integrate_exact_detailed(ig);
            Rational scaled = res.value * Rational(res.bound.delta);
            CHECK(scaled.is_integer());
            CHECK((p_exact(j, n) * Rational(res.bound.delta)).is_integer());
            CHECK(res.scaled_error < 0.25);
            int doubled = 2 * res.precision_bits;
            CHECK(integrate_exact(ig, doubled, 2 * doubled) == res.value);
        }
}

TEST_CASE("precision ceiling") {
    auto ig = build_integrand(3, 16);
    CHECK_THROWS_AS(integrate_exact(ig, 128, 256), PrecisionFailure);
}
