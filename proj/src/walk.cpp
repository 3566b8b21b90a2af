#include "qwalk/walk.hpp"

#include "qwalk/errors.hpp"
#include "qwalk/quad_ext.hpp"

#include <mutex>
#include <string>

namespace qwalk {

namespace {

void require_range(int j, int n, int j_min, int j_max_offset, const char* what) {
    if (n < 2 || j < j_min || j > n - j_max_offset)
        throw DomainError(std::string(what) + ": need n >= 2 and " + std::to_string(j_min) + " <= j <= n" +
                          (j_max_offset ? "-" + std::to_string(j_max_offset) : "") + ", got j=" +
                          std::to_string(j) + " n=" + std::to_string(n));
}

Polynomial t_times(const Polynomial& p) { return p.shifted(1); }

// r_n + 2t r_{n-1}
Polynomial outer_factor(int n) { return r_poly(n) + Rational(2) * t_times(r_poly(n - 1)); }

// r_n - r_{n-1}
Polynomial inner_factor(int n) { return r_poly(n) - r_poly(n - 1); }

const Rational kMinusHalf(-1, 2);

}  // namespace

WalkParams::WalkParams(int n_, int j_) : n(n_), j(j_) { require_range(j, n, 0, 0, "walk"); }

RFamily::RFamily() {
    cache_.emplace_back(Var::t);
    cache_.push_back(Polynomial::constant(Rational(1), Var::t));
}

RFamily& RFamily::shared() {
    static RFamily family;
    return family;
}

std::size_t RFamily::size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

Polynomial RFamily::r(int k) {
    if (k < 0) throw DomainError("r_k needs k >= 0, got " + std::to_string(k));
    const auto idx = static_cast<std::size_t>(k);
    {
        std::shared_lock lock(mutex_);
        if (idx < cache_.size()) return cache_[idx];
    }
    std::unique_lock lock(mutex_);
    const Polynomial step = Polynomial({1, -2}, Var::t);
    while (cache_.size() <= idx) {
        const auto m = cache_.size();
        cache_.push_back(step * cache_[m - 1] + cache_[m - 2].shifted(1));
    }
    return cache_[idx];
}

Polynomial r_poly(int k, RFamily& family) { return family.r(k); }

RationalFunction gf(int j, int n) {
    require_range(j, n, 1, 0, "gf");
    if (j == n) return RationalFunction(Var::z);
    // Sign (-1)^(j-1): the leading path count is that of L^j.
    Polynomial num = r_poly(n - j).substitute_square(Var::z).shifted(static_cast<unsigned>(j));
    if (j % 2 == 0) num = -num;
    Polynomial den = outer_factor(n).substitute_square(Var::z);
    return RationalFunction(num, den);
}

RationalFunction gf_via_recurrence(int j, int n) {
    require_range(j, n, 1, 1, "gf_via_recurrence");
    const RationalFunction z(Polynomial({0, 1}, Var::z));
    const RationalFunction one(Polynomial::constant(Rational(1), Var::z));
    const RationalFunction two_z(Polynomial({0, 2}, Var::z));

    // f1[m] = f_1^(m) for m = 2..n.
    std::vector<RationalFunction> f1(static_cast<std::size_t>(n) + 1, RationalFunction(Var::z));
    f1[2] = z;
    for (int m = 3; m <= n; ++m) {
        const auto& prev = f1[static_cast<std::size_t>(m - 1)];
        f1[static_cast<std::size_t>(m)] = z * (one - two_z * prev) / (one - z * prev);
    }
    // f_j^(n) = f_1^(n-j+1) * prod_{i=0}^{j-2} (f_1^(n-i) - 2z)
    RationalFunction f = f1[static_cast<std::size_t>(n - j + 1)];
    for (int i = j - 2; i >= 0; --i) f = f * (f1[static_cast<std::size_t>(n - i)] - two_z);
    return f;
}

std::vector<BigInt> gf_coefficients(int j, int n, int m_max) {
    require_range(j, n, 1, 1, "gf_coefficients");
    if (m_max < 1) throw DomainError("gf_coefficients: m_max must be >= 1");
    const RationalFunction f = gf(j, n);
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    const Rational d0 = den.coeff(0);
    if (d0.is_zero()) throw ConsistencyError("gf denominator vanishes at z = 0");

    // series[k] = coefficient of z^k, k = 0..m_max
    std::vector<Rational> series(static_cast<std::size_t>(m_max) + 1);
    for (std::size_t k = 0; k < series.size(); ++k) {
        Rational acc = num.coeff(k);
        for (std::size_t i = 1; i <= k; ++i) acc -= den.coeff(i) * series[k - i];
        series[k] = acc / d0;
    }
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(m_max));
    for (std::size_t k = 1; k < series.size(); ++k) {
        if (!series[k].is_integer())
            throw ConsistencyError("non-integer path count at z^" + std::to_string(k));
        out.push_back(series[k].numerator());
    }
    return out;
}

Rational p_exact(int j, int n) {
    require_range(j, n, 0, 0, "p_exact");
    if (j == 0) return Rational(1);
    auto at = [](int k) { return r_poly(k).eval(kMinusHalf); };
    const Rational den = at(n) - at(n - 1);
    if (den.is_zero()) throw ConsistencyError("r_n - r_{n-1} vanishes at t = -1/2");
    return Rational(1, 2) * at(n - j) * (at(j) - at(j - 1)) / den;
}

Rational p_closed(int j, int n) {
    require_range(j, n, 1, 0, "p_closed");
    const QuadExt a(Rational(2), Rational(1));
    const QuadExt b = a.conj();
    const auto uj = static_cast<unsigned>(j);
    const auto un = static_cast<unsigned>(n);
    const QuadExt factor = QuadExt::sqrt2() / QuadExt(4);
    const QuadExt value =
        factor * (a.pow(un - uj) - b.pow(un - uj)) * (a.pow(uj - 1) + b.pow(uj - 1)) / (a.pow(un - 1) + b.pow(un - 1));
    if (!value.is_rational())
        throw ConsistencyError("closed form left a sqrt2 component: " + value.str());
    return value.rational_part();
}

Polynomial h_quotient(int j, int n) {
    require_range(j, n, 1, 0, "h_quotient");
    const Polynomial one_plus_2t = Polynomial({1, 2}, Var::t);
    Polynomial h = r_poly(n - j).shifted(static_cast<unsigned>(j - 1)) * one_plus_2t;
    Polynomial second = (r_poly(j) - r_poly(j - 1)) * outer_factor(n);
    if (j % 2 == 0)
        h += second;
    else
        h -= second;
    auto [q, rem] = divmod(h, inner_factor(n));
    if (!rem.is_zero())
        throw ConsistencyError("H_" + std::to_string(j) + " not divisible by r_n - r_{n-1} for n=" +
                               std::to_string(n));
    return q.with_var(Var::t);
}

std::vector<Rational> row_table(int n) {
    require_range(1, n, 1, 0, "row_table");
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j < n; ++j) {
        Rational p = p_exact(j, n);
        Rational c = p_closed(j, n);
        if (p != c)
            throw ConsistencyError("p_exact and p_closed disagree at n=" + std::to_string(n) +
                                   " j=" + std::to_string(j) + ": " + p.str() + " vs " + c.str());
        row.push_back(std::move(p));
    }
    return row;
}

BigInt row_common_denominator(const std::vector<Rational>& row) {
    BigInt d = 1;
    for (const auto& p : row) d = lcm(d, p.denominator());
    return d;
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::closed: return "closed";
        case Method::residue: return "residue";
        case Method::numeric: return "numeric";
        case Method::simulate: return "simulate";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    for (Method m : {Method::closed, Method::residue, Method::numeric, Method::simulate})
        if (method_name(m) == s) return m;
    throw DomainError("unknown method '" + std::string(s) + "'");
}

AbsorptionResult absorption(const WalkParams& params, Method method) {
    Rational p;
    if (params.j == 0)
        p = Rational(1);
    else if (method == Method::closed)
        p = p_closed(params.j, params.n);
    else if (method == Method::residue)
        p = p_exact(params.j, params.n);
    else
        throw DomainError("absorption(): method '" + std::string(method_name(method)) +
                          "' is provided by its own module");
    return {p, Rational(1) - p, method};
}

}  // namespace qwalk
