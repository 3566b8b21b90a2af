#include "qwalk/residue.hpp"

#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

namespace {

BigFloat with_precision(const BigFloat& x, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigComplex with_precision(const BigComplex& x, mpfr_prec_t bits) {
    return {with_precision(x.re, bits), with_precision(x.im, bits)};
}

// 2^-bits
BigFloat ulp(mpfr_prec_t bits) { return BigFloat(1.0, bits).ldexp(-static_cast<long>(bits)); }

std::vector<BigFloat> real_coeffs(const Polynomial& p, mpfr_prec_t bits) {
    std::vector<BigFloat> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.emplace_back(c, bits);
    return out;
}

std::vector<BigFloat> abs_coeffs(const std::vector<BigFloat>& cs) {
    std::vector<BigFloat> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.abs());
    return out;
}

BigComplex horner(const std::vector<BigFloat>& cs, const BigComplex& z) {
    BigComplex acc(z.precision());
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= z;
        acc.re += *it;
    }
    return acc;
}

// p(z) and p'(z) in one pass.
std::pair<BigComplex, BigComplex> horner2(const std::vector<BigFloat>& cs, const BigComplex& z) {
    BigComplex p(z.precision());
    BigComplex dp(z.precision());
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        dp *= z;
        dp += p;
        p *= z;
        p.re += *it;
    }
    return {p, dp};
}

BigFloat horner_real(const std::vector<BigFloat>& cs, const BigFloat& x) {
    BigFloat acc(x.precision());
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

// Upper bound on |p(x') - p(x)| for |x' - x| <= rho, plus a rounding
// allowance for evaluating p at x itself.
BigFloat eval_error(const std::vector<BigFloat>& abs_cs, const BigFloat& ax, const BigFloat& rho, mpfr_prec_t bits) {
    BigFloat hi = horner_real(abs_cs, ax + rho);
    BigFloat drift = hi - horner_real(abs_cs, ax);
    if (drift < BigFloat(bits)) drift = BigFloat(bits);
    BigFloat rounding = hi * ulp(bits) * BigFloat(4.0 * static_cast<double>(abs_cs.size() + 1), bits);
    return drift + rounding;
}

BigFloat one_plus_slack(mpfr_prec_t bits) { return BigFloat(1.0, bits) + ulp(bits / 2); }

std::vector<BigComplex> initial_guesses(const std::vector<BigFloat>& cs, mpfr_prec_t bits) {
    const std::size_t m = cs.size() - 1;
    const double lead = std::abs(cs.back().to_double());
    double bound = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double ratio = std::abs(cs[k].to_double()) / lead;
        if (ratio > 0) bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(m - k)));
    }
    if (!(bound > 0) || !std::isfinite(bound)) bound = 1.0;
    std::vector<BigComplex> z;
    z.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.7;
        z.emplace_back(BigFloat(bound * std::cos(angle), bits), BigFloat(bound * std::sin(angle), bits));
    }
    return z;
}

// Aberth-Ehrlich with Gauss-Seidel updates. A root is frozen once |p(z)|
// drops to the rounding level of its Horner evaluation, or once its
// correction is below ~2^(10-bits) relative.
void aberth(const std::vector<BigFloat>& cs, std::vector<BigComplex>& z, mpfr_prec_t bits) {
    const std::size_t m = z.size();
    const BigFloat tol = ulp(bits).ldexp(10);
    const BigFloat noise = ulp(bits) * BigFloat(16.0 * static_cast<double>(m + 1), bits);
    const BigFloat one(1.0, bits);
    const auto acs = abs_coeffs(cs);
    const int max_iter = 200 + static_cast<int>(bits) / 4;
    std::vector<bool> done(m, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool moved = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (done[i]) continue;
            auto [p, dp] = horner2(cs, z[i]);
            if (p.abs() <= noise * horner_real(acs, z[i].abs())) {
                done[i] = true;
                continue;
            }
            moved = true;
            if (dp.re.is_zero() && dp.im.is_zero()) {
                // Nudge off a critical point.
                z[i].re += tol.ldexp(20);
                continue;
            }
            BigComplex w = p / dp;
            BigComplex s(bits);
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i) continue;
                BigComplex diff = z[i] - z[k];
                if (diff.re.is_zero() && diff.im.is_zero()) continue;
                s += BigComplex(one, BigFloat(bits)) / diff;
            }
            BigComplex denom = BigComplex(one, BigFloat(bits)) - w * s;
            if (denom.re.is_zero() && denom.im.is_zero()) continue;
            BigComplex delta = w / denom;
            z[i] -= delta;
            if (delta.abs() <= tol * BigFloat::max(one, z[i].abs())) done[i] = true;
        }
        if (!moved) return;
    }
}

}  // namespace

Integrand make_integrand(const Polynomial& b, const Polynomial& c, const Polynomial& d, const Rational& scale,
                         const Rational& radius) {
    if (d.degree() < 1) throw DomainError("integrand: d must have degree >= 1");
    if (c.is_zero()) throw DomainError("integrand: c must be nonzero");
    if (radius.sign() <= 0) throw DomainError("integrand: radius must be positive");
    Integrand ig{b, c, d, scale, radius};
    auto [sc, pc] = c.primitive_part();
    auto [sd, pd] = d.primitive_part();
    ig.c = pc;
    ig.d = pd;
    ig.scale = scale / (sc * sd);
    if (!b.is_zero()) {
        auto [sb, pb] = b.primitive_part();
        ig.b = pb;
        ig.scale *= sb;
    }
    return ig;
}

Integrand build_integrand(int j, int n) {
    if (n < 2 || j < 1 || j > n - 1)
        throw DomainError("build_integrand: need n >= 2 and 1 <= j <= n-1, got j=" + std::to_string(j) +
                          " n=" + std::to_string(n));
    Polynomial rnj = r_poly(n - j);
    Polynomial b = (rnj * rnj).shifted(static_cast<unsigned>(j - 1));
    Polynomial c = r_poly(n) + Rational(2) * r_poly(n - 1).shifted(1);
    Polynomial d = r_poly(n) - r_poly(n - 1);
    return Integrand{b, c, d, Rational(j % 2 == 0 ? 1 : -1), Rational(1, 2)};
}

RootSet find_roots(const Polynomial& p, int precision_bits, const std::vector<BigComplex>* seeds) {
    if (p.degree() < 1) throw DomainError("find_roots: degree must be >= 1");
    if (precision_bits < 32) throw DomainError("find_roots: precision must be >= 32 bits");
    const auto bits = static_cast<mpfr_prec_t>(precision_bits);

    std::size_t zeros = 0;
    while (p.coeff(zeros).is_zero()) ++zeros;
    if (zeros > 1) throw DomainError("find_roots: repeated root at 0");

    const std::size_t n = static_cast<std::size_t>(p.degree());
    std::vector<Rational> rest(p.coefficients().begin() + static_cast<std::ptrdiff_t>(zeros), p.coefficients().end());
    const Polynomial q(std::move(rest), p.var());
    const std::size_t m = n - zeros;

    RootSet out;
    out.precision_bits = precision_bits;
    for (std::size_t k = 0; k < zeros; ++k) {
        out.approximations.emplace_back(bits);
        out.radii.emplace_back(bits);
    }

    if (m > 0) {
        const auto cs = real_coeffs(q, bits);
        const auto acs = abs_coeffs(cs);
        std::vector<BigComplex> z;
        if (seeds != nullptr && seeds->size() == n) {
            for (std::size_t k = zeros; k < n; ++k) z.push_back(with_precision((*seeds)[k], bits));
        } else {
            z = initial_guesses(cs, bits);
        }
        aberth(cs, z, bits);

        const BigFloat lead = cs.back().abs();
        const BigFloat horner_factor(4.0 * static_cast<double>(m + 1), bits);
        const BigFloat slack = one_plus_slack(bits);
        const BigFloat degree(static_cast<double>(m), bits);
        for (std::size_t i = 0; i < m; ++i) {
            BigFloat value = horner(cs, z[i]).abs();
            BigFloat rounding = horner_real(acs, z[i].abs()) * ulp(bits) * horner_factor;
            BigFloat prod(1.0, bits);
            for (std::size_t k = 0; k < m; ++k) {
                if (k != i) prod *= (z[i] - z[k]).abs();
            }
            if (prod.is_zero()) throw PrecisionEscalation("find_roots: coincident approximations");
            out.radii.push_back(degree * (value + rounding) / (lead * prod) * slack);
            out.approximations.push_back(z[i]);
        }
    }

    // Disjointness of all disks, including the exact zero root.
    const BigFloat slack = one_plus_slack(bits);
    for (std::size_t i = 0; i < n; ++i) {
        if (!out.radii[i].is_finite()) throw PrecisionEscalation("find_roots: non-finite radius");
        for (std::size_t k = i + 1; k < n; ++k) {
            BigFloat gap = (out.approximations[i] - out.approximations[k]).abs();
            if (!(gap > (out.radii[i] + out.radii[k]) * slack))
            throw PrecisionEscalation("find_roots: inclusion disks overlap at " + std::to_string(precision_bits) +
                                          " bits");
        }
    }
    out.error_radius = BigFloat(bits);
    for (const auto& r : out.radii) out.error_radius = BigFloat::max(out.error_radius, r);
    return out;
}

std::pair<RootSet, RootSet> classify_roots(const RootSet& roots, const Rational& radius) {
    const auto bits = static_cast<mpfr_prec_t>(std::max(roots.precision_bits, 32));
    const BigFloat r(radius, bits);
    const BigFloat one(1.0, bits);
    RootSet inside, outside;
    inside.precision_bits = outside.precision_bits = roots.precision_bits;
    inside.error_radius = outside.error_radius = BigFloat(bits);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const BigFloat mag = roots.approximations[i].abs();
        const BigFloat reach = roots.radii[i] + ulp(bits).ldexp(4) * (mag + one);
        RootSet* target = nullptr;
        if (mag + reach < r)
            target = &inside;
        else if (mag - reach > r)
            target = &outside;
        else
            throw PrecisionEscalation("classify_roots: inclusion disk meets the contour");
        target->approximations.push_back(roots.approximations[i]);
        target->radii.push_back(roots.radii[i]);
        target->error_radius = BigFloat::max(target->error_radius, roots.radii[i]);
    }
    return {std::move(inside), std::move(outside)};
}

ResidueValue residue_sum(const Polynomial& b, const Polynomial& c, const Polynomial& d, const RootSet& d_roots) {
    if (d.degree() < 1) throw DomainError("residue_sum: d must have degree >= 1");
    if (d_roots.size() != static_cast<std::size_t>(d.degree()))
        throw DomainError("residue_sum: root count does not match deg d");
    const auto bits = static_cast<mpfr_prec_t>(d_roots.precision_bits);

    const auto bc = real_coeffs(b, bits);
    const auto cc = real_coeffs(c, bits);
    const auto dc = real_coeffs(d.derivative(), bits);
    const auto bac = abs_coeffs(bc);
    const auto cac = abs_coeffs(cc);
    const auto dac = abs_coeffs(dc);
    const BigFloat u = ulp(bits);
    const BigFloat eight(8.0, bits);

    ResidueValue out{BigComplex(bits), BigFloat(bits)};
    BigFloat magnitude(bits);
    for (std::size_t i = 0; i < d_roots.size(); ++i) {
        const BigComplex& x = d_roots.approximations[i];
        const BigFloat& rho = d_roots.radii[i];
        const BigFloat ax = x.abs();

        BigComplex bx = horner(bc, x);
        BigComplex cx = horner(cc, x);
        BigComplex dx = horner(dc, x);
        const BigFloat eb = eval_error(bac, ax, rho, bits);
        const BigFloat ec = eval_error(cac, ax, rho, bits);
        const BigFloat ed = eval_error(dac, ax, rho, bits);

        BigComplex e = cx * dx;
        const BigFloat ae = e.abs();
        const BigFloat acx = cx.abs();
        const BigFloat adx = dx.abs();
        const BigFloat ee = acx * ed + adx * ec + ec * ed + eight * u * acx * adx;
        if (!(ee + ee < ae)) throw PrecisionEscalation("residue_sum: pole factor not separated from zero");

        BigComplex term = bx / e;
        const BigFloat aterm = term.abs();
        const BigFloat eterm = (bx.abs() * ee + ae * eb) / (ae * (ae - ee)) + eight * u * aterm;
        out.value += term;
        out.error += eterm;
        magnitude += aterm;
    }
    out.error += BigFloat(2.0 * static_cast<double>(d_roots.size() + 1), bits) * u * magnitude;
    out.error = out.error * one_plus_slack(bits);

    if (out.value.im.abs() > out.error)
        throw ConsistencyError("residue_sum: imaginary part " + out.value.im.str(6) + " exceeds error bound " +
                               out.error.str(6));
    return out;
}

DenominatorBound denominator_bound(const Integrand& ig) {
    auto as_int = [](const Rational& r, const char* what) {
        if (!r.is_integer()) throw DomainError(std::string("denominator_bound: non-integer ") + what);
        return r.numerator();
    };
    DenominatorBound db;
    db.R = as_int(resultant(ig.c, ig.d), "resultant");
    db.D = as_int(discriminant(ig.d), "discriminant");
    if (db.R == 0) throw DomainError("degenerate integrand: c and d share a root");
    if (db.D == 0) throw DomainError("degenerate integrand: d has a repeated root");

    const unsigned deg_b = static_cast<unsigned>(std::max(ig.b.degree(), 0));
    const unsigned deg_c = static_cast<unsigned>(ig.c.degree());
    const unsigned deg_d = static_cast<unsigned>(ig.d.degree());
    const Rational corr = ig.c.lc().pow(deg_d) * ig.d.lc().pow(deg_b + deg_c + 1);
    db.lc_correction = as_int(corr.abs(), "leading coefficient");
    db.delta = ::abs(ig.scale.denominator() * db.R * db.D * db.lc_correction);
    return db;
}

IntegrationResult integrate_exact_detailed(const Integrand& ig, int start_bits, int max_bits) {
    if (start_bits < 32 || start_bits > max_bits) throw DomainError("integrate_exact: bad precision range");
    IntegrationResult result;
    result.bound = denominator_bound(ig);
    if (ig.b.is_zero() || ig.scale.is_zero()) {
        result.value = Rational(0);
        result.precision_bits = start_bits;
        return result;
    }

    const Rational delta(result.bound.delta);
    const Rational quarter(1, 4);
    std::vector<BigComplex> seeds;
    bool c_checked = ig.c.degree() < 1;

    for (int bits = start_bits; bits <= max_bits; bits *= 2) {
        ++result.attempts;
        try {
            // The sum carries at least 2^-bits relative error, so delta * value
            // cannot be pinned to an integer below this precision.
            if (static_cast<int>(mpz_sizeinbase(result.bound.delta.get_mpz_t(), 2)) + 2 > bits)
                throw PrecisionEscalation("integrate_exact: precision below log2(delta)");
            RootSet droots = find_roots(ig.d, bits, seeds.empty() ? nullptr : &seeds);
            seeds = droots.approximations;
            auto [inside, outside] = classify_roots(droots, ig.radius);
            if (outside.size() != 0)
                throw ConsistencyError("integrand contract violated: a root of d lies outside the contour");
            if (!c_checked) {
                auto [c_in, c_out] = classify_roots(find_roots(ig.c, bits), ig.radius);
                if (c_in.size() != 0)
                    throw ConsistencyError("integrand contract violated: a root of c lies inside the contour");
                c_checked = true;
            }

            ResidueValue s = residue_sum(ig.b, ig.c, ig.d, droots);
            const auto wide = static_cast<mpfr_prec_t>(bits + mpz_sizeinbase(result.bound.delta.get_mpz_t(), 2) + 64);
            const BigFloat factor(delta * ig.scale, wide);
            const BigFloat scaled = with_precision(s.value.re, wide) * factor;
            const BigFloat scaled_err = with_precision(s.error, wide) * factor.abs() * one_plus_slack(wide);
            if (!(scaled_err < BigFloat(quarter, wide)))
                throw PrecisionEscalation("integrate_exact: error bound too large");

            const BigInt k = scaled.round();
            const BigFloat dist = (scaled - BigFloat(Rational(k), wide)).abs();
            if (!(dist < BigFloat(quarter, wide)))
                throw ConsistencyError("integrate_exact: delta * value is not near an integer; denominator bound unsound");
            result.value = Rational(k, result.bound.delta);
            result.precision_bits = bits;
            result.scaled_error = scaled_err.to_double();
            return result;
        } catch (const PrecisionEscalation&) {
            continue;
        }
    }
    throw PrecisionFailure("integrate_exact: no certified result within " + std::to_string(max_bits) + " bits");
}

Rational integrate_exact(const Integrand& ig, int start_bits, int max_bits) {
    return integrate_exact_detailed(ig, start_bits, max_bits).value;
}

Rational p_numeric(int j, int n) {
    if (n < 2 || j < 0 || j > n)
        throw DomainError("p_numeric: need n >= 2 and 0 <= j <= n, got j=" + std::to_string(j) +
                          " n=" + std::to_string(n));
    if (j == 0) return Rational(1);
    if (j == n) return Rational(0);
    return integrate_exact(build_integrand(j, n));
}

}  // namespace qwalk
