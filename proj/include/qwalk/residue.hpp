#pragma once

/*
 * Exact contour integration of rational functions by numeric
 * residues plus an integer denominator bound.
 *
 * An integrand is  scale * b / (c d)  on the circle |t| = radius, where b,
 * c, d have integer coefficients, every root of d lies inside the circle
 * and every root of c outside. The integral (divided by 2 pi i) is
 *
 *     scale * sum_{d(x)=0} b(x) / (c(x) d'(x)),
 *
 * a rational number whose denominator divides
 *
 *     delta = |den(scale) * Res(c,d) * disc(d) * lc(c)^deg(d) * lc(d)^(deg b + deg c + 1)|.
 *
 * The roots of d are approximated with certified inclusion disks, the sum
 * is evaluated with a rigorous error bound, and delta * value is rounded
 * to the nearest integer once the error is below 1/4.
 */

#include "qwalk/bigfloat.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qwalk {

struct Integrand {
    Polynomial b;
    Polynomial c;
    Polynomial d;
    Rational scale;
    Rational radius;
};

/// The absorption integrand for p_j^(n) in t = z^2 on |t| = 1/2:
///     b = t^{j-1} r_{n-j}^2,  c = r_n + 2t r_{n-1},  d = r_n - r_{n-1},
///     scale = (-1)^j.
Integrand build_integrand(int j, int n);

/// Brings arbitrary rational b, c, d to integer coefficients, folding the
/// cleared denominators into the scale.
Integrand make_integrand(const Polynomial& b, const Polynomial& c, const Polynomial& d, const Rational& scale,
                         const Rational& radius);

struct RootSet {
    std::vector<BigComplex> approximations;
    /// Per-root inclusion radius; each disk holds exactly one root.
    std::vector<BigFloat> radii;
    /// max of radii.
    BigFloat error_radius;
    int precision_bits = 0;

    std::size_t size() const { return approximations.size(); }
};

/// All complex roots of a squarefree polynomial (Aberth iteration), with
/// inclusion disks certified by the Weierstrass-correction bound
/// |x - z_i| <= deg * |p(z_i) / (lc * prod_{j != i}(z_i - z_j))|.
/// Exact zero roots are split off first and get radius 0. `seeds`, when
/// given, must hold deg(p) starting points.
/// Throws PrecisionEscalation if the disks cannot be certified disjoint.
RootSet find_roots(const Polynomial& p, int precision_bits, const std::vector<BigComplex>* seeds = nullptr);

/// Splits roots into those strictly inside and strictly outside |t| = radius.
/// Throws PrecisionEscalation if some disk meets the circle.
std::pair<RootSet, RootSet> classify_roots(const RootSet& roots, const Rational& radius);

struct ResidueValue {
    BigComplex value;
    /// Rigorous bound on |value - true sum|.
    BigFloat error;
};

/// sum over roots x of d of b(x) / (c(x) d'(x)), with error propagated from
/// the root disks and from rounding.
ResidueValue residue_sum(const Polynomial& b, const Polynomial& c, const Polynomial& d, const RootSet& d_roots);

struct DenominatorBound {
    BigInt R;
    BigInt D;
    BigInt lc_correction;
    BigInt delta;
};

/// Throws DomainError on a degenerate integrand (Res(c,d) = 0 or disc(d) = 0).
DenominatorBound denominator_bound(const Integrand& ig);

inline constexpr int kStartPrecisionBits = 128;
inline constexpr int kMaxPrecisionBits = 8192;

struct IntegrationResult {
    Rational value;
    DenominatorBound bound;
    int precision_bits = 0;
    /// Certified |delta * value_numeric - nearest integer| bound at the end.
    double scaled_error = 0.0;
    int attempts = 0;
};

IntegrationResult integrate_exact_detailed(const Integrand& ig, int start_bits = kStartPrecisionBits,
                                           int max_bits = kMaxPrecisionBits);

/// Exact value of (1 / 2 pi i) times the contour integral. Throws
/// PrecisionFailure if max_bits is not enough.
Rational integrate_exact(const Integrand& ig, int start_bits = kStartPrecisionBits, int max_bits = kMaxPrecisionBits);

/// p_j^(n) by numeric residues; the `numeric` method.
Rational p_numeric(int j, int n);

}  // namespace qwalk
