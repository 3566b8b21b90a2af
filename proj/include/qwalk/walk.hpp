#pragma once

/*
 * Generating functions and exact absorption probabilities for the
 * Hadamard walk on {0, ..., n} with absorbing ends.
 *
 * Everything here is built on the polynomial family r_k(t):
 *
 *     r_0 = 0,  r_1 = 1,  r_{k+2} = (1 - 2t) r_{k+1} + t r_k,
 *
 * with t = z^2. The path-count generating function of a walk started in
 * |j, R> is
 *
 *     f_j^(n)(z) = (-1)^(j-1) z^j r_{n-j}(t) / (r_n(t) + 2t r_{n-1}(t)),
 *
 * and the probability of absorption at site 0 is
 *
 *     p_j^(n) = 1/2 * r_{n-j} (r_j - r_{j-1}) / (r_n - r_{n-1})  at t = -1/2.
 */

#include "qwalk/polynomial.hpp"
#include "qwalk/rational.hpp"
#include "qwalk/rational_function.hpp"

#include <shared_mutex>
#include <string_view>
#include <vector>

namespace qwalk {

/// Right barrier n and start site j; validated on construction.
struct WalkParams {
    int n;
    int j;

    /// Requires n >= 2 and 0 <= j <= n.
    WalkParams(int n, int j);
};

/// Append-only, thread-safe cache of r_0, r_1, ... in the variable t.
class RFamily {
public:
    RFamily();
    RFamily(const RFamily&) = delete;
    RFamily& operator=(const RFamily&) = delete;

    Polynomial r(int k);
    /// Number of cached entries.
    std::size_t size() const;

    /// Process-wide family shared by all free functions below.
    static RFamily& shared();

private:
    mutable std::shared_mutex mutex_;
    std::vector<Polynomial> cache_;
};

Polynomial r_poly(int k, RFamily& family = RFamily::shared());

/// f_j^(n) from the closed r-form. j == n gives the zero function.
RationalFunction gf(int j, int n);

/// f_j^(n) built from the f_1 recurrence
///     f_1^(2) = z,  f_1^(n) = z (1 - 2z f_1^(n-1)) / (1 - z f_1^(n-1)),
/// and the first-visit-to-1 decomposition
///     f_j^(n) = f_{j-1}^(n-1) (f_1^(n) - 2z).
/// Independent of gf(); the two are cross-checked in tests.
RationalFunction gf_via_recurrence(int j, int n);

/// Power-series coefficients c_1 .. c_{m_max} of f_j^(n) at z = 0, i.e.
/// signed path counts by length. Computed by exact series division.
std::vector<BigInt> gf_coefficients(int j, int n, int m_max);

/// Absorption probability at 0 via the residue at t = -1/2.
/// j == 0 returns 1 by convention.
Rational p_exact(int j, int n);

/// Absorption probability from the closed form in Q(sqrt 2),
///     sqrt2/4 (A^{n-j} - B^{n-j})(A^{j-1} + B^{j-1}) / (A^{n-1} + B^{n-1}),
/// A = 2 + sqrt2, B = 2 - sqrt2. Valid for 1 <= j <= n only.
Rational p_closed(int j, int n);

/// H_j / (r_n - r_{n-1}) where
///     H_j = t^{j-1}(1+2t) r_{n-j} + (-1)^j (r_j - r_{j-1})(r_n + 2t r_{n-1}).
/// Throws ConsistencyError if the division is not exact.
Polynomial h_quotient(int j, int n);

/// [p_1, ..., p_{n-1}] for row n, each value cross-checked between
/// p_exact and p_closed.
std::vector<Rational> row_table(int n);

/// LCM of the row's reduced denominators, the presentation used when a
/// row is printed over a common denominator.
BigInt row_common_denominator(const std::vector<Rational>& row);

enum class Method { closed, residue, numeric, simulate };

std::string_view method_name(Method m);
Method parse_method(std::string_view s);

struct AbsorptionResult {
    Rational p_left;
    Rational p_right;
    Method method;
};

/// Exact absorption probabilities by `closed` or `residue`, including the
/// j = 0 and j = n conventions. The numeric and simulate methods live in
/// their own modules.
AbsorptionResult absorption(const WalkParams& params, Method method);

}  // namespace qwalk
