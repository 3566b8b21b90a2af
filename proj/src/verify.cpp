#include "qwalk/verify.hpp"

#include "qwalk/bigfloat.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/residue.hpp"
#include "qwalk/simulator.hpp"
#include "qwalk/walk.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace qwalk {

namespace {

using Suite = std::function<void(int, std::vector<CheckResult>&)>;

std::string cell(int n, int j) { return "n=" + std::to_string(n) + " j=" + std::to_string(j); }

// Runs `body`, turning a thrown exception into a failed check.
void check(std::vector<CheckResult>& out, std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), true, {}};
    try {
        r.detail = body();
        if (!r.detail.empty() && r.detail.rfind("FAIL", 0) == 0) r.passed = false;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("FAIL ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string fail(const std::string& what) { return "FAIL " + what; }

void suite_table(int n_max, std::vector<CheckResult>& out) {
    const int top = std::min(n_max, 9);
    check(out, "table: reference rows (reduced and common-denominator)", [&] {
        int cells = 0;
        for (int n = 2; n <= top; ++n) {
            auto row = row_table(n);
            const BigInt den = row_common_denominator(row);
            const auto& expected = reference_table()[static_cast<std::size_t>(n - 2)];
            for (std::size_t k = 0; k < row.size(); ++k) {
                const std::string unreduced = BigInt(row[k].numerator() * (den / row[k].denominator())).get_str() + "/" +
                                              den.get_str();
                if (unreduced != expected[k]) return fail(cell(n, static_cast<int>(k) + 1) + " got " + unreduced);
                if (Rational::parse(expected[k]) != row[k]) return fail(cell(n, static_cast<int>(k) + 1));
                ++cells;
            }
        }
        return std::to_string(cells) + " cells";
    });
}

void suite_methods(int n_max, std::vector<CheckResult>& out) {
    check(out, "methods: closed = residue = numeric", [&] {
        int cells = 0;
        for (int n = 2; n <= n_max; ++n) {
            for (int j = 1; j < n; ++j) {
                const Rational a = p_closed(j, n);
                const Rational b = p_exact(j, n);
                const auto detailed = integrate_exact_detailed(build_integrand(j, n));
                if (a != b || b != detailed.value)
                    return fail(cell(n, j) + ": " + a.str() + " / " + b.str() + " / " + detailed.value.str());
                if (!(Rational(detailed.bound.delta) * b).is_integer())
                    return fail(cell(n, j) + ": delta * p is not an integer");
                ++cells;
            }
        }
        return std::to_string(cells) + " cells";
    });
}

void suite_identities(int n_max, std::vector<CheckResult>& out) {
    const Rational one(1), two(2);
    check(out, "identities: p_1 recurrence p1(n) = (1 + 2 p1(n-1)) / (2 + 2 p1(n-1))", [&] {
        for (int n = 3; n <= n_max; ++n) {
            const Rational prev = p_exact(1, n - 1);
            if (p_exact(1, n) != (one + two * prev) / (two + two * prev)) return fail("n=" + std::to_string(n));
        }
        return std::string("n=3..") + std::to_string(n_max);
    });
    check(out, "identities: row recurrence p_j - 7p_{j+1} + 7p_{j+2} - p_{j+3} = 0", [&] {
        int count = 0;
        for (int n = 4; n <= n_max; ++n) {
            for (int j = 1; j <= n - 3; ++j) {
                Rational s = p_exact(j, n) - Rational(7) * p_exact(j + 1, n) + Rational(7) * p_exact(j + 2, n) -
                             p_exact(j + 3, n);
                if (!s.is_zero()) return fail(cell(n, j));
                ++count;
            }
        }
        return std::to_string(count) + " windows";
    });
    check(out, "identities: outer entries p_1 + p_{n-1} = 1", [&] {
        for (int n = 2; n <= n_max; ++n)
            if (p_exact(1, n) + p_exact(n - 1, n) != one) return fail("n=" + std::to_string(n));
        return std::string();
    });
    check(out, "identities: 2 p_1 = p_2 + 1", [&] {
        for (int n = 2; n <= n_max; ++n)
            if (two * p_exact(1, n) != p_exact(2, n) + one) return fail("n=" + std::to_string(n));
        return std::string();
    });
    check(out, "identities: conventions p_0 = 1, p_n = 0", [&] {
        for (int n = 2; n <= n_max; ++n) {
            if (p_exact(0, n) != one || !p_exact(n, n).is_zero() || !p_closed(n, n).is_zero())
                return fail("n=" + std::to_string(n));
        }
        return std::string();
    });
}

void suite_oracles(int n_max, std::vector<CheckResult>& out) {
    check(out, "oracles: gf = gf_via_recurrence", [&] {
        for (int n = 2; n <= std::min(n_max, 10); ++n)
            for (int j = 1; j < n; ++j)
                if (gf(j, n) != gf_via_recurrence(j, n)) return fail(cell(n, j));
        return std::string();
    });
    check(out, "oracles: series coefficients = signed path enumeration", [&] {
        constexpr int m = 16;
        for (int n = 2; n <= std::min(n_max, 6); ++n)
            for (int j = 1; j < n; ++j)
                if (gf_coefficients(j, n, m) != enumerate_paths(j, n, m).counts) return fail(cell(n, j));
        return std::string("m <= 16");
    });
    check(out, "oracles: absorbed mass = sum c_k^2 2^-k, conservation each step", [&] {
        constexpr int m = 24;
        for (int n = 2; n <= std::min(n_max, 9); ++n) {
            for (int j = 1; j < n; ++j) {
                const auto c = gf_coefficients(j, n, m);
                AmplitudeState s = AmplitudeState::start(j, n);
                Rational mass;
                for (int k = 1; k <= m; ++k) {
                    s = step(s);
                    const auto& ck = c[static_cast<std::size_t>(k - 1)];
                    BigInt pow2 = 1;
                    pow2 <<= static_cast<mp_bitcnt_t>(k);
                    mass += Rational(ck * ck, pow2);
                    if (s.arrived_left != ck || s.absorbed_left != mass || !s.conserved())
                        return fail(cell(n, j) + " step " + std::to_string(k));
                }
            }
        }
        return std::string();
    });
    check(out, "oracles: simulation brackets p (tail 1e-10)", [&] {
        const Rational eps = Rational::parse("1e-10");
        int steps = 0;
        for (int n = 2; n <= std::min(n_max, 9); ++n)
            for (int j = 1; j < n; ++j) {
                auto rep = simulate(j, n, eps);
                if (!rep.brackets(p_exact(j, n))) return fail(cell(n, j));
                steps = std::max(steps, rep.steps_run);
            }
        return "max steps " + std::to_string(steps);
    });
}

void suite_lemmas(int n_max, std::vector<CheckResult>& out) {
    check(out, "lemmas: roots of r_n - r_{n-1} inside |t| = 1/2, roots of r_n + 2t r_{n-1} outside", [&] {
        for (int n = 2; n <= n_max; ++n) {
            const Integrand ig = build_integrand(1, n);
            bool done = false;
            for (int bits = kStartPrecisionBits; bits <= kMaxPrecisionBits && !done; bits *= 2) {
                try {
                    auto [din, dout] = classify_roots(find_roots(ig.d, bits), ig.radius);
                    if (dout.size() != 0) return fail("n=" + std::to_string(n) + ": root of d outside");
                    if (ig.c.degree() >= 1) {
                        auto [cin, cout] = classify_roots(find_roots(ig.c, bits), ig.radius);
                        if (cin.size() != 0) return fail("n=" + std::to_string(n) + ": root of c inside");
                    }
                    done = true;
                } catch (const PrecisionEscalation&) {
                }
            }
            if (!done) return fail("n=" + std::to_string(n) + ": could not certify");
        }
        return std::string();
    });
    check(out, "lemmas: H_j divisible by r_n - r_{n-1}, quotient independent of n", [&] {
        const int top = std::max(n_max, 2);
        for (int j = 1; j <= std::min(top, 10); ++j) {
            const Polynomial ref = h_quotient(j, std::max(j, 2));
            for (int n = std::max(j, 2); n <= std::min(std::max(top, j), 15); ++n)
                if (h_quotient(j, n) != ref) return fail(cell(n, j));
        }
        return std::string();
    });
    check(out, "lemmas: r_n - r_{n-1} has distinct roots", [&] {
        for (int n = 2; n <= n_max; ++n)
            if (discriminant(r_poly(n) - r_poly(n - 1)).is_zero()) return fail("n=" + std::to_string(n));
        return std::string();
    });
    check(out, "lemmas: f_j^(n) share one denominator per row", [&] {
        for (int n = 2; n <= std::min(n_max, 10); ++n) {
            const Polynomial den = gf(1, n).denominator();
            for (int j = 2; j < n; ++j)
                if (gf(j, n).denominator() != den) return fail(cell(n, j));
        }
        return std::string();
    });
    check(out, "lemmas: first-R-move grouping identity", [&] {
        const RationalFunction z(Polynomial({0, 1}, Var::z));
        for (int n = 3; n <= std::min(n_max, 10); ++n) {
            for (int j = 1; j < n - 1; ++j) {
                RationalFunction rhs = z * gf(j + 1, n);
                for (int k = 2; k <= j; ++k) {
                    RationalFunction zk(Polynomial::monomial(Rational(k % 2 == 0 ? 1 : -1), static_cast<unsigned>(k), Var::z));
                    rhs = rhs + zk * gf(j + 2 - k, n);
                }
                rhs = rhs + RationalFunction(Polynomial::monomial(Rational(j % 2 == 1 ? 1 : -1),
                                                                  static_cast<unsigned>(j), Var::z));
                if (gf(j, n) != rhs) return fail(cell(n, j));
            }
        }
        return std::string();
    });
}

void suite_limit(int, std::vector<CheckResult>& out) {
    constexpr mpfr_prec_t bits = 200;
    const BigFloat root2 = BigFloat(2.0, bits).sqrt();
    check(out, "limit: |p_1^(40) - sqrt2/2| < 1e-20", [&] {
        const BigFloat gap = (BigFloat(p_exact(1, 40), bits) - root2.ldexp(-1)).abs();
        if (!(gap < BigFloat(Rational::parse("1e-20"), bits))) return fail(gap.str(6));
        return "gap " + gap.str(6);
    });
    check(out, "limit: |p_20^(40) - sqrt2/4| < 1e-8", [&] {
        const BigFloat gap = (BigFloat(p_exact(20, 40), bits) - root2.ldexp(-2)).abs();
        if (!(gap < BigFloat(Rational::parse("1e-8"), bits))) return fail(gap.str(6));
        return "gap " + gap.str(6);
    });
}

void suite_oeis(int n_max, std::vector<CheckResult>& out) {
    check(out, "oeis: numerators of p_1 (A084068)", [&] {
        std::ostringstream got;
        const auto& expected = reference_p1_numerators();
        for (int n = 2; n <= std::min(n_max, 9); ++n) {
            const BigInt num = p_exact(1, n).numerator();
            got << (n > 2 ? "," : "") << num.get_str();
            if (num != expected[static_cast<std::size_t>(n - 2)]) return fail(got.str());
        }
        return got.str();
    });
}

const std::vector<std::pair<std::string_view, Suite>>& suites() {
    static const std::vector<std::pair<std::string_view, Suite>> all = {
        {"table", suite_table},   {"methods", suite_methods}, {"identities", suite_identities},
        {"oracles", suite_oracles}, {"lemmas", suite_lemmas}, {"limit", suite_limit},
        {"oeis", suite_oeis},
    };
    return all;
}

}  // namespace

const std::vector<std::vector<std::string>>& reference_table() {
    static const std::vector<std::vector<std::string>> table = {
        {"1/2"},
        {"2/3", "1/3"},
        {"7/10", "4/10", "3/10"},
        {"12/17", "7/17", "6/17", "5/17"},
        {"41/58", "24/58", "21/58", "20/58", "17/58"},
        {"70/99", "41/99", "36/99", "35/99", "34/99", "29/99"},
        {"239/338", "140/338", "123/338", "120/338", "119/338", "116/338", "99/338"},
        {"408/577", "239/577", "210/577", "205/577", "204/577", "203/577", "198/577", "169/577"},
    };
    return table;
}

const std::vector<long>& reference_p1_numerators() {
    static const std::vector<long> nums = {1, 2, 7, 12, 41, 70, 239, 408};
    return nums;
}

bool is_known_suite(std::string_view suite) {
    if (suite == "all") return true;
    return std::any_of(suites().begin(), suites().end(), [&](const auto& s) { return s.first == suite; });
}

std::vector<CheckResult> run_verification(std::string_view suite, int n_max) {
    if (!is_known_suite(suite)) throw DomainError("unknown suite '" + std::string(suite) + "'");
    if (n_max < 2) throw DomainError("verify: n-max must be >= 2");
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : suites())
        if (suite == "all" || suite == name) fn(n_max, out);
    return out;
}

}  // namespace qwalk
