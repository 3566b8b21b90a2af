#pragma once

/*
 * Brute-force oracles: exact amplitude evolution and signed path
 * enumeration for the absorbing Hadamard walk.
 *
 * One step of the walk, with every amplitude scaled by 1/sqrt2:
 *
 *     |s,R> -> |s+1,R> + |s-1,L>
 *     |s,L> -> |s+1,R> - |s-1,L>
 *
 * Amplitudes are kept as integers times a global (1/sqrt2)^step, so a
 * stored integer a at step k has squared magnitude a^2 / 2^k. Amplitude
 * reaching site 0 or n is measured (its squared magnitude is banked) and
 * removed after every step.
 */

#include "qwalk/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

enum class Barrier { left, right };

struct AmplitudeState {
    int n = 2;
    int step = 0;
    /// Integer numerators indexed by site 0..n; only 1..n-1 are ever nonzero.
    std::vector<BigInt> left;
    std::vector<BigInt> right;
    Rational absorbed_left;
    Rational absorbed_right;
    /// Numerators that reached 0 and n on the most recent step.
    BigInt arrived_left;
    BigInt arrived_right;

    /// |j, R> on {0..n}; requires 1 <= j <= n-1.
    static AmplitudeState start(int j, int n);

    /// Sum of |amplitude|^2 over interior sites.
    Rational interior_mass() const;
    bool interior_empty() const;
    /// absorbed_left + absorbed_right + interior_mass == 1.
    bool conserved() const;
};

/// Applies one unitary step followed by absorption at both ends.
AmplitudeState step(const AmplitudeState& state);

struct SimulationReport {
    Rational p_left_lower;
    Rational p_right_lower;
    Rational residual;
    int steps_run = 0;

    /// The true absorption probability at 0 lies in [lower, upper].
    Rational p_left_upper() const { return p_left_lower + residual; }
    bool brackets(const Rational& p) const { return p_left_lower <= p && p <= p_left_upper(); }
};

class SimulationBudgetExceeded : public std::runtime_error {
public:
    SimulationBudgetExceeded(const std::string& what, SimulationReport partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const SimulationReport& partial() const { return partial_; }

private:
    SimulationReport partial_;
};

inline constexpr int kDefaultStepBudget = 10000;

/// Steps from |j,R> until the interior mass drops below tail_eps.
SimulationReport simulate(int j, int n, const Rational& tail_eps, int max_steps = kDefaultStepBudget);

/// (-1)^(number of LL blocks), overlapping blocks counted ("LLL" -> +1).
int path_sign(std::string_view moves);

/// Signed path counts by length.
struct SignedPathTally {
    int j = 1;
    int n = 2;
    Barrier target = Barrier::left;
    /// counts[m-1] = c_m for m = 1..m_max.
    std::vector<BigInt> counts;

    const BigInt& at(int m) const { return counts.at(static_cast<std::size_t>(m - 1)); }
};

inline constexpr int kMaxEnumerationLength = 24;

/// Depth-first enumeration of move words of length <= m_max that start at
/// j, stay inside (0, n), and are absorbed at `target` on the last move.
SignedPathTally enumerate_paths(int j, int n, int m_max, Barrier target = Barrier::left);

}  // namespace qwalk
