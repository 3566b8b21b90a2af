#include "qwalk/simulator.hpp"

#include "qwalk/errors.hpp"

#include <algorithm>
#include <string>

namespace qwalk {

namespace {

void require_interior(int j, int n, const char* what) {
    if (n < 2 || j < 1 || j > n - 1)
        throw DomainError(std::string(what) + ": need n >= 2 and 1 <= j <= n-1, got j=" + std::to_string(j) +
                          " n=" + std::to_string(n));
}

Rational squared_over_pow2(const BigInt& a, int k) {
    BigInt den = 1;
    den <<= static_cast<mp_bitcnt_t>(k);
    return Rational(a * a, den);
}

struct Walker {
    int n;
    int m_max;
    Barrier target;
    std::vector<std::int64_t> counts;

    // `last_left`: previous move was L (the walk starts facing R).
    void descend(int pos, bool last_left, int length, int sign) {
        if (length == m_max) return;
        // Move L.
        {
            const int s = last_left ? -sign : sign;
            const int next = pos - 1;
            if (next == 0) {
                if (target == Barrier::left) counts[static_cast<std::size_t>(length)] += s;
            } else {
                descend(next, true, length + 1, s);
            }
        }
        // Move R.
        {
            const int next = pos + 1;
            if (next == n) {
                if (target == Barrier::right) counts[static_cast<std::size_t>(length)] += sign;
            } else {
                descend(next, false, length + 1, sign);
            }
        }
    }
};

}  // namespace

AmplitudeState AmplitudeState::start(int j, int n) {
    require_interior(j, n, "AmplitudeState::start");
    AmplitudeState s;
    s.n = n;
    s.left.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    s.right.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    s.right[static_cast<std::size_t>(j)] = 1;
    return s;
}

Rational AmplitudeState::interior_mass() const {
    BigInt sum = 0;
    for (int s = 1; s < n; ++s) {
        const auto i = static_cast<std::size_t>(s);
        sum += left[i] * left[i] + right[i] * right[i];
    }
    BigInt den = 1;
    den <<= static_cast<mp_bitcnt_t>(step);
    return Rational(sum, den);
}

bool AmplitudeState::interior_empty() const {
    auto zero = [](const BigInt& a) { return a == 0; };
    return std::all_of(left.begin(), left.end(), zero) && std::all_of(right.begin(), right.end(), zero);
}

bool AmplitudeState::conserved() const { return absorbed_left + absorbed_right + interior_mass() == Rational(1); }

AmplitudeState step(const AmplitudeState& state) {
    const int n = state.n;
    AmplitudeState next;
    next.n = n;
    next.step = state.step + 1;
    next.left.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    next.right.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int s = 1; s < n; ++s) {
        const auto i = static_cast<std::size_t>(s);
        const BigInt& r = state.right[i];
        const BigInt& l = state.left[i];
        if (r == 0 && l == 0) continue;
        next.right[i + 1] += r + l;
        next.left[i - 1] += r - l;
    }
    next.arrived_left = next.left[0];
    next.arrived_right = next.right[static_cast<std::size_t>(n)];
    next.left[0] = 0;
    next.right[static_cast<std::size_t>(n)] = 0;
    next.absorbed_left = state.absorbed_left + squared_over_pow2(next.arrived_left, next.step);
    next.absorbed_right = state.absorbed_right + squared_over_pow2(next.arrived_right, next.step);
    return next;
}

SimulationReport simulate(int j, int n, const Rational& tail_eps, int max_steps) {
    require_interior(j, n, "simulate");
    if (tail_eps.sign() <= 0) throw DomainError("simulate: tail_eps must be positive");
    AmplitudeState state = AmplitudeState::start(j, n);
    Rational residual(1);
    while (!(residual < tail_eps)) {
        if (state.step >= max_steps) {
            SimulationReport partial{state.absorbed_left, state.absorbed_right, residual, state.step};
            throw SimulationBudgetExceeded("simulate: step budget " + std::to_string(max_steps) +
                                               " exhausted with residual " + residual.decimal(12),
                                           std::move(partial));
        }
        state = step(state);
        residual = state.interior_mass();
    }
    return {state.absorbed_left, state.absorbed_right, residual, state.step};
}

int path_sign(std::string_view moves) {
    int sign = 1;
    for (std::size_t i = 1; i < moves.size(); ++i)
        if (moves[i] == 'L' && moves[i - 1] == 'L') sign = -sign;
    return sign;
}

SignedPathTally enumerate_paths(int j, int n, int m_max, Barrier target) {
    require_interior(j, n, "enumerate_paths");
    if (m_max < 1 || m_max > kMaxEnumerationLength)
        throw DomainError("enumerate_paths: m_max must be in [1, " + std::to_string(kMaxEnumerationLength) +
                          "], got " + std::to_string(m_max));
    Walker w{n, m_max, target, std::vector<std::int64_t>(static_cast<std::size_t>(m_max), 0)};
    w.descend(j, false, 0, 1);

    SignedPathTally tally;
    tally.j = j;
    tally.n = n;
    tally.target = target;
    for (auto c : w.counts) tally.counts.emplace_back(static_cast<long>(c));
    return tally;
}

}  // namespace qwalk
