#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Suites: table, methods, identities, oracles, lemmas, limit, oeis, all.
/// `n_max` bounds the rows each suite sweeps; suites with a natural cap
/// (reference table rows, path enumeration) clamp it further.
std::vector<CheckResult> run_verification(std::string_view suite, int n_max);

bool is_known_suite(std::string_view suite);

/// Published absorption table, rows n = 2..9 over the row's common
/// denominator, e.g. {"7/10", "4/10", "3/10"} for n = 4.
const std::vector<std::vector<std::string>>& reference_table();

/// Reduced numerators of p_1^(n) for n = 2..9.
const std::vector<long>& reference_p1_numerators();

}  // namespace qwalk
