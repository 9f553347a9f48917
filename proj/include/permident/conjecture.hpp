#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permident/identities.hpp"

namespace permident {

/*
 * One trial of the block-permanent inequality
 *   perm([[T, T], [T, T]]) <= C(2n, n) perm(T)^2
 * for a rank <= 2 matrix T. holds is the exact rational comparison; ratio
 * is undefined when the right side is zero. seed reproduces T via
 * random_rank2 when the trial came from the hunter.
 */
struct ConjectureReport {
    Matrix T = Matrix(1, 1);
    int n = 0;
    Rational lhs;
    Rational rhs;
    std::optional<Rational> ratio;
    bool holds = false;
    std::uint64_t seed = 0;
    int trial = -1;

    nlohmann::json to_json() const;
    std::string to_json_line() const;
};

/// The 2n x 2n matrix with every quadrant equal to T.
Matrix block_double(const Matrix& t);

/// Evaluates both sides of the inequality exactly (Ryser on the doubled
/// matrix, no block shortcut). RankTooHigh above rank 2; TooLarge when 2n
/// exceeds the Ryser guard.
ConjectureReport check_conjecture(const Matrix& t, const Guards& guards = {});

enum class SignMode { Positive, Mixed };

/// Randomized counterexample hunt. Trials run concurrently with per-trial
/// seeds derived from (seed, trial); reports come back violations first,
/// trial order within each group.
std::vector<ConjectureReport> hunt(int n, int trials, int entry_bound, SignMode mode,
                                   std::uint64_t seed, const Guards& guards = {});

}  // namespace permident
