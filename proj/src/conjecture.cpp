#include "permident/conjecture.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "permident/exact.hpp"

namespace permident {

nlohmann::json ConjectureReport::to_json() const {
    nlohmann::json j{{"trial", trial},        {"seed", seed},   {"n", n},
                     {"lhs", lhs.str()},      {"rhs", rhs.str()}, {"holds", holds},
                     {"matrix", T.to_text()}};
    j["ratio"] = ratio ? nlohmann::json(ratio->str()) : nlohmann::json(nullptr);
    return j;
}

std::string ConjectureReport::to_json_line() const {
    return to_json().dump();
}

Matrix block_double(const Matrix& t) {
    if (!t.is_square()) {
        throw NotSquareError("block doubling requires a square matrix");
    }
    const int n = t.rows();
    Matrix b(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& e = t.at(i, j);
            b.at(i, j) = e;
            b.at(i, j + n) = e;
            b.at(i + n, j) = e;
            b.at(i + n, j + n) = e;
        }
    }
    return b;
}

ConjectureReport check_conjecture(const Matrix& t, const Guards& guards) {
    if (!t.is_square()) {
        throw NotSquareError("conjecture check requires a square matrix");
    }
    const int n = t.rows();
    if (rank(t) > 2) {
        throw RankTooHighError("conjecture check requires rank <= 2");
    }
    if (2 * n > guards.ryser_max) {
        throw TooLargeError("conjecture check needs 2n = " + std::to_string(2 * n) +
                            " within the Ryser guard " + std::to_string(guards.ryser_max));
    }
    ConjectureReport r;
    r.T = t;
    r.n = n;
    r.lhs = perm_ryser(block_double(t), guards);
    const Rational pt = perm_ryser(t, guards);
    r.rhs = Rational(binomial(static_cast<unsigned long>(2 * n), n)) * pt * pt;
    r.holds = (r.lhs <= r.rhs);
    if (!r.rhs.is_zero()) {
        r.ratio = r.lhs / r.rhs;
    }
    return r;
}

std::vector<ConjectureReport> hunt(int n, int trials, int entry_bound, SignMode mode,
                                   std::uint64_t seed, const Guards& guards) {
    if (trials < 1) {
        throw Error("hunt needs at least one trial");
    }
    if (2 * n > guards.ryser_max) {
        throw TooLargeError("hunt needs 2n = " + std::to_string(2 * n) +
                            " within the Ryser guard " + std::to_string(guards.ryser_max));
    }
    const SampleMode sample =
        (mode == SignMode::Positive) ? SampleMode::Positive : SampleMode::General;
    std::vector<ConjectureReport> reports(static_cast<std::size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(t));
        const Matrix m = random_rank2(n, entry_bound, s, sample);
        ConjectureReport r = check_conjecture(m, guards);
        r.seed = s;
        r.trial = t;
        reports[static_cast<std::size_t>(t)] = std::move(r);
    }
    std::stable_partition(reports.begin(), reports.end(),
                          [](const ConjectureReport& r) { return !r.holds; });
    return reports;
}

}  // namespace permident
